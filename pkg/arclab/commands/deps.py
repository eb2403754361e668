"""
Shared helpers for commands.

This module centralizes what several subcommands need:
- Field and arc arguments and their loading
- Sampling policy arguments
- Output emission (text on stdout, or one JSON object in --json mode)
"""

import argparse
import json
from typing import Any

from pydantic import BaseModel

from arclab.core.config import Settings, get_settings
from arclab.models.arc import Arc
from arclab.schemas.identity import SamplingPolicy
from arclab.utils.formats import load_arc
from arclab.utils.gf import FieldSpec, field_new

__all__ = [
    "Settings",
    "get_settings",
    "add_field_arguments",
    "field_from_args",
    "add_arc_arguments",
    "arc_from_args",
    "add_policy_arguments",
    "policy_from_args",
    "emit",
]


def add_field_arguments(parser: argparse.ArgumentParser, with_k: bool = True) -> None:
    """Add --p, --h, --modulus and optionally --k."""
    parser.add_argument("--p", type=int, required=True, help="prime characteristic")
    parser.add_argument("--h", type=int, default=1, help="extension degree (default 1)")
    parser.add_argument(
        "--modulus",
        type=int,
        nargs="+",
        default=None,
        metavar="C",
        help="explicit reduction polynomial, coefficients low degree first",
    )
    if with_k:
        parser.add_argument("--k", type=int, required=True, help="dimension")


def field_from_args(args: argparse.Namespace) -> FieldSpec:
    """Construct the field named by --p, --h and --modulus."""
    return field_new(args.p, args.h, args.modulus)


def add_arc_arguments(parser: argparse.ArgumentParser, with_modulus: bool = True) -> None:
    """Add --arc, --format and, unless the field arguments already did, --modulus."""
    parser.add_argument("--arc", required=True, metavar="FILE", help="arc file")
    parser.add_argument(
        "--format",
        choices=("matrix", "json"),
        default="matrix",
        help="arc file format (default matrix text)",
    )
    if with_modulus:
        parser.add_argument(
            "--modulus",
            type=int,
            nargs="+",
            default=None,
            metavar="C",
            help="explicit reduction polynomial for matrix files",
        )


def arc_from_args(args: argparse.Namespace) -> Arc:
    """Load the arc named by --arc."""
    return load_arc(args.arc, fmt=args.format, modulus=args.modulus)


def add_policy_arguments(parser: argparse.ArgumentParser) -> None:
    """Add --exhaustive, --samples and --seed."""
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--exhaustive", action="store_true", help="verify every configuration")
    group.add_argument("--samples", type=int, default=None, help="number of sampled configurations")
    parser.add_argument("--seed", type=int, default=None, help="sampling seed (default ARCLAB_DEFAULT_SEED)")


def policy_from_args(args: argparse.Namespace) -> SamplingPolicy:
    """
    Sampling policy from the command line, settings filling the gaps.

    An explicit --samples also caps the exhaustive budget.
    """
    return SamplingPolicy.from_settings(
        exhaustive=args.exhaustive,
        budget=args.samples,
        samples=args.samples,
        seed=args.seed,
    )


def emit(args: argparse.Namespace, text: str, payload: BaseModel | dict[str, Any]) -> None:
    """Print text, or the JSON payload when --json is set."""
    if getattr(args, "json", False):
        data = payload.model_dump(mode="json") if isinstance(payload, BaseModel) else payload
        print(json.dumps(data))
    else:
        print(text.rstrip("\n"))
