"""
Verify command.

Runs one lemma over the configurations of an arc (or, for laplace, over
random vectors of F_q^k) and prints the reports followed by the summary
line "PASS m/m" or "FAIL j/m (first counterexample: ...)".
"""

import argparse
import json

from arclab.commands.deps import (
    add_arc_arguments,
    add_policy_arguments,
    arc_from_args,
    emit,
    get_settings,
    policy_from_args,
)
from arclab.core.exceptions import ConfigurationError
from arclab.schemas.identity import LEMMA_TAGS
from arclab.services.suite_service import run_laplace_suite, run_suite
from arclab.services.tangent_service import TangentBundle
from arclab.utils.gf import field_new


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("verify", help="verify a lemma on an arc")
    parser.add_argument("--lemma", choices=LEMMA_TAGS, required=True)
    parser.add_argument("--arc", metavar="FILE", default=None, help="arc file (not used by laplace)")
    parser.add_argument("--format", choices=("matrix", "json"), default="matrix")
    parser.add_argument("--modulus", type=int, nargs="+", default=None, metavar="C")
    parser.add_argument("--p", type=int, default=None, help="laplace only: characteristic")
    parser.add_argument("--h", type=int, default=1, help="laplace only: extension degree")
    parser.add_argument("--k", type=int, default=None, help="laplace only: dimension")
    add_policy_arguments(parser)
    parser.add_argument("--rescale", type=int, default=None, metavar="SEED", help="rescale every tangent form")
    parser.add_argument("--jobs", type=int, default=None, help="worker processes")
    parser.add_argument("--summary-only", action="store_true", help="omit the report list in text mode")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    policy = policy_from_args(args)
    jobs = args.jobs or get_settings().JOBS

    if args.lemma == "laplace":
        if args.p is None or args.k is None:
            raise ConfigurationError("laplace needs --p and --k")
        samples = args.samples or get_settings().LAPLACE_SAMPLES
        result = run_laplace_suite(field_new(args.p, args.h, args.modulus), args.k, samples, policy.seed)
    else:
        if args.arc is None:
            raise ConfigurationError(f"lemma '{args.lemma}' needs --arc")
        bundle = TangentBundle(arc_from_args(args), scale_seed=args.rescale)
        result = run_suite(bundle, args.lemma, policy, jobs=jobs)

    summary = result.summary.line()
    lines = [] if args.summary_only else [json.dumps([r.model_dump(mode="json") for r in result.reports])]
    lines.append(summary)
    emit(args, "\n".join(lines), {"reports": [r.model_dump(mode="json") for r in result.reports], "summary": summary})
    return 0 if result.summary.ok else 1
