"""
Construct command.

Builds a normal rational curve, a regular hyperoval or the frame and
prints it in matrix text format (or as an arc payload with --json).
"""

import argparse

from arclab.commands.deps import add_field_arguments, emit, field_from_args
from arclab.schemas.arc import ArcPayload
from arclab.services.arc_service import CONSTRUCTORS, construct
from arclab.utils.formats import format_matrix, save_arc


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("construct", help="build a classical arc")
    parser.add_argument("kind", choices=sorted(CONSTRUCTORS), help="construction")
    add_field_arguments(parser)
    parser.add_argument("--out", metavar="FILE", default=None, help="also write the arc to FILE")
    parser.add_argument("--out-format", choices=("matrix", "json"), default="matrix")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    arc = construct(args.kind, field_from_args(args), args.k)
    if args.out:
        save_arc(arc, args.out, fmt=args.out_format)
    emit(args, format_matrix(arc), ArcPayload.from_arc(arc))
    return 0
