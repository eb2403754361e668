"""
Dual command: the arc of the dual code, in matrix text format.
"""

import argparse

from arclab.commands.deps import add_arc_arguments, arc_from_args, emit
from arclab.schemas.arc import ArcPayload
from arclab.services.arc_service import dual_arc
from arclab.utils.formats import format_matrix


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("dual", help="arc of the dual MDS code")
    add_arc_arguments(parser)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    dual = dual_arc(arc_from_args(args))
    emit(args, format_matrix(dual), ArcPayload.from_arc(dual))
    return 0
