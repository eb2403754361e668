"""
MDS check command.

Exit 0 when every k-subset of the file's points is a basis, 1 with the
lexicographically first singular subset otherwise.
"""

import argparse

from arclab.commands.deps import add_arc_arguments, arc_from_args, emit
from arclab.core.logging import get_logger
from arclab.services.arc_service import mds_check, mds_check_full

logger = get_logger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("mds-check", help="check the arc property of a point file")
    add_arc_arguments(parser)
    parser.add_argument("--full", action="store_true", help="scan every k-subset instead of the incremental check")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    arc = arc_from_args(args)
    check = mds_check_full if args.full else mds_check
    result = check(arc.field, arc.k, arc.points)
    if result.passed:
        emit(args, f"PASS {arc.label()}", result)
        return 0
    witness = " ".join(str(i) for i in result.witness or [])
    logger.info(f"{arc.label()} fails the MDS check")
    emit(args, f"FAIL witness {witness}", result)
    return 1
