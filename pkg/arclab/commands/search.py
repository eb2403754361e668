"""
Search command.

Prints "max=<size>", the witness in matrix text format and a JSON stats
line {"nodes", "elapsed"}.
"""

import argparse
import json

from arclab.commands.deps import emit, get_settings
from arclab.schemas.search import SearchTask
from arclab.services.search_service import max_arc_size, witness_arc
from arclab.utils.formats import format_matrix


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("search", help="exhaustive search for the maximum arc size")
    parser.add_argument("--p", type=int, required=True)
    parser.add_argument("--h", type=int, default=1)
    parser.add_argument("--k", type=int, required=True)
    parser.add_argument("--naive", action="store_true", help="search from the empty arc without frame fixing")
    parser.add_argument("--census", action="store_true", help="count complete arcs by size")
    parser.add_argument("--budget", type=int, default=None, help="node budget")
    parser.add_argument("--time-budget", type=float, default=None, help="wall-clock budget in seconds")
    parser.add_argument("--jobs", type=int, default=None, help="worker processes")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    settings = get_settings()
    task = SearchTask(
        p=args.p,
        h=args.h,
        k=args.k,
        mode="census" if args.census else "max-size",
        naive=args.naive,
        node_budget=args.budget or settings.SEARCH_NODE_BUDGET,
        time_budget=args.time_budget or settings.SEARCH_TIME_BUDGET,
        jobs=args.jobs or settings.JOBS,
    )
    result = max_arc_size(task)

    lines = [f"max={result.size}", format_matrix(witness_arc(result)).rstrip("\n")]
    if result.census is not None:
        lines.append("census " + json.dumps({str(size): count for size, count in result.census.items()}))
    lines.append(result.stats.model_dump_json())
    emit(args, "\n".join(lines), result)
    return 0
