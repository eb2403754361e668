"""
Tangents command.

For a (k-2)-subset Y given by indices, prints the normalized tangent
forms and T_Y at every point outside Y. With --census, prints the
tangent census of every (k-2)-subset instead.
"""

import argparse

from arclab.commands.deps import add_arc_arguments, arc_from_args, emit
from arclab.services.arc_service import census_all
from arclab.services.tangent_service import TangentBundle, tangent_forms


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("tangents", help="tangent forms and values through a (k-2)-subset")
    add_arc_arguments(parser)
    target = parser.add_mutually_exclusive_group(required=True)
    target.add_argument("--Y", type=int, nargs="*", metavar="I", help="point indices of Y (k-2 of them)")
    target.add_argument("--census", action="store_true", help="census of every (k-2)-subset")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    arc = arc_from_args(args)
    if args.census:
        census = census_all(arc)
        lines = [f"t={census.t} consistent={census.consistent}"]
        lines += [f"Y={entry.Y} tangents={entry.tangent_count}" for entry in census.per_Y]
        emit(args, "\n".join(lines), census)
        return 0 if census.consistent else 1

    bundle = TangentBundle(arc)
    Y = list(args.Y)
    forms = tangent_forms(bundle, Y)
    values = {i: bundle.at(Y, i) for i in range(arc.size) if i not in Y}

    lines = [f"Y={Y} t={arc.t}"]
    lines += ["form " + " ".join(str(c) for c in form.covector) for form in forms]
    lines += [f"T({i})={value}" for i, value in values.items()]
    payload = {
        "Y": Y,
        "t": arc.t,
        "forms": [list(form.covector) for form in forms],
        "values": {str(i): value for i, value in values.items()},
    }
    emit(args, "\n".join(lines), payload)
    return 0
