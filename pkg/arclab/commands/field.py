"""
Field command.

Prints the parameters of GF(p^h) and its reduction polynomial.
"""

import argparse

from arclab.commands.deps import add_field_arguments, emit, field_from_args
from arclab.schemas.arc import FieldInfo


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("field", help="construct GF(p^h) and print its modulus")
    add_field_arguments(parser, with_k=False)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    field = field_from_args(args)
    info = FieldInfo(p=field.p, h=field.h, q=field.q, modulus=list(field.modulus))
    modulus = " ".join(str(c) for c in field.modulus)
    emit(args, f"{field.header}\nq={field.q}\nmodulus {modulus}", info)
    return 0
