"""
Command line entry point.

This module:
- Builds the argparse parser with the global --json and --log-level options
- Registers every subcommand
- Maps domain errors to exit statuses (0 pass, 1 fail, 2 usage, 3 budget)
"""

import argparse
import sys
from typing import Sequence

from arclab.commands import COMMANDS
from arclab.core.config import get_settings
from arclab.core.exceptions import ArcLabError
from arclab.core.logging import get_logger, setup_logging

logger = get_logger(__name__)

__version__ = "0.1.0"


def create_application() -> argparse.ArgumentParser:
    """
    Parser factory.

    Returns:
        argparse.ArgumentParser: Parser with one subparser per command; each
        sets a handler default returning the exit status.
    """
    settings = get_settings()

    parser = argparse.ArgumentParser(
        prog=settings.PROJECT_NAME,
        description="Exact lab for arcs of F_q^k: fields, tangents, Segre identities and maximum arc search",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--json", action="store_true", help="print one JSON object instead of text")
    parser.add_argument(
        "--log-level",
        choices=("DEBUG", "INFO", "WARNING", "ERROR"),
        default=None,
        help="log level on stderr (default ARCLAB_LOG_LEVEL)",
    )

    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def dispatch(argv: Sequence[str] | None = None) -> int:
    """
    Parse argv, run the command and return its exit status.

    Usage errors and argparse failures return 2; domain errors return the
    exit_code their class carries.
    """
    parser = create_application()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 0

    setup_logging(args.log_level)
    logger.debug(f"Running '{args.command}'")
    try:
        return args.handler(args)
    except ArcLabError as exc:
        logger.error(f"{type(exc).__name__}: {exc}")
        return exc.exit_code
    except OSError as exc:
        logger.error(f"{exc.strerror or exc}: {exc.filename}")
        return 2


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
