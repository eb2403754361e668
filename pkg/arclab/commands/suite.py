"""
Suite command.

Runs the quick or full acceptance profile; exit 1 when any check fails.
"""

import argparse

from arclab.commands.deps import emit, get_settings
from arclab.services.suite_service import PROFILES, run_profile


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("suite", help="run an acceptance profile")
    parser.add_argument("profile", help=f"one of {', '.join(PROFILES)}")
    parser.add_argument("--jobs", type=int, default=None, help="worker processes")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    report = run_profile(args.profile, jobs=args.jobs or get_settings().JOBS)
    lines = [f"{'ok  ' if entry.ok else 'FAIL'} {entry.name}: {entry.detail}" for entry in report.entries]
    failed = sum(not entry.ok for entry in report.entries)
    lines.append(f"{'PASS' if report.ok else 'FAIL'} {len(report.entries) - failed}/{len(report.entries)}")
    emit(args, "\n".join(lines), {**report.model_dump(mode="json"), "ok": report.ok})
    return 0 if report.ok else 1
