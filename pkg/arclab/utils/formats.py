"""
Arc file formats.

Matrix text: a header line "p h k n" followed by n lines of k canonical
element codes separated by spaces. Blank lines and lines starting with
"#" are ignored. The modulus is the default one for (p, h) unless the
caller passes an explicit override.

JSON: the ArcPayload object {"p", "h", "modulus", "k", "points"}.
"""

import json
from pathlib import Path
from typing import Literal, Sequence

from pydantic import ValidationError

from arclab.core.exceptions import ArcLabError, FormatError
from arclab.core.logging import get_logger
from arclab.models.arc import Arc
from arclab.schemas.arc import ArcPayload
from arclab.utils.gf import field_new

logger = get_logger(__name__)

ArcFormat = Literal["matrix", "json"]


def _parse_ints(line: str, line_no: int) -> list[int]:
    try:
        return [int(token) for token in line.split()]
    except ValueError as e:
        raise FormatError(f"line {line_no}: expected integers, got '{line.strip()}'") from e


def parse_matrix(text: str, modulus: Sequence[int] | None = None, name: str = "") -> Arc:
    """
    Parse matrix text into an Arc.

    Args:
        text: File contents.
        modulus: Optional explicit reduction polynomial, low degree first.
        name: Label stored on the arc.

    Returns:
        Arc with the rows as points, in file order.

    Raises:
        FormatError: Malformed header, row count or row length, or codes outside the field.
    """
    lines = [
        (i + 1, line)
        for i, line in enumerate(text.splitlines())
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise FormatError("empty matrix file")

    line_no, header = lines[0]
    values = _parse_ints(header, line_no)
    if len(values) != 4:
        raise FormatError(f"line {line_no}: header must be 'p h k n', got '{header.strip()}'")
    p, h, k, n = values

    rows = [_parse_ints(line, no) for no, line in lines[1:]]
    if len(rows) != n:
        raise FormatError(f"header announces {n} rows, found {len(rows)}")
    for (no, _), row in zip(lines[1:], rows):
        if len(row) != k:
            raise FormatError(f"line {no}: expected {k} codes, got {len(row)}")

    try:
        field = field_new(p, h, modulus)
        return Arc(field, k, tuple(tuple(row) for row in rows), name=name)
    except ArcLabError as e:
        raise FormatError(f"invalid matrix: {e}") from e


def format_matrix(arc: Arc) -> str:
    """Matrix text of an arc, newline terminated."""
    lines = [f"{arc.field.p} {arc.field.h} {arc.k} {arc.size}"]
    lines.extend(" ".join(str(c) for c in point) for point in arc.points)
    return "\n".join(lines) + "\n"


def parse_json(text: str) -> Arc:
    """
    Parse an ArcPayload JSON document.

    Raises:
        FormatError: Invalid JSON or payload.
    """
    try:
        return ArcPayload.model_validate_json(text).to_arc()
    except ValidationError as e:
        raise FormatError(f"invalid arc payload: {e.error_count()} error(s), first: {e.errors()[0]['msg']}") from e
    except ArcLabError as e:
        raise FormatError(f"invalid arc payload: {e}") from e


def format_json(arc: Arc) -> str:
    """ArcPayload JSON of an arc."""
    return json.dumps(ArcPayload.from_arc(arc).model_dump(mode="json"))


def load_arc(path: str | Path, fmt: ArcFormat = "matrix", modulus: Sequence[int] | None = None) -> Arc:
    """
    Read an arc file.

    Args:
        path: File path.
        fmt: "matrix" or "json".
        modulus: Explicit modulus for matrix files.

    Raises:
        FormatError: Unreadable or malformed file.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise FormatError(f"cannot read {path}: {e.strerror}") from e

    arc = parse_json(text) if fmt == "json" else parse_matrix(text, modulus=modulus, name=path.stem)
    logger.debug(f"Loaded {arc.label()} from {path}")
    return arc


def save_arc(arc: Arc, path: str | Path, fmt: ArcFormat = "matrix") -> Path:
    """Write an arc file and return its path."""
    path = Path(path)
    path.write_text(format_json(arc) if fmt == "json" else format_matrix(arc), encoding="utf-8")
    logger.info(f"Saved {arc.label()} to {path}")
    return path
