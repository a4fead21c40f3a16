"""Loading and writing the JSON structure format, and the exit codes shared by the management commands."""

from __future__ import annotations

import json
from pathlib import Path
from typing import IO, Iterable

from semigroups.structures import OrderedSemigroup, StructureShapeError, ValidationReport, validate

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PARSE = 2
EXIT_DISCREPANCY = 3
EXIT_USAGE = 64


class StructureFileError(ValueError):
    """Raised when a structure file is missing, is not JSON, or lacks the expected keys."""


def dump_json(data, *, indent: int | None = 2) -> str:
    return json.dumps(data, sort_keys=True, indent=indent, ensure_ascii=False)


def read_structure_data(path: str | Path) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise StructureFileError(f"cannot read {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StructureFileError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise StructureFileError(f"{path} must hold a JSON object")
    return data


def structure_fields(data: dict) -> tuple[list, list]:
    """Pull ``table`` and ``leq`` out of the structure format, checking ``order`` against the table."""
    missing = [key for key in ("order", "table", "leq") if key not in data]
    if missing:
        raise StructureFileError(f"missing key(s): {', '.join(missing)}")
    order, table = data["order"], data["table"]
    if isinstance(order, bool) or not isinstance(order, int):
        raise StructureShapeError(f"order must be an integer, got {order!r}")
    if not isinstance(table, list) or len(table) != order:
        raise StructureShapeError(f"order is {order} but the table has {len(table) if isinstance(table, list) else 'no'} rows")
    return table, data["leq"]


def validate_data(data: dict) -> "OrderedSemigroup | ValidationReport":
    table, leq = structure_fields(data)
    return validate(table, leq)


def load_structure(path: str | Path) -> "OrderedSemigroup | ValidationReport":
    return validate_data(read_structure_data(path))


def write_ndjson(stream: IO[str], structures: Iterable[OrderedSemigroup]) -> int:
    count = 0
    for structure in structures:
        stream.write(dump_json(structure.as_dict(), indent=None) + "\n")
        count += 1
    return count
