"""Render report rows to CSV and JSON without losing exactness.

Every value in this package is an int, a Fraction, a bool, a string, or
None.  Integers routinely exceed 64 bits, so JSON carries them as decimal
strings; fractions become "p/q" strings in both formats.  Output is a pure
function of the rows, so identical inputs give byte-identical text.
"""

from __future__ import annotations

import json
from fractions import Fraction


def render_cell(value) -> str:
    """CSV text for one cell.  None is the empty cell."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, Fraction)):
        return str(value)
    return str(value)


def rows_to_csv(rows, columns=None) -> str:
    """Header line plus one line per row, newline terminated.

    Columns default to the key order of the first row; every row must
    supply every column.
    """
    rows = list(rows)
    if columns is None:
        columns = list(rows[0].keys()) if rows else []
    lines = [",".join(columns)]
    for row in rows:
        lines.append(",".join(render_cell(row[c]) for c in columns))
    return "\n".join(lines) + "\n"


def json_ready(value):
    """Recursively convert a value into JSON-safe primitives."""
    if value is None or isinstance(value, bool):
        return value
    if isinstance(value, (int, Fraction)):
        return str(value)
    if isinstance(value, str):
        return value
    if isinstance(value, dict):
        return {str(k): json_ready(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [json_ready(v) for v in value]
    raise TypeError(f"cannot serialize {type(value).__name__}")


def rows_to_json(rows, columns=None) -> str:
    """JSON array of row objects, keys in column order, newline terminated."""
    rows = list(rows)
    if columns is None:
        columns = list(rows[0].keys()) if rows else []
    payload = [{c: json_ready(row[c]) for c in columns} for row in rows]
    return json.dumps(payload, indent=2) + "\n"
