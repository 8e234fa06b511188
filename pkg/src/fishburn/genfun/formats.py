"""Text renderings of triangles and distributions."""

import json
from collections.abc import Mapping, Sequence

from .triangles import Triangle

FORMATS = ("table", "csv", "json", "bfile")


def _table(rows: Sequence[Sequence[int]]) -> str:
    widths: list[int] = []
    for row in rows:
        for k, value in enumerate(row):
            width = len(str(value))
            if k == len(widths):
                widths.append(width)
            else:
                widths[k] = max(widths[k], width)
    lines = [
        " ".join(str(value).rjust(widths[k]) for k, value in enumerate(row)).rstrip()
        for row in rows
    ]
    return "\n".join(lines)


def render_rows(rows: Sequence[Sequence[int]], fmt: str = "table", start: int = 0) -> str:
    """
    Render rows in one of FORMATS.

    Args:
        rows: Rows to print, the first one being row `start`
        fmt: table, csv, json or bfile
        start: Index of the first row; bfile numbering begins here

    Returns:
        Rendered text without a trailing newline
    """
    rows = [list(row) for row in rows]
    if fmt == "table":
        return _table(rows)
    if fmt == "csv":
        return "\n".join(",".join(str(v) for v in row) for row in rows)
    if fmt == "json":
        return json.dumps({"rows": rows}, separators=(",", ":"))
    if fmt == "bfile":
        flat = [value for row in rows for value in row]
        return "\n".join(f"{start + i} {value}" for i, value in enumerate(flat))
    raise ValueError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")


def render_triangle(triangle: Triangle, fmt: str = "table", start: int = 0, count: int | None = None) -> str:
    """Rows start .. start+count-1 of a triangle."""
    stop = len(triangle) if count is None else start + count
    return render_rows(triangle.rows[start:stop], fmt, start)


def render_distribution(distribution: Mapping[int, int], fmt: str = "table") -> str:
    """A statistic distribution as a single row indexed by the statistic value."""
    width = max(distribution, default=-1) + 1
    row = [distribution.get(k, 0) for k in range(width)]
    return render_rows([row], fmt, 0)
