"""Mesh patterns: type, text form and the named patterns."""

import re
from dataclasses import dataclass

from ..core import MAX_COMPACT_LENGTH, Permutation, byte_offset, parse_permutation
from ..errors import ParseError

Cell = tuple[int, int]  # (column, row)

_CELL_RE = re.compile(r"\s*(\d+)\s*,\s*(\d+)\s*")


@dataclass(frozen=True)
class MeshPattern:
    """A classical pattern with shaded cells (col, row), 0 <= col, row <= k."""

    pattern: Permutation
    shading: frozenset[Cell] = frozenset()

    def __post_init__(self):
        shading = frozenset(self.shading)
        object.__setattr__(self, "shading", shading)
        k = len(self.pattern)
        for col, row in shading:
            if not (0 <= col <= k and 0 <= row <= k):
                raise ValueError(f"cell {(col, row)} outside [0,{k}]x[0,{k}]")

    def __len__(self) -> int:
        return len(self.pattern)

    def __str__(self) -> str:
        return format_pattern(self)


def parse_pattern(text: str) -> MeshPattern:
    """
    Parse `perm [ "|" col,row (";" col,row)* ]`.

    Args:
        text: Pattern text, e.g. "231|1,0;1,1;1,2;1,3;0,1;2,1;3,1"

    Returns:
        The MeshPattern

    Raises:
        ParseError: On a malformed permutation, malformed cell or out-of-range cell
    """
    bar = text.find("|")
    perm_text = text if bar < 0 else text[:bar]
    pattern = parse_permutation(perm_text)
    if bar < 0:
        return MeshPattern(pattern)

    k = len(pattern)
    cells: set[Cell] = set()
    pos = bar + 1
    for piece in text[bar + 1 :].split(";"):
        match = _CELL_RE.fullmatch(piece)
        if match is None:
            raise ParseError(
                f"expected a cell 'col,row', got {piece.strip()!r}",
                byte_offset(text, pos),
            )
        col, row = int(match.group(1)), int(match.group(2))
        if col > k:
            raise ParseError(
                f"cell column {col} exceeds pattern length {k}",
                byte_offset(text, pos + match.start(1)),
            )
        if row > k:
            raise ParseError(
                f"cell row {row} exceeds pattern length {k}",
                byte_offset(text, pos + match.start(2)),
            )
        cells.add((col, row))
        pos += len(piece) + 1
    return MeshPattern(pattern, frozenset(cells))


def format_pattern(P: MeshPattern) -> str:
    """Canonical text: digit form when k <= 9, cells sorted."""
    compact = len(P.pattern) <= MAX_COMPACT_LENGTH and len(P.pattern) > 0
    head = (
        "".join(str(v) for v in P.pattern)
        if compact
        else ",".join(str(v) for v in P.pattern)
    )
    if not P.shading:
        return head
    return head + "|" + ";".join(f"{c},{r}" for c, r in sorted(P.shading))


_SIGMA_CELLS = "0,1;1,0;1,1;1,2;1,3;2,1;3,1"
_UPSILON_CELLS = "0,1;1,1;2,0;2,1;2,2;2,3;3,1"

BUILTINS: dict[str, str] = {
    "sigma": f"231|{_SIGMA_CELLS}",
    # Classical part is 312; 321 with these cells is not Fishburn-distributed
    "sigma-321": f"312|{_SIGMA_CELLS}",
    "sigma-132": f"132|{_SIGMA_CELLS}",
    "upsilon": f"231|{_UPSILON_CELLS}",
    "p1": "3421|0,2;1,0;1,1;1,2;1,3;1,4;2,2;3,2;4,0;4,1;4,2",
    "q1": "3421|0,2;1,2;2,0;2,1;2,2;2,3;2,4;3,2;4,0;4,1;4,2",
    "p2": f"231|{_SIGMA_CELLS};3,0",
    "q2": f"231|{_UPSILON_CELLS};3,0",
    "inv": "21",
    # Their summed occurrence counts follow the Mahonian distribution
    "mahonian-231": "231|3,0;3,1",
    "mahonian-21": "21|2,0",
}


def builtin(name: str) -> MeshPattern:
    """Look up a named pattern; raises ValueError for unknown names."""
    try:
        return parse_pattern(BUILTINS[name])
    except KeyError:
        raise ValueError(
            f"unknown pattern {name!r}; builtins are {', '.join(BUILTINS)}"
        ) from None


def resolve_pattern(text: str) -> MeshPattern:
    """A builtin name or a pattern in text form."""
    if text in BUILTINS:
        return builtin(text)
    return parse_pattern(text)
