"""Zero-alignment perfect matchings, arc classification and the confused-arc bijection."""

import csv
import io
import logging
import re
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, fields
from typing import NamedTuple

from .core import (
    InversionTable,
    byte_offset,
    enumerate_inversion_tables,
    format_pairs,
    parse_pairs,
    validate_marks,
)
from .errors import MarkingError, ParseError

logger = logging.getLogger(__name__)

Arc = tuple[int, int]

_EMBRACED_RE = re.compile(r"\(\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*,\s*(\d+)\s*\)")
_SEPARATOR_RE = re.compile(r"[\s,]*")


@dataclass(frozen=True)
class Matching:
    """Perfect matching on [2m] given by its arcs (opener, closer)."""

    arcs: frozenset[Arc]

    def __post_init__(self):
        arcs = frozenset((int(i), int(j)) for i, j in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        points = sorted(p for arc in arcs for p in arc)
        if points != list(range(1, 2 * len(arcs) + 1)):
            raise ValueError(f"arcs do not cover 1..{2 * len(arcs)} exactly once")
        for i, j in arcs:
            if i >= j:
                raise ValueError(f"arc {(i, j)} has opener >= closer")

    def __len__(self) -> int:
        return len(self.arcs)

    def __str__(self) -> str:
        return format_matching(self)

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs)


class EmbracedOpener(NamedTuple):
    """Opener k of an arc nested inside nesting_arc."""

    nesting_arc: Arc
    opener: int


@dataclass(frozen=True)
class ArcFlags:
    nesting: bool = False
    nested: bool = False
    left_nesting: bool = False
    left_nested: bool = False
    right_nesting: bool = False
    right_nested: bool = False
    crossing: bool = False
    crossed: bool = False
    left_crossing: bool = False
    left_crossed: bool = False
    right_crossing: bool = False
    right_crossed: bool = False


FLAG_NAMES = tuple(f.name for f in fields(ArcFlags))


@dataclass(frozen=True)
class MarkedMatching:
    """A matching with either marked embraced openers or marked confused arcs."""

    matching: Matching
    marked_openers: frozenset[EmbracedOpener] = frozenset()
    marked_confused: frozenset[Arc] = frozenset()

    def __post_init__(self):
        openers = frozenset(EmbracedOpener(tuple(arc), k) for arc, k in self.marked_openers)
        confused = frozenset(tuple(arc) for arc in self.marked_confused)
        object.__setattr__(self, "marked_openers", openers)
        object.__setattr__(self, "marked_confused", confused)
        if openers and confused:
            raise MarkingError("a matching carries marked openers or marked confused arcs, not both")


def from_inversion_table(t: InversionTable) -> Matching:
    """
    Build the zero-alignment matching of an inversion table.

    At step i the new opener goes b_i slots from the right end of the
    openers and the new closer goes at the far right, so arc i nests
    exactly b_i of the earlier arcs.
    """
    openers: list[int] = []
    closers: list[int] = []
    for arc_id, b in enumerate(t):
        openers.insert(len(openers) - b, arc_id)
        closers.append(arc_id)
    m = len(openers)
    opener_at = {arc_id: index + 1 for index, arc_id in enumerate(openers)}
    closer_at = {arc_id: m + index + 1 for index, arc_id in enumerate(closers)}
    return Matching(frozenset((opener_at[a], closer_at[a]) for a in range(m)))


def enumerate_zero_alignment(n: int, prefix: Sequence[int] = ()) -> Iterator[Matching]:
    """Images of enumerate_inversion_tables(n, prefix), in table order."""
    for t in enumerate_inversion_tables(n, prefix):
        yield from_inversion_table(t)


def is_zero_alignment(M: Matching) -> bool:
    """True when every opener precedes every closer."""
    if not M.arcs:
        return True
    return max(i for i, _ in M.arcs) < min(j for _, j in M.arcs)


def classify(M: Matching) -> dict[Arc, ArcFlags]:
    """
    Nesting and crossing flags for every arc.

    For arcs (i, j) and (k, l) with i < k < l < j, (i, j) is nesting and
    (k, l) is nested; left- when k = i + 1, right- when l + 1 = j. For
    i < k < j < l, (i, j) is crossing and (k, l) crossed; left- when
    k = i + 1, right- when l = j + 1.
    """
    flags = {arc: dict.fromkeys(FLAG_NAMES, False) for arc in M.arcs}
    for i, j in M.arcs:
        for k, l in M.arcs:
            if i < k < l < j:
                outer, inner = flags[(i, j)], flags[(k, l)]
                outer["nesting"] = inner["nested"] = True
                if k == i + 1:
                    outer["left_nesting"] = inner["left_nested"] = True
                if l + 1 == j:
                    outer["right_nesting"] = inner["right_nested"] = True
            elif i < k < j < l:
                left, right = flags[(i, j)], flags[(k, l)]
                left["crossing"] = right["crossed"] = True
                if k == i + 1:
                    left["left_crossing"] = right["left_crossed"] = True
                if l == j + 1:
                    left["right_crossing"] = right["right_crossed"] = True
    return {arc: ArcFlags(**values) for arc, values in flags.items()}


def confused_arcs(M: Matching) -> set[Arc]:
    """Arcs that are both left-nesting and right-crossed."""
    return {
        arc
        for arc, f in classify(M).items()
        if f.left_nesting and f.right_crossed
    }


def nesting_pairs(M: Matching) -> int:
    return sum(1 for i, j in M.arcs for k, l in M.arcs if i < k < l < j)


def embraced_nested_openers(M: Matching) -> list[EmbracedOpener]:
    """Every ((i, j), k) with (k, l) nested by (i, j), by descending k then descending j."""
    found = [
        EmbracedOpener((i, j), k)
        for i, j in M.arcs
        for k, l in M.arcs
        if i < k < l < j
    ]
    return sorted(found, key=lambda e: (-e.opener, -e.nesting_arc[1]))


def insert_confused(mm: MarkedMatching) -> MarkedMatching:
    """
    Insert one confused arc per marked embraced opener.

    Marks are processed in embraced-opener order. For ((i, j), k) a new
    opener is placed immediately left of k and a new closer immediately
    right of j; old labels p become p + [p >= k] + [p > j].

    Raises:
        MarkingError: If the host has an alignment or a mark is not an
            embraced nested opener
    """
    if not is_zero_alignment(mm.matching):
        raise MarkingError("host matching has an alignment")
    order = {e: index for index, e in enumerate(embraced_nested_openers(mm.matching))}
    validate_marks(mm.marked_openers, order, "embraced nested openers")
    pending = sorted(mm.marked_openers, key=order.__getitem__)

    arcs = set(mm.matching.arcs)
    inserted: list[Arc] = []
    for step, ((_, j), k) in enumerate(pending):

        def shift(p: int) -> int:
            return p + (p >= k) + (p > j)

        def shift_arc(arc: Arc) -> Arc:
            return shift(arc[0]), shift(arc[1])

        arcs = {shift_arc(arc) for arc in arcs}
        inserted = [shift_arc(arc) for arc in inserted]
        new_arc = (k, j + 2)
        arcs.add(new_arc)
        inserted.append(new_arc)
        pending[step + 1 :] = [
            EmbracedOpener(shift_arc(e.nesting_arc), shift(e.opener))
            for e in pending[step + 1 :]
        ]

    result = MarkedMatching(Matching(frozenset(arcs)), marked_confused=frozenset(inserted))
    logger.debug("insert_confused added %d arcs", len(inserted))
    return result


def _remove_one(
    arcs: frozenset[Arc],
    marked: frozenset[Arc],
    records: tuple[EmbracedOpener, ...],
    arc: Arc,
):
    """Remove a marked arc (a, b) if its neighbours fit; None otherwise."""
    a, b = arc
    by_opener = {i: (i, j) for i, j in arcs}
    by_closer = {j: (i, j) for i, j in arcs}
    inner = by_opener.get(a + 1)
    outer = by_closer.get(b - 1)
    if inner is None or outer is None or inner in marked or outer in marked:
        return None
    if not (outer[0] < inner[0] and inner[1] < outer[1]):
        return None

    def relabel(p: int) -> int:
        return p - (p > a) - (p > b)

    def relabel_arc(x: Arc) -> Arc:
        return relabel(x[0]), relabel(x[1])

    new_arcs = frozenset(relabel_arc(x) for x in arcs if x != arc)
    new_marked = frozenset(relabel_arc(x) for x in marked if x != arc)
    new_records = tuple(
        EmbracedOpener(relabel_arc(e.nesting_arc), relabel(e.opener)) for e in records
    ) + (EmbracedOpener(relabel_arc(outer), relabel(a + 1)),)
    return new_arcs, new_marked, new_records


def _removal_candidates(arcs: frozenset[Arc], marked: frozenset[Arc]) -> list[Arc]:
    unmarked_openers = {i for i, _ in arcs - marked}
    return sorted(arc for arc in marked if arc[0] + 1 in unmarked_openers)


def _search(arcs, marked, records, target: MarkedMatching) -> MarkedMatching | None:
    if not marked:
        candidate = MarkedMatching(Matching(arcs), marked_openers=frozenset(records))
        if len(candidate.marked_openers) != len(records):
            return None
        try:
            return candidate if insert_confused(candidate) == target else None
        except MarkingError:
            return None
    for arc in _removal_candidates(arcs, marked):
        state = _remove_one(arcs, marked, records, arc)
        if state is None:
            continue
        found = _search(*state, target)
        if found is not None:
            return found
    return None


def remove_confused(mm: MarkedMatching) -> MarkedMatching:
    """
    Inverse of insert_confused.

    Marked arcs are removed one at a time, trying first the arc with the
    smallest opener whose right neighbour opens an unmarked arc; other
    orders are searched only if that one does not reproduce the input.

    Raises:
        MarkingError: If a mark is not confused or the marking is not in the
            image of insert_confused
    """
    if not mm.marked_confused:
        return MarkedMatching(mm.matching)
    validate_marks(mm.marked_confused, confused_arcs(mm.matching), "confused arcs")
    found = _search(mm.matching.arcs, mm.marked_confused, (), mm)
    if found is None:
        raise MarkingError("marked confused arcs are not the image of any marked embraced openers")
    return found


# ---------------------------------------------------------------------------
# Text forms
# ---------------------------------------------------------------------------


def parse_matching(text: str) -> Matching:
    """Parse "(1,9)(2,12)(3,10)..."."""
    pairs = parse_pairs(text)
    try:
        return Matching(frozenset(pairs))
    except ValueError as e:
        raise ParseError(f"not a perfect matching: {e}", 0) from None


def format_matching(M: Matching) -> str:
    return format_pairs(M.sorted_arcs())


def parse_arcs(text: str) -> set[Arc]:
    return set(parse_pairs(text))


def parse_embraced_openers(text: str) -> list[EmbracedOpener]:
    """Parse "((2,12),4)((1,9),4)"."""
    result: list[EmbracedOpener] = []
    pos = _SEPARATOR_RE.match(text, 0).end()
    while pos < len(text):
        match = _EMBRACED_RE.match(text, pos)
        if match is None:
            raise ParseError("expected '((i,j),k)'", byte_offset(text, pos))
        i, j, k = (int(g) for g in match.groups())
        result.append(EmbracedOpener((i, j), k))
        pos = _SEPARATOR_RE.match(text, match.end()).end()
    return result


def format_embraced_openers(marks: Iterable[EmbracedOpener]) -> str:
    return "".join(f"(({i},{j}),{k})" for (i, j), k in marks)


def classification_rows(M: Matching) -> list[list]:
    """Header plus one row per arc (sorted by opener) with 0/1 flags."""
    flags = classify(M)
    rows: list[list] = [["arc", *FLAG_NAMES]]
    for arc in M.sorted_arcs():
        f = flags[arc]
        rows.append([f"({arc[0]},{arc[1]})", *(int(getattr(f, name)) for name in FLAG_NAMES)])
    return rows


def classification_csv(M: Matching) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(classification_rows(M))
    return buffer.getvalue()
