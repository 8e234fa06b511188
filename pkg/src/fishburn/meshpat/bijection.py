"""Marked inversions <-> marked sigma-occurrences."""

import logging
from dataclasses import dataclass

from ..core import InversionPair, Permutation, inversions, validate_marks
from ..errors import MarkingError
from .occurrences import Occurrence, occurrences
from .patterns import builtin

logger = logging.getLogger(__name__)

SIGMA = builtin("sigma")


@dataclass(frozen=True)
class MarkedPermutation:
    """A permutation with either marked inversions or marked sigma-occurrences."""

    perm: Permutation
    marked_inversions: frozenset[InversionPair] = frozenset()
    marked_occurrences: frozenset[Occurrence] = frozenset()

    def __post_init__(self):
        inv = frozenset(InversionPair(*pair) for pair in self.marked_inversions)
        occ = frozenset(tuple(o) for o in self.marked_occurrences)
        object.__setattr__(self, "marked_inversions", inv)
        object.__setattr__(self, "marked_occurrences", occ)
        if inv and occ:
            raise MarkingError("a permutation carries marked inversions or marked occurrences, not both")


def sigma_occurrence_at(p: Permutation, position: int) -> Occurrence | None:
    """
    The sigma-occurrence whose first entry sits at `position`, if any.

    Such an occurrence is b, c, a with c immediately right of b, c > b and
    a = b - 1 further right.
    """
    n = len(p)
    if not 1 <= position < n:
        return None
    b = p.value_at(position)
    c = p.value_at(position + 1)
    if c < b or b == 1:
        return None
    a_position = p.position(b - 1)
    if a_position <= position + 1:
        return None
    return (position, position + 1, a_position)


def insert_sigma(mp: MarkedPermutation) -> MarkedPermutation:
    """
    Turn each marked inversion into an inserted entry opening a sigma-occurrence.

    Marks are processed in inversion order. For the pair (a_j, a_k) with a_j
    at position j, every value above a_k is raised by one and a_k + 1 is
    inserted so that it occupies position j.

    Args:
        mp: Permutation with marked inversions

    Returns:
        Permutation of size n + |marks| with the new sigma-occurrences marked

    Raises:
        MarkingError: If a mark is not an inversion of the permutation
    """
    order = {pair: i for i, pair in enumerate(inversions(mp.perm))}
    validate_marks(mp.marked_inversions, order, "inversions")
    pending = sorted(mp.marked_inversions, key=order.__getitem__)

    values = list(mp.perm.values)
    inserted: list[int] = []
    for step, (first, second) in enumerate(pending):
        j = values.index(first)

        def shift(v: int) -> int:
            return v + 1 if v > second else v

        values = [shift(v) for v in values]
        values.insert(j, second + 1)
        inserted = [shift(v) for v in inserted] + [second + 1]
        pending[step + 1 :] = [
            InversionPair(shift(f), shift(s)) for f, s in pending[step + 1 :]
        ]

    perm = Permutation(tuple(values))
    marked = frozenset(
        (perm.position(v), perm.position(v) + 1, perm.position(v - 1)) for v in inserted
    )
    logger.debug("insert_sigma %s -> %s, marks %s", mp.perm, perm, sorted(marked))
    return MarkedPermutation(perm, marked_occurrences=marked)


def remove_sigma(mp: MarkedPermutation) -> MarkedPermutation:
    """
    Inverse of insert_sigma.

    Repeatedly delete the first entry b of the rightmost marked occurrence,
    standardize, and record the inversion formed by its right neighbour and
    b - 1.

    Raises:
        MarkingError: If a mark is not a sigma-occurrence, or the marking is
            not the image of any marked-inversion permutation
    """
    if not mp.marked_occurrences:
        return MarkedPermutation(mp.perm)
    validate_marks(mp.marked_occurrences, occurrences(SIGMA, mp.perm), "sigma-occurrences")

    values = list(mp.perm.values)
    marked = {values[o[0] - 1] for o in mp.marked_occurrences}
    records: list[InversionPair] = []
    while marked:
        b = max(marked, key=values.index)
        i = values.index(b)
        if i + 1 >= len(values) or values[i + 1] < b or b - 1 not in values[i + 2 :]:
            raise MarkingError(f"marked entry {b} no longer opens a sigma-occurrence")
        c = values[i + 1]

        def shift(v: int) -> int:
            return v - 1 if v > b else v

        del values[i]
        values = [shift(v) for v in values]
        records = [InversionPair(shift(f), shift(s)) for f, s in records]
        records.append(InversionPair(c - 1, b - 1))
        marked = {shift(v) for v in marked if v != b}

    result = MarkedPermutation(Permutation(tuple(values)), marked_inversions=frozenset(records))
    if len(result.marked_inversions) != len(records) or insert_sigma(result) != mp:
        raise MarkingError("marked occurrences are not the image of a marked-inversion permutation")
    return result
