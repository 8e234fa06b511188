"""Occurrence engine for mesh patterns and distributions over S_n."""

import itertools
import logging
from collections import Counter
from collections.abc import Callable, Sequence

from ..core import Permutation, enumerate_permutations, standardize
from .patterns import MeshPattern

logger = logging.getLogger(__name__)

Occurrence = tuple[int, ...]  # strictly increasing 1-based positions


def _region_empty(
    p: Permutation, x_lo: int, x_hi: int, y_lo: int, y_hi: int
) -> bool:
    return not any(y_lo < p.values[pos - 1] < y_hi for pos in range(x_lo + 1, x_hi))


def is_occurrence(P: MeshPattern, p: Permutation, positions: Occurrence) -> bool:
    """
    Check one position tuple against a mesh pattern.

    The chosen values must be order-isomorphic to the pattern, and for every
    shaded cell (a, b) no entry may lie strictly between the a-th and
    (a+1)-th chosen positions and strictly between the b-th and (b+1)-th
    smallest chosen values. Index 0 and k use the sentinels 0 and n+1.
    """
    if len(positions) != len(P.pattern):
        return False
    values = [p.values[i - 1] for i in positions]
    if standardize(values) != P.pattern.values:
        return False
    n = len(p)
    xs = (0, *positions, n + 1)
    ys = (0, *sorted(values), n + 1)
    return all(
        _region_empty(p, xs[col], xs[col + 1], ys[row], ys[row + 1])
        for col, row in P.shading
    )


def occurrences(P: MeshPattern, p: Permutation) -> list[Occurrence]:
    """
    All occurrences of P in p, sorted lexicographically.

    Args:
        P: Mesh pattern
        p: Host permutation

    Returns:
        List of position tuples
    """
    candidates = itertools.combinations(range(1, len(p) + 1), len(P.pattern))
    return [positions for positions in candidates if is_occurrence(P, p, positions)]


def count(P: MeshPattern, p: Permutation) -> int:
    return len(occurrences(P, p))


def statistic_distribution(
    stat: Callable[[Permutation], int], n: int, first: int | None = None
) -> dict[int, int]:
    """
    Distribution of an integer statistic over S_n.

    Args:
        stat: Statistic to tabulate
        n: Permutation size
        first: Restrict to permutations starting with this value

    Returns:
        Map statistic value -> number of permutations, keys ascending
    """
    counts: Counter[int] = Counter(stat(p) for p in enumerate_permutations(n, first))
    logger.debug("distribution over S_%d (first=%s): %s", n, first, dict(counts))
    return dict(sorted(counts.items()))


class PatternCount:
    """Picklable statistic: summed occurrence counts of a list of patterns."""

    def __init__(self, patterns: Sequence[MeshPattern]):
        self.patterns = tuple(patterns)

    def __call__(self, p: Permutation) -> int:
        return sum(count(P, p) for P in self.patterns)


def distribution(P: MeshPattern, n: int, first: int | None = None) -> dict[int, int]:
    """Number of permutations of size n with each occurrence count of P."""
    return statistic_distribution(PatternCount([P]), n, first)


def combination_distribution(
    patterns: Sequence[MeshPattern], n: int, first: int | None = None
) -> dict[int, int]:
    """Distribution of the summed occurrence counts of several patterns."""
    return statistic_distribution(PatternCount(patterns), n, first)


def as_row(dist: dict[int, int]) -> tuple[int, ...]:
    """Distribution map as a row indexed by statistic value."""
    width = max(dist, default=-1) + 1
    return tuple(dist.get(k, 0) for k in range(width))
