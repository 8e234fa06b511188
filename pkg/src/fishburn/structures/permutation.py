from collections.abc import Iterable, Sequence

from ..core import (
    InversionPair,
    Permutation,
    enumerate_inversion_tables,
    format_pairs,
    format_permutation,
    inversions,
    parse_int_list,
    parse_pairs,
    parse_permutation,
    permutation_from_table,
)
from ..errors import MarkingError
from ..meshpat import MarkedPermutation, insert_sigma, occurrences, remove_sigma, sigma_occurrence_at
from ..meshpat.bijection import SIGMA
from .base import MahonianStructure, MarkedResult


class PermutationStructure(MahonianStructure):
    """
    Permutations: inversions are the Mahonian features, occurrences of the
    mesh pattern sigma the Fishburn ones.

    Enumeration runs through inversion tables so that every structure
    shares the same prefix partitioning.
    """

    name = "perm"
    mahonian_statistic = "inversions"
    fishburn_statistic = "sigma"

    def enumerate(self, n: int, prefix: Sequence[int] = ()):
        for t in enumerate_inversion_tables(n, prefix):
            yield permutation_from_table(t)

    def mahonian_features(self, s: Permutation) -> list[InversionPair]:
        return inversions(s)

    def fishburn_features(self, s: Permutation) -> set[tuple[int, ...]]:
        return set(occurrences(SIGMA, s))

    def insert(self, s: Permutation, marks: Iterable) -> MarkedResult:
        result = insert_sigma(MarkedPermutation(s, marked_inversions=frozenset(marks)))
        return MarkedResult(result.perm, result.marked_occurrences)

    def remove(self, s: Permutation, marks: Iterable) -> MarkedResult:
        result = remove_sigma(MarkedPermutation(s, marked_occurrences=frozenset(marks)))
        return MarkedResult(result.perm, result.marked_inversions)

    def parse(self, text: str) -> Permutation:
        return parse_permutation(text)

    def format(self, s: Permutation) -> str:
        return format_permutation(s, compact=True)

    def parse_mahonian_marks(self, text: str) -> list[InversionPair]:
        return [InversionPair(a, b) for a, b in parse_pairs(text)]

    def parse_fishburn_marks(self, s: Permutation, text: str) -> list[tuple[int, ...]]:
        """Marked occurrences given by the positions of their first entries, "2,4,5"."""
        marks = []
        for position in parse_int_list(text):
            occurrence = sigma_occurrence_at(s, position)
            if occurrence is None:
                raise MarkingError(f"no sigma-occurrence starts at position {position}")
            marks.append(occurrence)
        return marks

    def format_marks(self, result: MarkedResult, fishburn: bool) -> str:
        if fishburn:
            return format_pairs(sorted(result.marks))
        order = {pair: i for i, pair in enumerate(inversions(result.structure))}
        return format_pairs(sorted(result.marks, key=order.__getitem__))