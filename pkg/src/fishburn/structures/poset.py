from collections.abc import Iterable, Sequence

from ..core import format_pairs, parse_int_list, parse_pairs
from ..posets import (
    FactorialPoset,
    MarkedPoset,
    enumerate_factorial_posets,
    format_poset,
    incomparable_pairs,
    insert_mislabelings,
    mislabelings,
    parse_poset,
    remove_mislabelings,
)
from .base import MahonianStructure, MarkedResult


class PosetStructure(MahonianStructure):
    """Factorial posets: incomparable pairs against mislabelings."""

    name = "poset"
    mahonian_statistic = "incomparable"
    fishburn_statistic = "mislabelings"

    def enumerate(self, n: int, prefix: Sequence[int] = ()):
        return enumerate_factorial_posets(n, prefix)

    def mahonian_features(self, s: FactorialPoset) -> list[tuple[int, int]]:
        return incomparable_pairs(s)

    def fishburn_features(self, s: FactorialPoset) -> set[int]:
        return mislabelings(s)

    def insert(self, s: FactorialPoset, marks: Iterable) -> MarkedResult:
        result = insert_mislabelings(MarkedPoset(s, marked_pairs=frozenset(marks)))
        return MarkedResult(result.poset, result.marked_mislabelings)

    def remove(self, s: FactorialPoset, marks: Iterable) -> MarkedResult:
        result = remove_mislabelings(MarkedPoset(s, marked_mislabelings=frozenset(marks)))
        return MarkedResult(result.poset, result.marked_pairs)

    def parse(self, text: str) -> FactorialPoset:
        return parse_poset(text)

    def format(self, s: FactorialPoset) -> str:
        return format_poset(s)

    def parse_mahonian_marks(self, text: str) -> list[tuple[int, int]]:
        return parse_pairs(text)

    def parse_fishburn_marks(self, s: FactorialPoset, text: str) -> list[int]:
        return parse_int_list(text)

    def format_marks(self, result: MarkedResult, fishburn: bool) -> str:
        if fishburn:
            return ",".join(str(label) for label in sorted(result.marks))
        order = {pair: i for i, pair in enumerate(incomparable_pairs(result.structure))}
        return format_pairs(sorted(result.marks, key=order.__getitem__))
