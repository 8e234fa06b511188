from collections.abc import Iterable, Sequence

from ..core import format_pairs
from ..matchings import (
    EmbracedOpener,
    MarkedMatching,
    Matching,
    confused_arcs,
    embraced_nested_openers,
    enumerate_zero_alignment,
    format_embraced_openers,
    format_matching,
    insert_confused,
    parse_arcs,
    parse_embraced_openers,
    parse_matching,
    remove_confused,
)
from .base import MahonianStructure, MarkedResult


class MatchingStructure(MahonianStructure):
    """Zero-alignment matchings: embraced nested openers against confused arcs."""

    name = "matching"
    mahonian_statistic = "nestings"
    fishburn_statistic = "confused"

    def enumerate(self, n: int, prefix: Sequence[int] = ()):
        return enumerate_zero_alignment(n, prefix)

    def mahonian_features(self, s: Matching) -> list[EmbracedOpener]:
        return embraced_nested_openers(s)

    def fishburn_features(self, s: Matching) -> set[tuple[int, int]]:
        return confused_arcs(s)

    def insert(self, s: Matching, marks: Iterable) -> MarkedResult:
        result = insert_confused(MarkedMatching(s, marked_openers=frozenset(marks)))
        return MarkedResult(result.matching, result.marked_confused)

    def remove(self, s: Matching, marks: Iterable) -> MarkedResult:
        result = remove_confused(MarkedMatching(s, marked_confused=frozenset(marks)))
        return MarkedResult(result.matching, result.marked_openers)

    def parse(self, text: str) -> Matching:
        return parse_matching(text)

    def format(self, s: Matching) -> str:
        return format_matching(s)

    def parse_mahonian_marks(self, text: str) -> list[EmbracedOpener]:
        return parse_embraced_openers(text)

    def parse_fishburn_marks(self, s: Matching, text: str) -> list[tuple[int, int]]:
        return sorted(parse_arcs(text))

    def format_marks(self, result: MarkedResult, fishburn: bool) -> str:
        if fishburn:
            return format_pairs(sorted(result.marks))
        order = {e: i for i, e in enumerate(embraced_nested_openers(result.structure))}
        return format_embraced_openers(sorted(result.marks, key=order.__getitem__))
