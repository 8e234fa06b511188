import itertools
from abc import ABC, abstractmethod
from collections import Counter
from collections.abc import Hashable, Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from typing import Any

from ..errors import MarkingError


@dataclass(frozen=True)
class MarkedResult:
    """A structure together with a set of marked features."""

    structure: Any
    marks: frozenset = field(default_factory=frozenset)


def subsets(items: Sequence) -> Iterator[tuple]:
    """Every subset of items, smallest first."""
    return itertools.chain.from_iterable(
        itertools.combinations(items, r) for r in range(len(items) + 1)
    )


class MahonianStructure(ABC):
    """
    A family of structures counted by n! whose Mahonian features can be
    traded, one marked feature at a time, for Fishburn features of a larger
    structure.
    """

    name: str = ""
    mahonian_statistic: str = ""
    fishburn_statistic: str = ""

    @abstractmethod
    def enumerate(self, n: int, prefix: Sequence[int] = ()) -> Iterator[Any]:
        """
        Yield all n! structures of size n.

        Args:
            n: Structure size
            prefix: Inversion-table prefix selecting a slice of the stream

        Returns:
            Deterministic iterator of structures
        """
        pass

    @abstractmethod
    def mahonian_features(self, s) -> list[Hashable]:
        """Mahonian features of s in insertion processing order."""
        pass

    @abstractmethod
    def fishburn_features(self, s) -> set[Hashable]:
        """Fishburn features of s."""
        pass

    @abstractmethod
    def insert(self, s, marks: Iterable[Hashable]) -> MarkedResult:
        """
        Trade marked Mahonian features for inserted Fishburn features.

        Args:
            s: Host structure
            marks: Subset of mahonian_features(s)

        Returns:
            MarkedResult holding the larger structure and its marked Fishburn features
        """
        pass

    @abstractmethod
    def remove(self, s, marks: Iterable[Hashable]) -> MarkedResult:
        """Inverse of insert: marked Fishburn features back to marked Mahonian ones."""
        pass

    @abstractmethod
    def parse(self, text: str):
        pass

    @abstractmethod
    def format(self, s) -> str:
        pass

    @abstractmethod
    def parse_mahonian_marks(self, text: str) -> list[Hashable]:
        pass

    @abstractmethod
    def parse_fishburn_marks(self, s, text: str) -> list[Hashable]:
        pass

    @abstractmethod
    def format_marks(self, result: MarkedResult, fishburn: bool) -> str:
        pass

    def mahonian_distribution(self, n: int, prefix: Sequence[int] = ()) -> dict[int, int]:
        counts = Counter(len(self.mahonian_features(s)) for s in self.enumerate(n, prefix))
        return dict(sorted(counts.items()))

    def fishburn_distribution(self, n: int, prefix: Sequence[int] = ()) -> dict[int, int]:
        counts = Counter(len(self.fishburn_features(s)) for s in self.enumerate(n, prefix))
        return dict(sorted(counts.items()))

    def round_trip_failures(self, n: int, prefix: Sequence[int] = ()) -> list[str]:
        """
        Check both compositions of insert and remove on every structure of
        size n and every subset of its features.

        Returns:
            One description per failing case; empty when all round trips hold
        """
        failures: list[str] = []
        for s in self.enumerate(n, prefix):
            for chosen in subsets(self.mahonian_features(s)):
                marks = frozenset(chosen)
                try:
                    forward = self.insert(s, marks)
                    if not forward.marks <= self.fishburn_features(forward.structure):
                        failures.append(f"{self.format(s)} {sorted(marks)}: inserted marks not Fishburn features")
                        continue
                    back = self.remove(forward.structure, forward.marks)
                except MarkingError as e:
                    failures.append(f"{self.format(s)} {sorted(marks)}: {e}")
                    continue
                if back != MarkedResult(s, marks):
                    failures.append(f"{self.format(s)} {sorted(marks)}: remove(insert) differs")

            for chosen in subsets(sorted(self.fishburn_features(s))):
                marks = frozenset(chosen)
                try:
                    backward = self.remove(s, marks)
                    again = self.insert(backward.structure, backward.marks)
                except MarkingError as e:
                    failures.append(f"{self.format(s)} {sorted(marks)}: {e}")
                    continue
                if again != MarkedResult(s, marks):
                    failures.append(f"{self.format(s)} {sorted(marks)}: insert(remove) differs")
        return failures
