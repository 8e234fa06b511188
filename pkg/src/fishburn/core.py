"""Permutations, inversions, inversion tables and their text forms."""

import itertools
import math
import re
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from typing import NamedTuple

from .errors import MarkingError, ParseError

# Longest permutation that may be written as a bare digit string
MAX_COMPACT_LENGTH = 9

_INT_RE = re.compile(r"\s*(\d+)\s*")
_PAIR_RE = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")
_PAIR_SEPARATOR_RE = re.compile(r"[\s,]*")


@dataclass(frozen=True)
class Permutation:
    """A bijection on {1, ..., n} written in one-line notation."""

    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise ValueError(f"not a permutation of 1..{len(values)}: {values}")

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __getitem__(self, index: int) -> int:
        return self.values[index]

    def __str__(self) -> str:
        return format_permutation(self)

    def position(self, value: int) -> int:
        """1-based position of value."""
        return self.values.index(value) + 1

    def value_at(self, position: int) -> int:
        """Value at a 1-based position."""
        return self.values[position - 1]


class InversionPair(NamedTuple):
    """Inversion stored by value: `first` sits left of `second` and is larger."""

    first: int
    second: int


@dataclass(frozen=True)
class InversionTable:
    """Sequence b_1..b_n with 0 <= b_i <= i - 1."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        for i, b in enumerate(entries, start=1):
            if not 0 <= b <= i - 1:
                raise ValueError(f"table entry b_{i} = {b} outside [0, {i - 1}]")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, index: int) -> int:
        return self.entries[index]

    def __str__(self) -> str:
        return ",".join(str(b) for b in self.entries)


def inversions(p: Permutation) -> list[InversionPair]:
    """
    List every inversion of p in processing order.

    Pairs are sorted by the position of their first entry; pairs sharing a
    first entry are sorted by the value of the second.

    Args:
        p: Host permutation

    Returns:
        Ordered list of InversionPair
    """
    values = p.values
    result: list[InversionPair] = []
    for i, first in enumerate(values):
        seconds = sorted(v for v in values[i + 1 :] if v < first)
        result.extend(InversionPair(first, second) for second in seconds)
    return result


def inversion_table(p: Permutation) -> InversionTable:
    """b_i counts the values smaller than i that appear to the right of i."""
    entries = []
    for i in range(1, len(p) + 1):
        pos = p.position(i)
        entries.append(sum(1 for v in p.values[pos:] if v < i))
    return InversionTable(tuple(entries))


def permutation_from_table(t: InversionTable) -> Permutation:
    """Inverse of inversion_table: value i is placed with b_i smaller values to its right."""
    values: list[int] = []
    for i, b in enumerate(t, start=1):
        values.insert(len(values) - b, i)
    return Permutation(tuple(values))


def enumerate_inversion_tables(
    n: int, prefix: Sequence[int] = ()
) -> Iterator[InversionTable]:
    """
    Yield the inversion tables of length n in lexicographic order.

    Args:
        n: Table length
        prefix: Leading entries every yielded table must start with

    Returns:
        Iterator over n! / (len(prefix))! tables
    """
    prefix = tuple(prefix)
    if len(prefix) > n:
        raise ValueError(f"prefix {prefix} longer than n={n}")
    InversionTable(prefix)
    ranges = (range(i) for i in range(len(prefix) + 1, n + 1))
    for rest in itertools.product(*ranges):
        yield InversionTable(prefix + rest)


def enumerate_permutations(n: int, first: int | None = None) -> Iterator[Permutation]:
    """Yield S_n in lexicographic order, optionally only those starting with `first`."""
    if first is None:
        for values in itertools.permutations(range(1, n + 1)):
            yield Permutation(values)
        return
    if not 1 <= first <= n:
        raise ValueError(f"first value {first} outside 1..{n}")
    rest = [v for v in range(1, n + 1) if v != first]
    for values in itertools.permutations(rest):
        yield Permutation((first, *values))


def binomial(n: int, k: int) -> int:
    """C(n, k), zero when k > n."""
    return math.comb(n, k)


def standardize(values: Iterable[int]) -> tuple[int, ...]:
    """Relabel distinct values to 1..k keeping their relative order."""
    values = tuple(values)
    rank = {v: r for r, v in enumerate(sorted(values), start=1)}
    return tuple(rank[v] for v in values)


def validate_marks(marks: Iterable, features: Iterable, what: str) -> frozenset:
    """
    Check that every mark names an existing feature.

    Args:
        marks: Candidate feature identifiers
        features: All features of the host structure
        what: Feature name used in the error message

    Returns:
        The marks as a frozenset

    Raises:
        MarkingError: If a mark is not a feature of the host
    """
    marks = frozenset(marks)
    missing = marks - frozenset(features)
    if missing:
        raise MarkingError(f"not {what}: {sorted(missing)}")
    return marks


# ---------------------------------------------------------------------------
# Text forms
# ---------------------------------------------------------------------------


def byte_offset(text: str, index: int) -> int:
    """Byte offset in the UTF-8 encoding of text for a character index."""
    return len(text[:index].encode())


def _split_ints(text: str, base: int = 0) -> list[tuple[int, int]]:
    """Parse a comma-separated integer list into (value, byte offset) pairs."""
    items: list[tuple[int, int]] = []
    pos = 0
    for piece in text.split(","):
        match = _INT_RE.fullmatch(piece)
        if match is None:
            raise ParseError(
                f"expected an integer, got {piece.strip()!r}",
                base + byte_offset(text, pos),
            )
        items.append((int(match.group(1)), base + byte_offset(text, pos + match.start(1))))
        pos += len(piece) + 1
    return items


def parse_int_list(text: str, base: int = 0) -> list[int]:
    """Parse "3,4,8,9"; the empty string is the empty list."""
    if text.strip() == "":
        return []
    return [value for value, _ in _split_ints(text, base)]


def parse_permutation(text: str, base: int = 0) -> Permutation:
    """
    Parse a permutation written as "2,4,6,5,3,1" or, up to length 9, "246531".

    Args:
        text: Permutation text
        base: Byte offset of text inside a larger input, added to error offsets

    Returns:
        The parsed Permutation

    Raises:
        ParseError: On a bad token, repeated value or value out of range
    """
    if text.strip() == "":
        return Permutation(())

    if "," in text:
        items = _split_ints(text, base)
    else:
        stripped = text.strip()
        lead = text.index(stripped)
        if len(stripped) > MAX_COMPACT_LENGTH:
            raise ParseError(
                f"digit form allows at most {MAX_COMPACT_LENGTH} entries; use commas",
                base + byte_offset(text, lead + MAX_COMPACT_LENGTH),
            )
        items = []
        for i, ch in enumerate(stripped):
            if not "1" <= ch <= "9":
                raise ParseError(
                    f"expected a digit 1-9, got {ch!r}", base + byte_offset(text, lead + i)
                )
            items.append((int(ch), base + byte_offset(text, lead + i)))

    # Repeats are reported before range errors
    seen: set[int] = set()
    for value, offset in items:
        if value in seen:
            raise ParseError(f"value {value} repeated", offset)
        seen.add(value)
    n = len(items)
    for value, offset in items:
        if not 1 <= value <= n:
            raise ParseError(f"value {value} outside 1..{n}", offset)
    return Permutation(tuple(value for value, _ in items))


def format_permutation(p: Permutation, compact: bool = False) -> str:
    """Comma form, or the digit form when compact and n <= 9."""
    if compact and len(p) <= MAX_COMPACT_LENGTH:
        return "".join(str(v) for v in p.values)
    return ",".join(str(v) for v in p.values)


def parse_inversion_table(text: str) -> InversionTable:
    """Parse "0,1,0,3,0,0"."""
    if text.strip() == "":
        return InversionTable(())
    items = _split_ints(text)
    for i, (b, offset) in enumerate(items, start=1):
        if b > i - 1:
            raise ParseError(f"table entry b_{i} = {b} outside [0, {i - 1}]", offset)
    return InversionTable(tuple(b for b, _ in items))


def parse_pairs(text: str) -> list[tuple[int, int]]:
    """
    Parse a pair list such as "(4,1)(6,1)(6,5)".

    Pairs may be separated by whitespace or commas.

    Raises:
        ParseError: At the first character that does not start a pair
    """
    pairs: list[tuple[int, int]] = []
    pos = _PAIR_SEPARATOR_RE.match(text, 0).end()
    while pos < len(text):
        match = _PAIR_RE.match(text, pos)
        if match is None:
            raise ParseError("expected a pair '(a,b)'", byte_offset(text, pos))
        pairs.append((int(match.group(1)), int(match.group(2))))
        pos = _PAIR_SEPARATOR_RE.match(text, match.end()).end()
    return pairs


def format_pairs(items: Iterable[tuple[int, ...]]) -> str:
    """Inverse of parse_pairs, in the given order; also prints longer tuples."""
    return "".join("(" + ",".join(str(v) for v in item) + ")" for item in items)
