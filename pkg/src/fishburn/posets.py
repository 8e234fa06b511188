"""Factorial posets, interval-order checks and the mislabeling bijection."""

import itertools
import logging
import re
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

import networkx as nx
import numpy as np

from .core import (
    InversionTable,
    byte_offset,
    enumerate_inversion_tables,
    parse_inversion_table,
    validate_marks,
)
from .errors import MarkingError, ParseError, PosetError

logger = logging.getLogger(__name__)

Pair = tuple[int, int]

_RELATION_RE = re.compile(r"\s*(\d+)\s*<\s*(\d+)\s*")


@dataclass(frozen=True)
class FactorialPoset:
    """
    Poset on [n] with Pre(k) = [1, b_k].

    Only the bounds vector is stored; i <_P j iff i <= b_j.
    """

    bounds: tuple[int, ...]

    def __post_init__(self):
        bounds = tuple(self.bounds)
        object.__setattr__(self, "bounds", bounds)
        for k, b in enumerate(bounds, start=1):
            if not 0 <= b <= k - 1:
                raise PosetError(f"bound b_{k} = {b} outside [0, {k - 1}]")

    @property
    def n(self) -> int:
        return len(self.bounds)

    def __len__(self) -> int:
        return len(self.bounds)

    def __str__(self) -> str:
        return format_poset(self)

    def _check(self, *labels: int) -> None:
        for label in labels:
            if not 1 <= label <= self.n:
                raise PosetError(f"element {label} outside 1..{self.n}")

    def pre(self, i: int) -> int:
        """|Pre(i)|, which is also its largest element."""
        self._check(i)
        return self.bounds[i - 1]

    def suc(self, i: int) -> int:
        return len(self.successors(i))

    def predecessors(self, k: int) -> set[int]:
        return set(range(1, self.pre(k) + 1))

    def successors(self, i: int) -> set[int]:
        self._check(i)
        return {k for k, b in enumerate(self.bounds, start=1) if i <= b}

    def to_generic(self) -> "GenericPoset":
        n = self.n
        relation = np.zeros((n, n), dtype=bool)
        for j, b in enumerate(self.bounds):
            relation[:b, j] = True
        return GenericPoset(relation)


@dataclass(frozen=True)
class MarkedPoset:
    """A factorial poset with either marked incomparable pairs or marked mislabelings."""

    poset: FactorialPoset
    marked_pairs: frozenset[Pair] = frozenset()
    marked_mislabelings: frozenset[int] = frozenset()

    def __post_init__(self):
        pairs = frozenset(tuple(p) for p in self.marked_pairs)
        labels = frozenset(self.marked_mislabelings)
        object.__setattr__(self, "marked_pairs", pairs)
        object.__setattr__(self, "marked_mislabelings", labels)
        if pairs and labels:
            raise MarkingError("a poset carries marked pairs or marked mislabelings, not both")


def from_inversion_table(t: InversionTable) -> FactorialPoset:
    return FactorialPoset(t.entries)


def enumerate_factorial_posets(n: int, prefix: Sequence[int] = ()) -> Iterator[FactorialPoset]:
    for t in enumerate_inversion_tables(n, prefix):
        yield from_inversion_table(t)


def leq(P: FactorialPoset, i: int, j: int) -> bool:
    """Strict order: i <_P j iff i <= b_j."""
    P._check(i, j)
    return i <= P.bounds[j - 1]


def incomparable_pairs(P: FactorialPoset) -> list[Pair]:
    """All (i, j) with i < j and i not below j, by ascending j then descending i."""
    return [
        (i, j)
        for j, b in enumerate(P.bounds, start=1)
        for i in range(j - 1, b, -1)
    ]


def mislabelings(P: FactorialPoset) -> set[int]:
    """Labels i < n with pre(i) > pre(i+1) and suc(i) <= suc(i+1)."""
    return {
        i
        for i in range(1, P.n)
        if P.pre(i) > P.pre(i + 1) and P.suc(i) <= P.suc(i + 1)
    }


def is_canonical(P: FactorialPoset) -> bool:
    return not mislabelings(P)


def canonical_representatives(n: int) -> list[FactorialPoset]:
    """Canonically labelled factorial posets on [n], one per unlabelled (2+2)-free poset."""
    return [P for P in enumerate_factorial_posets(n) if is_canonical(P)]


def insert_mislabelings(mp: MarkedPoset) -> MarkedPoset:
    """
    Insert one mislabeling per marked incomparable pair.

    Marks are processed in incomparable-pair order. For (i, j) a new element
    with predecessors {1..i} and the successors of j takes label j; old
    labels >= j move up by one.

    Raises:
        MarkingError: If a mark is not an incomparable pair
    """
    order = {pair: index for index, pair in enumerate(incomparable_pairs(mp.poset))}
    validate_marks(mp.marked_pairs, order, "incomparable pairs")
    pending = sorted(mp.marked_pairs, key=order.__getitem__)

    bounds = list(mp.poset.bounds)
    inserted: list[int] = []
    for step, (i, j) in enumerate(pending):

        def shift(x: int) -> int:
            return x + (x >= j)

        bounds = bounds[: j - 1] + [i] + [shift(b) for b in bounds[j - 1 :]]
        inserted = [shift(x) for x in inserted] + [j]
        pending[step + 1 :] = [(shift(a), shift(c)) for a, c in pending[step + 1 :]]

    logger.debug("insert_mislabelings -> %s, marks %s", bounds, sorted(inserted))
    return MarkedPoset(FactorialPoset(tuple(bounds)), marked_mislabelings=frozenset(inserted))


def remove_mislabelings(mp: MarkedPoset) -> MarkedPoset:
    """
    Inverse of insert_mislabelings.

    The largest marked mislabeling j is removed first; the recorded pair is
    (b_j, j), already in the labels left after the removal.

    Raises:
        MarkingError: If a mark is not a mislabeling or the marking is not in
            the image of insert_mislabelings
    """
    if not mp.marked_mislabelings:
        return MarkedPoset(mp.poset)
    validate_marks(mp.marked_mislabelings, mislabelings(mp.poset), "mislabelings")

    bounds = list(mp.poset.bounds)
    marked = set(mp.marked_mislabelings)
    records: list[Pair] = []
    while marked:
        j = max(marked)
        ell = bounds[j - 1]

        def unshift(x: int) -> int:
            return x - (x > j)

        bounds = bounds[: j - 1] + [b - (b >= j) for b in bounds[j:]]
        records = [(unshift(a), unshift(c)) for a, c in records] + [(ell, j)]
        marked = {unshift(x) for x in marked if x != j}

    result = MarkedPoset(FactorialPoset(tuple(bounds)), marked_pairs=frozenset(records))
    if len(result.marked_pairs) != len(records) or insert_mislabelings(result) != mp:
        raise MarkingError("marked mislabelings are not the image of any marked incomparable pairs")
    return result


# ---------------------------------------------------------------------------
# Arbitrary finite posets
# ---------------------------------------------------------------------------


class GenericPoset:
    """Strict partial order on [n] as a boolean matrix: relation[i-1, j-1] iff i < j."""

    def __init__(self, relation: np.ndarray):
        relation = np.asarray(relation, dtype=bool)
        if relation.ndim != 2 or relation.shape[0] != relation.shape[1]:
            raise PosetError(f"relation must be square, got shape {relation.shape}")
        if relation.diagonal().any():
            raise PosetError("relation is not irreflexive")
        if (relation & relation.T).any():
            raise PosetError("relation is not antisymmetric")
        composed = (relation.astype(np.int64) @ relation.astype(np.int64)) > 0
        if (composed & ~relation).any():
            raise PosetError("relation is not transitive")
        self.relation = relation

    @property
    def n(self) -> int:
        return self.relation.shape[0]

    @classmethod
    def from_relations(cls, n: int, relations: Iterable[Pair]) -> "GenericPoset":
        """Strict order generated by `relations` (transitive closure is taken)."""
        graph = nx.DiGraph()
        graph.add_nodes_from(range(1, n + 1))
        for a, b in relations:
            if not (1 <= a <= n and 1 <= b <= n):
                raise PosetError(f"relation {a}<{b} outside 1..{n}")
            graph.add_edge(a, b)
        if not nx.is_directed_acyclic_graph(graph):
            raise PosetError("relations contain a cycle")
        closure = nx.transitive_closure_dag(graph)
        relation = np.zeros((n, n), dtype=bool)
        for a, b in closure.edges:
            relation[a - 1, b - 1] = True
        return cls(relation)

    def to_graph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(range(1, self.n + 1))
        graph.add_edges_from((int(a) + 1, int(b) + 1) for a, b in np.argwhere(self.relation))
        return graph

    def __eq__(self, other) -> bool:
        if not isinstance(other, GenericPoset):
            return NotImplemented
        return np.array_equal(self.relation, other.relation)


def is_interval_order(Q: GenericPoset) -> bool:
    """Predecessor sets are totally ordered by inclusion."""
    preds = Q.relation.T  # row j: predecessors of j
    subset = ~np.any(preds[:, None, :] & ~preds[None, :, :], axis=2)
    return bool(np.all(subset | subset.T))


def is_two_plus_two_free(Q: GenericPoset) -> bool:
    """No a < b, c < d with a, b both incomparable to c, d."""
    rel = Q.relation
    comparable = rel | rel.T
    chains = [(int(a), int(b)) for a, b in np.argwhere(rel)]
    for (a, b), (c, d) in itertools.combinations(chains, 2):
        if len({a, b, c, d}) < 4:
            continue
        if not (comparable[a, c] or comparable[a, d] or comparable[b, c] or comparable[b, d]):
            return False
    return True


def is_isomorphic(P: FactorialPoset | GenericPoset, Q: FactorialPoset | GenericPoset) -> bool:
    """Brute-force isomorphism of the order relations."""
    if isinstance(P, FactorialPoset):
        P = P.to_generic()
    if isinstance(Q, FactorialPoset):
        Q = Q.to_generic()
    return nx.is_isomorphic(P.to_graph(), Q.to_graph())


# ---------------------------------------------------------------------------
# Text forms
# ---------------------------------------------------------------------------


def parse_poset(text: str) -> FactorialPoset:
    """Parse a bounds vector such as "0,1,0,3,0,0"."""
    return FactorialPoset(parse_inversion_table(text).entries)


def format_poset(P: FactorialPoset) -> str:
    return ",".join(str(b) for b in P.bounds)


def parse_generic_poset(text: str, n: int) -> GenericPoset:
    """Parse "1<2,2<4,3<4" on [n]."""
    relations: list[Pair] = []
    if text.strip():
        pos = 0
        for piece in text.split(","):
            match = _RELATION_RE.fullmatch(piece)
            if match is None:
                raise ParseError(f"expected 'a<b', got {piece.strip()!r}", byte_offset(text, pos))
            a, b = int(match.group(1)), int(match.group(2))
            if not (1 <= a <= n and 1 <= b <= n):
                raise ParseError(f"element outside 1..{n}", byte_offset(text, pos + match.start(1)))
            relations.append((a, b))
            pos += len(piece) + 1
    return GenericPoset.from_relations(n, relations)
