import numpy as np
import pytest

from src.fishburn import fixtures
from src.fishburn.errors import MarkingError, ParseError, PosetError
from src.fishburn.posets import (
    FactorialPoset,
    GenericPoset,
    MarkedPoset,
    canonical_representatives,
    enumerate_factorial_posets,
    format_poset,
    incomparable_pairs,
    insert_mislabelings,
    is_canonical,
    is_interval_order,
    is_isomorphic,
    is_two_plus_two_free,
    leq,
    mislabelings,
    parse_generic_poset,
    parse_poset,
    remove_mislabelings,
)
from src.fishburn.structures import subsets

EXAMPLE = FactorialPoset(fixtures.POSET_EXAMPLE["input"])
TWO_PLUS_TWO = GenericPoset.from_relations(4, [(1, 2), (3, 4)])
CHAIN = GenericPoset.from_relations(4, [(1, 2), (2, 3), (3, 4)])


class TestFactorialPoset:
    """Tests for bounds-vector posets."""

    def test_bounds_checked(self):
        """Test that b_k must lie in [0, k - 1]."""
        with pytest.raises(PosetError):
            FactorialPoset((0, 2))

    def test_order_relation(self):
        """Test i < j iff i <= b_j."""
        assert leq(EXAMPLE, 3, 4)
        assert leq(EXAMPLE, 1, 2)
        assert not leq(EXAMPLE, 1, 3)
        assert not leq(EXAMPLE, 4, 3)

    def test_pre_and_suc(self):
        """Test predecessor and successor counts."""
        assert [EXAMPLE.pre(i) for i in range(1, 7)] == [0, 1, 0, 3, 0, 0]
        assert [EXAMPLE.suc(i) for i in range(1, 7)] == [2, 1, 1, 0, 0, 0]
        assert EXAMPLE.predecessors(4) == {1, 2, 3}
        assert EXAMPLE.successors(1) == {2, 4}

    def test_element_out_of_range(self):
        """Test that labels outside 1..n are rejected."""
        with pytest.raises(PosetError):
            EXAMPLE.pre(7)

    def test_incomparable_pairs(self):
        """Test the order and count of incomparable pairs."""
        pairs = incomparable_pairs(EXAMPLE)
        assert len(pairs) == 11
        assert pairs[:2] == [(2, 3), (1, 3)]
        assert (1, 2) not in pairs

    def test_mislabelings(self):
        """Test the mislabelings of the example poset."""
        assert mislabelings(EXAMPLE) == {2, 4}
        assert not is_canonical(EXAMPLE)

    def test_enumeration(self):
        """Test that there are n! factorial posets on [n]."""
        assert len(list(enumerate_factorial_posets(4))) == 24

    @pytest.mark.parametrize("n, expected", [(1, 1), (2, 2), (3, 5), (4, 15)])
    def test_canonical_counts(self, n, expected):
        """Test the canonical representatives against the Fishburn numbers."""
        assert len(canonical_representatives(n)) == expected

    def test_text_form(self):
        """Test parsing and printing bounds vectors."""
        assert format_poset(parse_poset("0,1,0,3,0,0")) == "0,1,0,3,0,0"
        with pytest.raises(ParseError):
            parse_poset("0,2")


class TestGenericPoset:
    """Tests for arbitrary strict orders."""

    def test_transitive_closure(self):
        """Test that generating relations are closed."""
        assert CHAIN.relation[0, 3]

    def test_cycle_rejected(self):
        """Test that cyclic relations are not orders."""
        with pytest.raises(PosetError):
            GenericPoset.from_relations(2, [(1, 2), (2, 1)])

    def test_non_transitive_matrix_rejected(self):
        """Test that a matrix missing a composite relation is rejected."""
        relation = np.zeros((3, 3), dtype=bool)
        relation[0, 1] = relation[1, 2] = True
        with pytest.raises(PosetError):
            GenericPoset(relation)

    def test_reflexive_matrix_rejected(self):
        """Test that the diagonal must be empty."""
        with pytest.raises(PosetError):
            GenericPoset(np.eye(2, dtype=bool))

    def test_interval_orders(self):
        """Test interval-order and 2+2 detection."""
        assert not is_interval_order(TWO_PLUS_TWO)
        assert not is_two_plus_two_free(TWO_PLUS_TWO)
        assert is_interval_order(CHAIN)
        assert is_two_plus_two_free(CHAIN)

    def test_factorial_posets_are_interval_orders(self):
        """Test every factorial poset on [4]."""
        for P in enumerate_factorial_posets(4):
            Q = P.to_generic()
            assert is_interval_order(Q)
            assert is_two_plus_two_free(Q)

    def test_isomorphism(self):
        """Test that relabelling keeps the isomorphism class."""
        two_chain = FactorialPoset((0, 1))
        assert is_isomorphic(two_chain, GenericPoset.from_relations(2, [(2, 1)]))
        assert not is_isomorphic(two_chain, FactorialPoset((0, 0)))

    def test_parse_generic_poset(self):
        """Test the relation list form."""
        assert parse_generic_poset("1<2, 3<4", 4) == TWO_PLUS_TWO
        assert parse_generic_poset("", 2) == GenericPoset.from_relations(2, [])

    def test_parse_generic_poset_error(self):
        """Test the offset of a malformed relation."""
        with pytest.raises(ParseError) as info:
            parse_generic_poset("1<2,x", 4)
        assert info.value.offset == 4


class TestMislabelingBijection:
    """Tests for marked incomparable pairs <-> marked mislabelings."""

    def test_single_insertion(self):
        """Test inserting into the 2-antichain."""
        result = insert_mislabelings(MarkedPoset(FactorialPoset((0, 0)), marked_pairs=frozenset({(1, 2)})))
        assert result.poset == FactorialPoset((0, 1, 0))
        assert result.marked_mislabelings == {2}
        assert mislabelings(result.poset) == {2}

    def test_worked_example(self):
        """Test the four-mark insertion."""
        example = fixtures.POSET_EXAMPLE
        result = insert_mislabelings(MarkedPoset(EXAMPLE, marked_pairs=frozenset(example["marks"])))
        assert result.poset == FactorialPoset(example["output"])
        assert result.marked_mislabelings == frozenset(example["mislabelings"])

    def test_worked_example_reversed(self):
        """Test that removal recovers the marked pairs."""
        example = fixtures.POSET_EXAMPLE
        result = remove_mislabelings(
            MarkedPoset(
                FactorialPoset(example["output"]),
                marked_mislabelings=frozenset(example["mislabelings"]),
            )
        )
        assert result.poset == EXAMPLE
        assert result.marked_pairs == frozenset(example["marks"])

    def test_invalid_marks(self):
        """Test that marks must name features of the host."""
        with pytest.raises(MarkingError):
            insert_mislabelings(MarkedPoset(FactorialPoset((0, 1)), marked_pairs=frozenset({(1, 2)})))
        with pytest.raises(MarkingError):
            remove_mislabelings(MarkedPoset(EXAMPLE, marked_mislabelings=frozenset({1})))

    def test_both_markings_rejected(self):
        """Test that a poset cannot carry both kinds of marks."""
        with pytest.raises(MarkingError):
            MarkedPoset(EXAMPLE, marked_pairs=frozenset({(2, 3)}), marked_mislabelings=frozenset({2}))

    def test_round_trip_small(self):
        """Test both compositions on [n], n <= 4, with every mark subset."""
        for n in range(5):
            for P in enumerate_factorial_posets(n):
                for chosen in subsets(incomparable_pairs(P)):
                    mp = MarkedPoset(P, marked_pairs=frozenset(chosen))
                    assert remove_mislabelings(insert_mislabelings(mp)) == mp
                for chosen in subsets(sorted(mislabelings(P))):
                    mp = MarkedPoset(P, marked_mislabelings=frozenset(chosen))
                    assert insert_mislabelings(remove_mislabelings(mp)) == mp
