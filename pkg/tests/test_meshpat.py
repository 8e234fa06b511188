import pytest

from src.fishburn import fixtures
from src.fishburn.core import Permutation, enumerate_permutations, inversions, parse_permutation
from src.fishburn.errors import MarkingError, ParseError
from src.fishburn.genfun import fishburn_triangle, mahonian_row
from src.fishburn.meshpat import (
    BUILTINS,
    MarkedPermutation,
    MeshPattern,
    as_row,
    builtin,
    combination_distribution,
    count,
    distribution,
    format_pattern,
    insert_sigma,
    is_occurrence,
    occurrences,
    parse_pattern,
    remove_sigma,
    resolve_pattern,
    sigma_occurrence_at,
)

SIGMA_TEXT = "231|1,0;1,1;1,2;1,3;0,1;2,1;3,1"


class TestMeshPattern:
    """Tests for the pattern type and its text form."""

    def test_parse_sigma(self):
        """Test that the written-out sigma equals the builtin."""
        assert parse_pattern(SIGMA_TEXT) == builtin("sigma")

    def test_canonical_printing(self):
        """Test that cells print sorted."""
        assert format_pattern(parse_pattern(SIGMA_TEXT)) == "231|0,1;1,0;1,1;1,2;1,3;2,1;3,1"

    def test_classical_pattern(self):
        """Test a pattern without shading."""
        P = parse_pattern("21")
        assert P.shading == frozenset()
        assert format_pattern(P) == "21"

    def test_comma_form(self):
        """Test the comma-separated pattern form."""
        assert parse_pattern("2,3,1|1,0") == parse_pattern("231|1,0")

    @pytest.mark.parametrize(
        "text, offset",
        [
            ("21|5,0", 3),
            ("21|1,3", 5),
            ("21|1,x", 3),
            ("21|1,0;", 7),
            ("2a1|1,0", 1),
        ],
    )
    def test_parse_errors(self, text, offset):
        """Test that malformed patterns report a byte offset."""
        with pytest.raises(ParseError) as info:
            parse_pattern(text)
        assert info.value.offset == offset

    def test_cell_out_of_range_in_constructor(self):
        """Test that the constructor validates cells."""
        with pytest.raises(ValueError):
            MeshPattern(Permutation((2, 1)), frozenset({(3, 0)}))

    @pytest.mark.parametrize("name", sorted(BUILTINS))
    def test_builtins_parse(self, name):
        """Test that every builtin round-trips through its printed form."""
        P = builtin(name)
        assert parse_pattern(format_pattern(P)) == P

    def test_builtin_shapes(self):
        """Test the sizes of the transcribed patterns."""
        assert len(builtin("p1")) == 4
        assert len(builtin("p1").shading) == 11
        assert len(builtin("q1").shading) == 11
        assert builtin("p2").shading == builtin("sigma").shading | {(3, 0)}

    def test_unknown_builtin(self):
        """Test that unknown names raise ValueError."""
        with pytest.raises(ValueError):
            builtin("tau")

    def test_resolve_pattern(self):
        """Test that names and pattern text both resolve."""
        assert resolve_pattern("sigma") == builtin("sigma")
        assert resolve_pattern("21") == builtin("inv")


class TestOccurrences:
    """Tests for the occurrence engine."""

    def test_sigma_132_example(self):
        """Test that 475 is excluded by the shading while 465 and 253 remain."""
        p = parse_permutation("4671253")
        assert occurrences(builtin("sigma-132"), p) == [(1, 2, 6), (5, 6, 7)]
        assert not is_occurrence(builtin("sigma-132"), p, (1, 3, 6))

    def test_classical_occurrences(self):
        """Test that an unshaded 21 finds every inversion."""
        p = parse_permutation("231")
        assert occurrences(builtin("inv"), p) == [(1, 3), (2, 3)]

    def test_count_matches_inversions(self):
        """Test that 21 counts inversions."""
        for p in enumerate_permutations(5):
            assert count(builtin("inv"), p) == len(inversions(p))

    def test_wrong_length_is_not_occurrence(self):
        """Test that a position tuple of the wrong length is rejected."""
        assert not is_occurrence(builtin("sigma"), parse_permutation("231"), (1, 2))

    def test_pattern_longer_than_host(self):
        """Test that nothing is found in a shorter permutation."""
        assert occurrences(builtin("p1"), parse_permutation("21")) == []

    def test_inversion_distribution(self):
        """Test the 21 distribution over S_3."""
        assert distribution(builtin("inv"), 3) == {0: 1, 1: 2, 2: 2, 3: 1}

    @pytest.mark.parametrize("n", range(1, 6))
    def test_sigma_follows_fishburn_rows(self, n):
        """Test the sigma distribution against the Fishburn triangle."""
        assert as_row(distribution(builtin("sigma"), n)) == fishburn_triangle(5).rows[n]

    def test_sigma_321_classical_part(self):
        """Test that sigma-321 is drawn on 312 and gives the Fishburn rows."""
        P = builtin("sigma-321")
        assert P.pattern == parse_permutation("312")
        assert P.shading == builtin("sigma").shading
        for n in range(1, 7):
            assert as_row(distribution(P, n)) == fishburn_triangle(6).rows[n]

    @pytest.mark.parametrize("name", ["sigma-321", "sigma-132", "upsilon"])
    def test_equidistributed_with_sigma(self, name):
        """Test the patterns that share sigma's distribution."""
        for n in range(1, 6):
            assert distribution(builtin(name), n) == distribution(builtin("sigma"), n)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_mahonian_combination(self, n):
        """Test that the two-pattern combination is Mahonian."""
        patterns = [builtin("mahonian-231"), builtin("mahonian-21")]
        assert as_row(combination_distribution(patterns, n)) == mahonian_row(n)

    def test_distribution_by_first_value(self):
        """Test that first-value slices add up to the whole distribution."""
        whole = distribution(builtin("sigma"), 5)
        total: dict[int, int] = {}
        for first in range(1, 6):
            for k, c in distribution(builtin("sigma"), 5, first).items():
                total[k] = total.get(k, 0) + c
        assert total == whole

    def test_as_row(self):
        """Test turning a distribution map into a row."""
        assert as_row({0: 5, 2: 1}) == (5, 0, 1)
        assert as_row({}) == ()


class TestSigmaBijection:
    """Tests for marked inversions <-> marked sigma-occurrences."""

    def test_worked_example(self):
        """Test the 246531 insertion."""
        example = fixtures.PERMUTATION_EXAMPLE
        mp = MarkedPermutation(
            parse_permutation(example["input"]), marked_inversions=frozenset(example["marks"])
        )
        result = insert_sigma(mp)
        assert result.perm == parse_permutation(example["output"])
        assert result.marked_occurrences == frozenset(example["occurrences"])

    def test_worked_example_reversed(self):
        """Test that removal recovers the marked inversions."""
        example = fixtures.PERMUTATION_EXAMPLE
        mp = MarkedPermutation(
            parse_permutation(example["output"]),
            marked_occurrences=frozenset(example["occurrences"]),
        )
        result = remove_sigma(mp)
        assert result.perm == parse_permutation(example["input"])
        assert result.marked_inversions == frozenset(example["marks"])

    def test_empty_marks_unchanged(self):
        """Test that no marks means no change."""
        p = parse_permutation("2413")
        assert insert_sigma(MarkedPermutation(p)).perm == p
        assert remove_sigma(MarkedPermutation(p)).perm == p

    def test_inserted_entries_open_marked_occurrences(self):
        """Test that every marked occurrence is a sigma-occurrence of the result."""
        result = insert_sigma(
            MarkedPermutation(parse_permutation("321"), marked_inversions=frozenset(inversions(parse_permutation("321"))))
        )
        assert len(result.perm) == 6
        assert result.marked_occurrences <= set(occurrences(builtin("sigma"), result.perm))

    def test_sigma_occurrence_at(self):
        """Test locating an occurrence by its first position."""
        p = parse_permutation("436289751")
        assert sigma_occurrence_at(p, 2) == (2, 3, 4)
        assert sigma_occurrence_at(p, 1) is None
        assert sigma_occurrence_at(p, 9) is None

    def test_non_inversion_mark(self):
        """Test that marking a non-inversion raises MarkingError."""
        with pytest.raises(MarkingError):
            insert_sigma(MarkedPermutation(parse_permutation("123"), marked_inversions=frozenset({(1, 2)})))

    def test_non_occurrence_mark(self):
        """Test that marking a non-occurrence raises MarkingError."""
        with pytest.raises(MarkingError):
            remove_sigma(MarkedPermutation(parse_permutation("123"), marked_occurrences=frozenset({(1, 2, 3)})))

    def test_both_markings_rejected(self):
        """Test that a permutation cannot carry both kinds of marks."""
        with pytest.raises(MarkingError):
            MarkedPermutation(
                parse_permutation("2413"),
                marked_inversions=frozenset({(2, 1)}),
                marked_occurrences=frozenset({(1, 2, 3)}),
            )

    def test_round_trip_small(self):
        """Test both compositions over S_n, n <= 4, with every mark subset."""
        from src.fishburn.structures import subsets

        for n in range(5):
            for p in enumerate_permutations(n):
                for chosen in subsets(inversions(p)):
                    mp = MarkedPermutation(p, marked_inversions=frozenset(chosen))
                    assert remove_sigma(insert_sigma(mp)) == mp
