import pytest

from src.fishburn.core import parse_permutation
from src.fishburn.verify import (
    DEFAULT_BOUNDS,
    SUITES,
    CheckResult,
    Report,
    Verifier,
    decomposition_holds,
    involution_holds,
    print_report,
    second_entry_lemma_holds,
    sigma_marks_hold,
    verify,
)


class TestCheckResult:
    """Tests for check results and reports."""

    def test_failing_check_needs_payloads(self):
        """Test that a failure without expected and actual is rejected."""
        with pytest.raises(ValueError):
            CheckResult("broken", False)

    def test_passing_check_without_payloads(self):
        """Test that a pass needs no payloads."""
        assert CheckResult("fine", True).expected is None

    def test_report_passed(self):
        """Test that one failure fails the report."""
        report = Report("x", [CheckResult("a", True), CheckResult("b", False, [1], [2])])
        assert not report.passed
        assert [c.name for c in report.failures] == ["b"]

    def test_json_round_trip(self):
        """Test that a report re-serialises byte for byte."""
        report = Report(
            "identities",
            [CheckResult("a", True, seconds=0.25), CheckResult("b", False, {"3": [5, 1]}, {"3": [5, 2]}, 1.5)],
            2.0,
        )
        text = report.to_json()
        assert Report.from_json(text).to_json() == text
        assert '"passed":false' in text


class TestProperties:
    """Tests for per-permutation properties."""

    @pytest.mark.parametrize("text", ["123", "3421", "4671253", "456132"])
    def test_decomposition(self, text):
        """Test sigma = p1 + p2 and upsilon = q1 + q2 on single permutations."""
        assert decomposition_holds(parse_permutation(text))

    def test_second_entry_lemma(self):
        """Test the second-entry property on one permutation."""
        assert second_entry_lemma_holds(parse_permutation("456132"))

    def test_involution_holds(self):
        """Test the involution property on an inconsistent permutation."""
        assert involution_holds(parse_permutation("456132"))

    @pytest.mark.parametrize("n", range(0, 5))
    def test_sigma_marks(self, n):
        """Test that insertion creates exactly the marked occurrences."""
        assert sigma_marks_hold(n) == []


class TestVerifier:
    """Tests for the suites at small sizes."""

    @pytest.mark.parametrize("suite", SUITES)
    def test_suites_pass(self, suite):
        """Test that every suite passes with small bounds."""
        report = Verifier(max_n=4).run(suite)
        assert report.checks
        assert report.passed, [(c.name, c.expected, c.actual) for c in report.failures]

    def test_all_prefixes_names(self):
        """Test that the combined run names checks by suite."""
        report = verify("all", max_n=3)
        assert report.passed
        assert report.checks[0].name.startswith("identities: ")
        assert {c.name.split(":")[0] for c in report.checks} == set(SUITES)

    def test_unknown_suite(self):
        """Test that unknown suites raise ValueError."""
        with pytest.raises(ValueError):
            Verifier().run("everything")

    def test_bound(self):
        """Test that max_n replaces every default bound."""
        assert Verifier().bound("patterns") == DEFAULT_BOUNDS["patterns"]
        assert Verifier(max_n=3).bound("patterns") == 3

    def test_jobs_do_not_change_results(self):
        """Test that a process pool gives the same checks as a serial run."""
        serial = Verifier(max_n=5, jobs=1).run("posets")
        parallel = Verifier(max_n=5, jobs=2).run("posets")
        assert [(c.name, c.passed) for c in parallel.checks] == [(c.name, c.passed) for c in serial.checks]

    def test_partition_merge(self):
        """Test that partitioned distributions merge to the whole."""
        verifier = Verifier(jobs=1)
        assert verifier.structure_distribution("poset", "fishburn", 5) == {0: 53, 1: 62, 2: 5}

    def test_print_report(self, capsys):
        """Test the table layout and summary line."""
        report = Report("demo", [CheckResult("a", True), CheckResult("b", False, [1], [2])], 0.5)
        print_report(report)
        out = capsys.readouterr().out
        assert "VERIFICATION RESULTS: demo" in out
        assert "expected: [1]" in out
        assert out.rstrip().endswith("1 passed, 1 failed in 0.50s")
