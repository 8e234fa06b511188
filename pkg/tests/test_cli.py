import json

import pytest

from src.fishburn.cli import EXIT_FAILED, EXIT_INPUT, EXIT_OK, EXIT_USAGE, build_parser, run
from src.fishburn.config import DEFAULT_JOBS, DEFAULT_RESIDUAL_LIMIT, load_settings
from src.fishburn.errors import ConfigError


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    for name in ("FISHBURN_JOBS", "FISHBURN_LOG_LEVEL", "FISHBURN_RESIDUAL_LIMIT"):
        monkeypatch.delenv(name, raising=False)


def output_lines(capsys) -> list[str]:
    return capsys.readouterr().out.splitlines()


class TestSettings:
    """Tests for environment configuration."""

    def test_defaults(self):
        """Test the settings with nothing set."""
        settings = load_settings()
        assert settings.jobs == DEFAULT_JOBS
        assert settings.residual_limit == DEFAULT_RESIDUAL_LIMIT
        assert settings.log_level == "WARNING"

    def test_reads_environment(self, monkeypatch):
        """Test that FISHBURN_* variables are read."""
        monkeypatch.setenv("FISHBURN_JOBS", "4")
        monkeypatch.setenv("FISHBURN_LOG_LEVEL", "debug")
        settings = load_settings()
        assert settings.jobs == 4
        assert settings.log_level == "DEBUG"

    @pytest.mark.parametrize(
        "name, value",
        [
            ("FISHBURN_JOBS", "0"),
            ("FISHBURN_JOBS", "many"),
            ("FISHBURN_LOG_LEVEL", "LOUD"),
            ("FISHBURN_RESIDUAL_LIMIT", "-1"),
        ],
    )
    def test_invalid_values(self, monkeypatch, name, value):
        """Test that unusable values raise ConfigError."""
        monkeypatch.setenv(name, value)
        with pytest.raises(ConfigError):
            load_settings()

    def test_invalid_environment_is_usage_error(self, monkeypatch, capsys):
        """Test that the CLI exits 2 on bad configuration."""
        monkeypatch.setenv("FISHBURN_JOBS", "0")
        assert run(["triangle", "--kind", "fishburn", "--rows", "2"]) == EXIT_USAGE
        assert "FISHBURN_JOBS" in capsys.readouterr().err


class TestTriangleCommand:
    """Tests for the triangle subcommand."""

    def test_rows_from_one(self, capsys):
        """Test the first five Fishburn rows."""
        assert run(["triangle", "--kind", "fishburn", "--rows", "5", "--from", "1", "--format", "csv"]) == EXIT_OK
        assert output_lines(capsys) == ["1", "2", "5,1", "15,9", "53,62,5"]

    def test_rows_from_zero(self, capsys):
        """Test that row 0 is included by default."""
        assert run(["triangle", "--kind", "mahonian", "--rows", "3", "--format", "csv"]) == EXIT_OK
        assert output_lines(capsys) == ["1", "1", "1,1"]

    def test_table_values(self, capsys):
        """Test the aligned table form."""
        run(["triangle", "--kind", "unsieved", "--rows", "4", "--from", "1"])
        assert [line.split() for line in output_lines(capsys)] == [["1"], ["2"], ["6", "1"], ["24", "9"]]

    def test_json(self, capsys):
        """Test the JSON form."""
        run(["triangle", "--kind", "fishburn", "--rows", "3", "--from", "1", "--format", "json"])
        assert json.loads(capsys.readouterr().out) == {"rows": [[1], [2], [5, 1]]}

    def test_invalid_start(self):
        """Test that --from only accepts 0 or 1."""
        assert run(["triangle", "--kind", "fishburn", "--rows", "3", "--from", "2"]) == EXIT_USAGE

    def test_negative_rows(self, capsys):
        """Test that a negative row count is a usage error."""
        assert run(["triangle", "--kind", "fishburn", "--rows", "-1"]) == EXIT_USAGE
        assert capsys.readouterr().err.startswith("Error:")


class TestPatternCommands:
    """Tests for distribution, stat and occurrences."""

    def test_distribution(self, capsys):
        """Test the inversion distribution over S_3."""
        assert run(["distribution", "--pattern", "21", "--n", "3", "--format", "csv"]) == EXIT_OK
        assert output_lines(capsys) == ["1,2,2,1"]

    def test_sigma_distribution(self, capsys):
        """Test the sigma distribution over S_5."""
        run(["distribution", "--pattern", "sigma", "--n", "5", "--format", "csv"])
        assert output_lines(capsys) == ["53,62,5"]

    def test_bad_pattern(self, capsys):
        """Test that malformed pattern text exits 3."""
        assert run(["distribution", "--pattern", "21|5,0", "--n", "3"]) == EXIT_INPUT
        assert "at byte 3" in capsys.readouterr().err

    @pytest.mark.parametrize("structure", ["perm", "matchings", "posets"])
    def test_stat(self, structure, capsys):
        """Test the Fishburn statistic of every structure at n = 4."""
        statistic = {"perm": "sigma", "matchings": "confused", "posets": "mislabelings"}[structure]
        assert run(["stat", "--structure", structure, "--statistic", statistic, "--n", "4", "--format", "csv"]) == EXIT_OK
        assert output_lines(capsys) == ["15,9"]

    def test_stat_wrong_statistic(self):
        """Test that a statistic of another structure is a usage error."""
        assert run(["stat", "--structure", "perm", "--statistic", "confused", "--n", "3"]) == EXIT_USAGE

    @pytest.mark.parametrize(
        "argv",
        [
            ["distribution", "--pattern", "21", "--n", "-1"],
            ["stat", "--structure", "perm", "--statistic", "sigma", "--n", "-1"],
        ],
    )
    def test_negative_n(self, argv, capsys):
        """Test that a negative size is a usage error."""
        assert run(argv) == EXIT_USAGE
        assert "--n must be non-negative" in capsys.readouterr().err

    def test_occurrences(self, capsys):
        """Test positions and values of each occurrence."""
        assert run(["occurrences", "--pattern", "sigma-132", "--perm", "4671253"]) == EXIT_OK
        assert output_lines(capsys) == ["(1,2,6) 4,6,5", "(5,6,7) 2,5,3"]


class TestBijectionCommand:
    """Tests for the bijection subcommand."""

    def test_permutation_forward(self, capsys):
        """Test the worked permutation example."""
        assert run(["bijection", "--kind", "perm", "--input", "246531", "--marks", "(4,1)(6,1)(6,5)"]) == EXIT_OK
        assert output_lines(capsys) == ["436289751", "(2,3,4)(4,5,9)(5,6,7)"]

    def test_permutation_reverse(self, capsys):
        """Test removal by first positions of the marked occurrences."""
        assert run(["bijection", "--kind", "perm", "--input", "436289751", "--marks", "2,4,5", "--reverse"]) == EXIT_OK
        assert output_lines(capsys) == ["246531", "(4,1)(6,1)(6,5)"]

    def test_poset_round_trip(self, capsys):
        """Test the poset example in both directions."""
        run(["bijection", "--kind", "poset", "--input", "0,1,0,3,0,0", "--marks", "(2,3)(1,3)(4,6)(3,6)"])
        assert output_lines(capsys) == ["0,1,2,1,0,5,0,6,5,0", "3,4,8,9"]
        run(["bijection", "--kind", "poset", "--input", "0,1,2,1,0,5,0,6,5,0", "--marks", "3,4,8,9", "--reverse"])
        assert output_lines(capsys) == ["0,1,0,3,0,0", "(2,3)(1,3)(4,6)(3,6)"]

    def test_no_marks(self, capsys):
        """Test that no marks returns the input with an empty mark line."""
        run(["bijection", "--kind", "matching", "--input", "(1,4)(2,3)"])
        assert output_lines(capsys) == ["(1,4)(2,3)", ""]

    def test_parse_error(self, capsys):
        """Test that a malformed permutation exits 3 with its offset."""
        assert run(["bijection", "--kind", "perm", "--input", "2,4,4"]) == EXIT_INPUT
        assert "at byte 4" in capsys.readouterr().err

    def test_marking_error(self, capsys):
        """Test that a non-inversion mark exits 3."""
        assert run(["bijection", "--kind", "perm", "--input", "123", "--marks", "(1,2)"]) == EXIT_INPUT


class TestClassifyCommand:
    """Tests for the classify subcommand."""

    def test_table(self, capsys):
        """Test named flags per arc."""
        assert run(["classify", "--matching", "(1,2)(3,4)"]) == EXIT_OK
        assert output_lines(capsys) == ["(1,2) -", "(3,4) -"]

    def test_csv(self, capsys):
        """Test the CSV header."""
        run(["classify", "--matching", "(1,4)(2,3)", "--format", "csv"])
        lines = output_lines(capsys)
        assert lines[0].startswith("arc,nesting,nested")
        assert len(lines) == 3


class TestVerifyCommand:
    """Tests for the verify subcommand."""

    def test_identities(self, capsys):
        """Test a passing suite and its table."""
        assert run(["verify", "--suite", "identities", "--max-n", "6"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "VERIFICATION RESULTS: identities" in out
        assert "0 failed" in out

    def test_json(self, capsys):
        """Test the JSON report."""
        assert run(["verify", "--suite", "matrices", "--max-n", "4", "--format", "json"]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["suite"] == "matrices"
        assert payload["passed"] is True

    def test_unknown_suite(self):
        """Test that an unknown suite is a usage error."""
        assert run(["verify", "--suite", "nothing"]) == EXIT_USAGE

    def test_zero_jobs(self):
        """Test that --jobs 0 is a usage error."""
        assert run(["verify", "--suite", "matrices", "--jobs", "0"]) == EXIT_USAGE

    def test_exit_codes_are_distinct(self):
        """Test the exit code constants."""
        assert len({EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_INPUT}) == 4

    def test_parser_requires_command(self):
        """Test that a bare invocation is a usage error."""
        with pytest.raises(SystemExit):
            build_parser().parse_args([])
