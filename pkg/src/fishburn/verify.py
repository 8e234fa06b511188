"""Verification suites: every invariant of the library checked against exhaustive scans and published rows."""

import functools
import json
import logging
import math
import time
from collections import Counter
from collections.abc import Callable, Iterable
from dataclasses import asdict, dataclass, field
from multiprocessing import Pool
from typing import Any

from . import fixtures
from .config import DEFAULT_RESIDUAL_LIMIT
from .core import (
    Permutation,
    enumerate_inversion_tables,
    enumerate_permutations,
    format_permutation,
    inversions,
    parse_permutation,
)
from .errors import FishburnError, InvolutionError
from .genfun import (
    counts_as_rows,
    fishburn_closed_form,
    fishburn_numbers,
    fishburn_series,
    fishburn_triangle,
    identity_f,
    identity_fishburn,
    identity_u,
    mahonian_row,
    max_statistic,
    primitive_row_matrix_counts,
    substitute_stat,
    triangle_from_series,
    unsieved_triangle,
)
from .matchings import MarkedMatching, Matching, insert_confused
from .meshpat import (
    MarkedPermutation,
    PatternCount,
    as_row,
    builtin,
    insert_sigma,
    involution,
    occurrences,
    q1_plus_p2,
    second_entries_determine,
    signature,
    statistic_distribution,
)
from .posets import (
    FactorialPoset,
    MarkedPoset,
    canonical_representatives,
    enumerate_factorial_posets,
    insert_mislabelings,
    is_interval_order,
    is_isomorphic,
    is_two_plus_two_free,
)
from .structures import STRUCTURES, subsets

logger = logging.getLogger(__name__)

SUITES = (
    "identities",
    "patterns",
    "matchings",
    "posets",
    "involution",
    "matrices",
    "bijections",
)

# Default size bounds; --max-n replaces every one of them
DEFAULT_BOUNDS = {
    "identities": 12,
    "patterns": 7,
    "inversions": 8,
    "matchings": 7,
    "nestings": 8,
    "posets": 7,
    "canonical": 8,
    "isomorphism": 5,
    "involution": 7,
    "matrices": 6,
    "bijections": 4,
    "sigma-marks": 5,
}

# Table prefixes longer than this are not used to split work
PARTITION_DEPTH = 3

# Failing cases kept per check
MAX_REPORTED = 5


@dataclass
class CheckResult:
    """Outcome of one check."""

    name: str
    passed: bool
    expected: Any = None
    actual: Any = None
    seconds: float = 0.0

    def __post_init__(self):
        if not self.passed and (self.expected is None or self.actual is None):
            raise ValueError(f"failing check {self.name!r} must carry expected and actual")


@dataclass
class Report:
    """All checks of one suite run."""

    suite: str
    checks: list[CheckResult] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> str:
        payload = {
            "suite": self.suite,
            "passed": self.passed,
            "seconds": self.seconds,
            "checks": [asdict(c) for c in self.checks],
        }
        return json.dumps(payload, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "Report":
        payload = json.loads(text)
        return cls(
            suite=payload["suite"],
            checks=[CheckResult(**c) for c in payload["checks"]],
            seconds=payload["seconds"],
        )


# ---------------------------------------------------------------------------
# Worker tasks (top level so multiprocessing can pickle them)
# ---------------------------------------------------------------------------


def _distribution_task(task: tuple[Callable[[Permutation], int], int, int | None]) -> dict[int, int]:
    stat, n, first = task
    return statistic_distribution(stat, n, first)


def _property_task(task: tuple[Callable[[Permutation], bool], int, int | None]) -> list[str]:
    holds, n, first = task
    failing = []
    for p in enumerate_permutations(n, first):
        if not holds(p):
            failing.append(format_permutation(p, compact=True))
            if len(failing) >= MAX_REPORTED:
                break
    return failing


def _structure_task(task: tuple[str, str, int, tuple[int, ...]]) -> Any:
    name, kind, n, prefix = task
    structure = STRUCTURES[name]
    if kind == "mahonian":
        return structure.mahonian_distribution(n, prefix)
    if kind == "fishburn":
        return structure.fishburn_distribution(n, prefix)
    if kind == "round-trip":
        return structure.round_trip_failures(n, prefix)[:MAX_REPORTED]
    raise ValueError(f"unknown structure task {kind!r}")


def inversion_count(p: Permutation) -> int:
    return len(inversions(p))


def _splits(whole: str, first: str, second: str, p: Permutation) -> bool:
    # An occurrence abcd of the four-point pattern accounts for abc
    target = set(occurrences(builtin(whole), p))
    head = [o[:3] for o in occurrences(builtin(first), p)]
    rest = occurrences(builtin(second), p)
    return target == set(head) | set(rest) and len(target) == len(head) + len(rest)


def decomposition_holds(p: Permutation) -> bool:
    """sigma splits into p1 and p2, and upsilon into q1 and q2, disjointly."""
    return _splits("sigma", "p1", "p2", p) and _splits("upsilon", "q1", "q2", p)


def second_entry_lemma_holds(p: Permutation) -> bool:
    return second_entries_determine(builtin("p1"), p) and second_entries_determine(builtin("q1"), p)


def involution_holds(p: Permutation, residual_limit: int = DEFAULT_RESIDUAL_LIMIT) -> bool:
    try:
        q = involution(p, residual_limit)
        back = involution(q, residual_limit)
    except InvolutionError:
        return False
    a, b, c = signature(p)
    return back == p and signature(q) == (b, a, c)


def sigma_marks_hold(n: int) -> list[str]:
    """After insert_sigma the occurrences opened by inserted entries are exactly the marked ones."""
    sigma = builtin("sigma")
    failing = []
    for p in enumerate_permutations(n):
        for chosen in subsets(inversions(p)):
            result = insert_sigma(MarkedPermutation(p, marked_inversions=frozenset(chosen)))
            firsts = {o[0] for o in result.marked_occurrences}
            opened = {o for o in occurrences(sigma, result.perm) if o[0] in firsts}
            if opened != result.marked_occurrences:
                failing.append(f"{format_permutation(p, compact=True)} {sorted(chosen)}")
    return failing[:MAX_REPORTED]


# ---------------------------------------------------------------------------
# Verifier
# ---------------------------------------------------------------------------


def _merge(distributions: Iterable[dict[int, int]]) -> dict[int, int]:
    total: Counter[int] = Counter()
    for d in distributions:
        total.update(d)
    return dict(sorted(total.items()))


def _rows_differ(expected: list, actual: list) -> tuple[dict, dict]:
    """Only the rows that differ, keyed by row index."""
    width = max(len(expected), len(actual))
    exp, act = {}, {}
    for n in range(width):
        e = list(expected[n]) if n < len(expected) else None
        a = list(actual[n]) if n < len(actual) else None
        if e != a:
            exp[str(n)] = e
            act[str(n)] = a
    return exp, act


class Verifier:
    """
    Runs verification suites.

    Scans over S_n are split by first value and scans over inversion tables
    by table prefix; with jobs > 1 the pieces go to a process pool and are
    merged in partition order, so results do not depend on jobs.
    """

    def __init__(
        self,
        max_n: int | None = None,
        jobs: int = 1,
        residual_limit: int = DEFAULT_RESIDUAL_LIMIT,
    ):
        self.max_n = max_n
        self.jobs = jobs
        self.residual_limit = residual_limit
        self._pool = None

    def bound(self, key: str) -> int:
        return self.max_n if self.max_n is not None else DEFAULT_BOUNDS[key]

    def _map(self, func: Callable, tasks: list) -> list:
        if self.jobs > 1 and len(tasks) > 1:
            if self._pool is None:
                self._pool = Pool(self.jobs)
            return self._pool.map(func, tasks)
        return [func(task) for task in tasks]

    def close(self) -> None:
        if self._pool is not None:
            self._pool.close()
            self._pool.join()
            self._pool = None

    # -- partitioned scans --------------------------------------------------

    def permutation_distribution(self, stat: Callable[[Permutation], int], n: int) -> dict[int, int]:
        tasks = [(stat, n, first) for first in range(1, n + 1)] or [(stat, n, None)]
        return _merge(self._map(_distribution_task, tasks))

    def permutation_failures(self, holds: Callable[[Permutation], bool], n: int) -> list[str]:
        tasks = [(holds, n, first) for first in range(1, n + 1)] or [(holds, n, None)]
        return [p for chunk in self._map(_property_task, tasks) for p in chunk][:MAX_REPORTED]

    def _prefixes(self, n: int) -> list[tuple[int, ...]]:
        depth = min(n, PARTITION_DEPTH)
        return [t.entries for t in enumerate_inversion_tables(depth)]

    def structure_distribution(self, name: str, kind: str, n: int) -> dict[int, int]:
        tasks = [(name, kind, n, prefix) for prefix in self._prefixes(n)]
        return _merge(self._map(_structure_task, tasks))

    def structure_round_trips(self, name: str, n: int) -> list[str]:
        tasks = [(name, "round-trip", n, prefix) for prefix in self._prefixes(n)]
        return [f for chunk in self._map(_structure_task, tasks) for f in chunk][:MAX_REPORTED]

    # -- check helpers ------------------------------------------------------

    def _timed(self, name: str, compute: Callable[[], tuple[Any, Any]]) -> CheckResult:
        start = time.perf_counter()
        try:
            expected, actual = compute()
        except FishburnError as e:
            elapsed = time.perf_counter() - start
            return CheckResult(name, False, "no error", f"{type(e).__name__}: {e}", elapsed)
        elapsed = time.perf_counter() - start
        passed = expected == actual
        logger.info("%s: %s (%.2fs)", name, "pass" if passed else "FAIL", elapsed)
        if passed:
            return CheckResult(name, True, seconds=elapsed)
        return CheckResult(name, False, _jsonable(expected), _jsonable(actual), elapsed)

    def _rows_check(self, name: str, compute: Callable[[], tuple[list, list]]) -> CheckResult:
        def compare():
            expected, actual = compute()
            return _rows_differ(expected, actual)

        return self._timed(name, compare)

    def _failures_check(self, name: str, compute: Callable[[], list[str]]) -> CheckResult:
        return self._timed(name, lambda: ([], compute()))

    # -- suites -------------------------------------------------------------

    def identities(self) -> list[CheckResult]:
        N = self.bound("identities")
        unsieved = unsieved_triangle(N)
        fishburn = fishburn_triangle(N)
        checks = [
            self._rows_check(
                "mahonian rows match the published triangle",
                lambda: (
                    list(fixtures.MAHONIAN_ROWS[: N]),
                    [mahonian_row(n) for n in range(1, min(N, len(fixtures.MAHONIAN_ROWS)) + 1)],
                ),
            ),
            self._rows_check(
                "unsieved rows match the published figure",
                lambda: (
                    list(fixtures.UNSIEVED_ROWS[: N]),
                    list(unsieved.rows[1 : min(N, len(fixtures.UNSIEVED_ROWS)) + 1]),
                ),
            ),
            self._rows_check(
                "fishburn rows match the published figure",
                lambda: (
                    list(fixtures.FISHBURN_ROWS[: N]),
                    list(fishburn.rows[1 : min(N, len(fixtures.FISHBURN_ROWS)) + 1]),
                ),
            ),
            self._rows_check(
                f"u(n,i) identity, n <= {N}",
                lambda: (
                    list(unsieved.rows),
                    [_trimmed(identity_u(n, i) for i in range(n + 1)) for n in range(N + 1)],
                ),
            ),
            self._rows_check(
                f"f(n,k) identity, 2 <= n <= {N}",
                lambda: (
                    list(fishburn.rows[2:]),
                    [_trimmed(identity_f(n, k) for k in range(n + 1)) for n in range(2, N + 1)],
                ),
            ),
            self._timed(
                "fishburn row sums are factorials",
                lambda: ([math.factorial(n) for n in range(N + 1)], fishburn.row_sums()),
            ),
            self._timed(
                "statistic variable at 1 gives factorials",
                lambda: (
                    [math.factorial(n) for n in range(N + 1)],
                    substitute_stat(fishburn_series(N), 1),
                ),
            ),
            self._timed(
                "statistic variable at 0 gives fishburn numbers",
                lambda: (fishburn_numbers(N), substitute_stat(fishburn_series(N), 0)),
            ),
            self._timed(
                "fishburn numbers equal column 0",
                lambda: (fishburn_numbers(N), fishburn.column(0)),
            ),
            self._timed(
                "fishburn numbers match A022493",
                lambda: (
                    list(fixtures.FISHBURN_NUMBERS[: N + 1]),
                    fishburn_numbers(N)[: len(fixtures.FISHBURN_NUMBERS)],
                ),
            ),
            self._timed(
                "fishburn numbers from mahonian numbers",
                lambda: (fishburn_numbers(N), [identity_fishburn(n) for n in range(N + 1)]),
            ),
            self._rows_check(
                "closed form matches the factorial sum",
                lambda: (list(fishburn.rows), list(triangle_from_series(fishburn_closed_form(N)).rows)),
            ),
            self._timed(
                "statistic never exceeds n - 2",
                lambda: (
                    {},
                    {
                        str(n): k
                        for n, k in max_statistic(N).items()
                        if n >= 2 and k > n - 2
                    },
                ),
            ),
        ]
        return checks

    def patterns(self) -> list[CheckResult]:
        B = self.bound("patterns")
        fishburn = fishburn_triangle(B)
        sigma = PatternCount([builtin("sigma")])
        checks = [
            self._rows_check(
                f"sigma follows the fishburn rows, n <= {B}",
                lambda: (
                    list(fishburn.rows[1:]),
                    [as_row(self.permutation_distribution(sigma, n)) for n in range(1, B + 1)],
                ),
            )
        ]
        for name in ("sigma-321", "sigma-132", "upsilon"):
            stat = PatternCount([builtin(name)])
            checks.append(
                self._rows_check(
                    f"{name} equidistributed with sigma, n <= {B}",
                    lambda stat=stat: (
                        list(fishburn.rows[1:]),
                        [as_row(self.permutation_distribution(stat, n)) for n in range(1, B + 1)],
                    ),
                )
            )
        combination = PatternCount([builtin("mahonian-231"), builtin("mahonian-21")])
        checks.append(
            self._rows_check(
                f"mahonian pattern combination follows the mahonian rows, n <= {B}",
                lambda: (
                    [mahonian_row(n) for n in range(1, B + 1)],
                    [as_row(self.permutation_distribution(combination, n)) for n in range(1, B + 1)],
                ),
            )
        )
        I = self.bound("inversions")
        checks.append(
            self._rows_check(
                f"inversions follow the mahonian rows, n <= {I}",
                lambda: (
                    [mahonian_row(n) for n in range(I + 1)],
                    [as_row(self.permutation_distribution(inversion_count, n)) for n in range(I + 1)],
                ),
            )
        )
        checks.append(
            self._failures_check(
                f"sigma = p1 + p2 and upsilon = q1 + q2, n <= {B}",
                lambda: [f for n in range(B + 1) for f in self.permutation_failures(decomposition_holds, n)],
            )
        )
        checks.append(
            self._failures_check(
                f"second entries determine p1 and q1 occurrences, n <= {B}",
                lambda: [f for n in range(B + 1) for f in self.permutation_failures(second_entry_lemma_holds, n)],
            )
        )
        return checks

    def matchings(self) -> list[CheckResult]:
        B = self.bound("matchings")
        E = self.bound("nestings")
        fishburn = fishburn_triangle(B)
        return [
            self._rows_check(
                f"confused arcs follow the fishburn rows, n <= {B}",
                lambda: (
                    list(fishburn.rows),
                    [as_row(self.structure_distribution("matching", "fishburn", n)) for n in range(B + 1)],
                ),
            ),
            self._rows_check(
                f"nestings follow the mahonian rows, n <= {E}",
                lambda: (
                    [mahonian_row(n) for n in range(E + 1)],
                    [as_row(self.structure_distribution("matching", "mahonian", n)) for n in range(E + 1)],
                ),
            ),
            self._timed(
                "matching worked example",
                lambda: (
                    (fixtures.MATCHING_EXAMPLE["output"], fixtures.MATCHING_EXAMPLE["confused"]),
                    _matching_example(),
                ),
            ),
        ]

    def posets(self) -> list[CheckResult]:
        B = self.bound("posets")
        C = self.bound("canonical")
        S = self.bound("isomorphism")
        fishburn = fishburn_triangle(B)
        return [
            self._rows_check(
                f"mislabelings follow the fishburn rows, n <= {B}",
                lambda: (
                    list(fishburn.rows),
                    [as_row(self.structure_distribution("poset", "fishburn", n)) for n in range(B + 1)],
                ),
            ),
            self._rows_check(
                f"incomparable pairs follow the mahonian rows, n <= {B}",
                lambda: (
                    [mahonian_row(n) for n in range(B + 1)],
                    [as_row(self.structure_distribution("poset", "mahonian", n)) for n in range(B + 1)],
                ),
            ),
            self._timed(
                f"canonical posets are counted by fishburn numbers, n <= {C}",
                lambda: (
                    fishburn_numbers(C),
                    [self.structure_distribution("poset", "fishburn", n).get(0, 0) for n in range(C + 1)],
                ),
            ),
            self._failures_check(
                f"canonical posets are pairwise non-isomorphic, n <= {S}",
                lambda: _isomorphism_failures(S),
            ),
            self._failures_check(
                f"factorial posets are interval orders, n <= {S}",
                lambda: _interval_order_failures(S),
            ),
            self._timed(
                "poset worked example",
                lambda: (
                    (fixtures.POSET_EXAMPLE["output"], fixtures.POSET_EXAMPLE["mislabelings"]),
                    _poset_example(),
                ),
            ),
        ]

    def involution(self) -> list[CheckResult]:
        B = self.bound("involution")
        fishburn = fishburn_triangle(B)
        holds = functools.partial(involution_holds, residual_limit=self.residual_limit)
        return [
            self._timed(
                "involution fixes 123 and 3421",
                lambda: (
                    ["123", "3421"],
                    [
                        format_permutation(involution(parse_permutation(s), self.residual_limit), compact=True)
                        for s in ("123", "3421")
                    ],
                ),
            ),
            self._failures_check(
                f"involution is self-inverse and swaps p1/q1, n <= {B}",
                lambda: [f for n in range(B + 1) for f in self.permutation_failures(holds, n)],
            ),
            self._rows_check(
                f"q1 + p2 follows the fishburn rows, n <= {B}",
                lambda: (
                    list(fishburn.rows[1:]),
                    [as_row(self.permutation_distribution(q1_plus_p2, n)) for n in range(1, B + 1)],
                ),
            ),
        ]

    def matrices(self) -> list[CheckResult]:
        B = self.bound("matrices")
        unsieved = unsieved_triangle(B)
        counts = primitive_row_matrix_counts(B)
        return [
            self._rows_check(
                f"primitive row matrices match the unsieved rows, n <= {B}",
                lambda: (list(unsieved.rows[1:]), counts_as_rows(counts, B)),
            ),
            self._timed(
                "primitive row matrix totals match A179525",
                lambda: (
                    list(fixtures.PRIMITIVE_ROW_TOTALS[:B]),
                    [sum(row) for row in counts_as_rows(counts, B)][: len(fixtures.PRIMITIVE_ROW_TOTALS)],
                ),
            ),
        ]

    def bijections(self) -> list[CheckResult]:
        B = self.bound("bijections")
        M = self.bound("sigma-marks")
        checks = []
        for name in STRUCTURES:
            checks.append(
                self._failures_check(
                    f"{name} insert and remove are inverse, n <= {B}",
                    lambda name=name: [
                        f for n in range(B + 1) for f in self.structure_round_trips(name, n)
                    ],
                )
            )
        checks.append(
            self._failures_check(
                f"inserted sigma-occurrences are exactly the marked ones, n <= {M}",
                lambda: [f for n in range(M + 1) for f in sigma_marks_hold(n)],
            )
        )
        checks.append(
            self._timed(
                "permutation worked example",
                lambda: (
                    (fixtures.PERMUTATION_EXAMPLE["output"], fixtures.PERMUTATION_EXAMPLE["occurrences"]),
                    _permutation_example(),
                ),
            )
        )
        checks.append(
            self._timed(
                "matching worked example",
                lambda: (
                    (fixtures.MATCHING_EXAMPLE["output"], fixtures.MATCHING_EXAMPLE["confused"]),
                    _matching_example(),
                ),
            )
        )
        checks.append(
            self._timed(
                "poset worked example",
                lambda: (
                    (fixtures.POSET_EXAMPLE["output"], fixtures.POSET_EXAMPLE["mislabelings"]),
                    _poset_example(),
                ),
            )
        )
        return checks

    def run(self, suite: str) -> Report:
        """
        Run one suite, or every suite for "all".

        Raises:
            ValueError: If the suite name is unknown
        """
        if suite != "all" and suite not in SUITES:
            raise ValueError(f"unknown suite {suite!r}; choose from all, {', '.join(SUITES)}")
        names = SUITES if suite == "all" else (suite,)
        start = time.perf_counter()
        checks: list[CheckResult] = []
        try:
            for name in names:
                logger.info("running suite %s", name)
                results = getattr(self, name)()
                if suite == "all":
                    for r in results:
                        r.name = f"{name}: {r.name}"
                checks.extend(results)
        finally:
            self.close()
        return Report(suite, checks, time.perf_counter() - start)


def verify(suite: str, max_n: int | None = None, jobs: int = 1) -> Report:
    """Run a verification suite and return its report."""
    return Verifier(max_n=max_n, jobs=jobs).run(suite)


# ---------------------------------------------------------------------------
# Worked examples and small-size oracles
# ---------------------------------------------------------------------------


def _trimmed(values: Iterable[int]) -> tuple[int, ...]:
    values = list(values)
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


def _jsonable(value: Any) -> Any:
    return json.loads(json.dumps(value, default=sorted))


def _permutation_example() -> tuple[str, tuple]:
    example = fixtures.PERMUTATION_EXAMPLE
    result = insert_sigma(
        MarkedPermutation(
            parse_permutation(example["input"]),
            marked_inversions=frozenset(example["marks"]),
        )
    )
    return format_permutation(result.perm, compact=True), tuple(sorted(result.marked_occurrences))


def _matching_example() -> tuple[tuple, tuple]:
    example = fixtures.MATCHING_EXAMPLE
    result = insert_confused(
        MarkedMatching(Matching(frozenset(example["input"])), marked_openers=frozenset(example["marks"]))
    )
    return tuple(result.matching.sorted_arcs()), tuple(sorted(result.marked_confused))


def _poset_example() -> tuple[tuple, tuple]:
    example = fixtures.POSET_EXAMPLE
    result = insert_mislabelings(
        MarkedPoset(FactorialPoset(example["input"]), marked_pairs=frozenset(example["marks"]))
    )
    return result.poset.bounds, tuple(sorted(result.marked_mislabelings))


def _isomorphism_failures(n_max: int) -> list[str]:
    failing = []
    for n in range(n_max + 1):
        canonical = canonical_representatives(n)
        for i, P in enumerate(canonical):
            for Q in canonical[i + 1 :]:
                if is_isomorphic(P, Q):
                    failing.append(f"canonical {P} and {Q} are isomorphic")
        for P in enumerate_factorial_posets(n):
            matches = sum(1 for Q in canonical if is_isomorphic(P, Q))
            if matches != 1:
                failing.append(f"{P} is isomorphic to {matches} canonical posets")
    return failing[:MAX_REPORTED]


def _interval_order_failures(n_max: int) -> list[str]:
    failing = []
    for n in range(n_max + 1):
        for P in enumerate_factorial_posets(n):
            Q = P.to_generic()
            if not (is_interval_order(Q) and is_two_plus_two_free(Q)):
                failing.append(str(P))
    return failing[:MAX_REPORTED]


def print_report(report: Report) -> None:
    """Print a report as a table, failures followed by their payloads."""
    print("=" * 80)
    print(f"VERIFICATION RESULTS: {report.suite}")
    print("=" * 80)
    print(f"{'Check':<64} {'Status':<6} {'Sec':>7}")
    print("-" * 80)
    for c in report.checks:
        status = "pass" if c.passed else "FAIL"
        print(f"{c.name[:64]:<64} {status:<6} {c.seconds:>7.2f}")
        if not c.passed:
            print(f"    expected: {json.dumps(c.expected)}")
            print(f"    actual:   {json.dumps(c.actual)}")
    print("-" * 80)
    failed = len(report.failures)
    print(
        f"{len(report.checks) - failed} passed, {failed} failed in {report.seconds:.2f}s"
    )
