"""Mahonian, unsieved Fishburn and Fishburn triangles, and the identities between them."""

import logging
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import lru_cache

from ..core import binomial
from .series import TruncatedSeries, constant, x, y

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Triangle:
    """Rows of non-negative integers; row n is indexed from 0 and has no trailing zeros."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(_trim(row) for row in self.rows))

    def __len__(self) -> int:
        return len(self.rows)

    def __getitem__(self, n: int) -> tuple[int, ...]:
        return self.rows[n]

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.rows)

    def entry(self, n: int, k: int) -> int:
        """rows[n][k], zero outside the stored range."""
        if n < 0 or k < 0 or n >= len(self.rows) or k >= len(self.rows[n]):
            return 0
        return self.rows[n][k]

    def row_sums(self) -> list[int]:
        return [sum(row) for row in self.rows]

    def column(self, k: int) -> list[int]:
        return [self.entry(n, k) for n in range(len(self.rows))]


def _trim(row: Iterable[int]) -> tuple[int, ...]:
    row = list(row)
    while row and row[-1] == 0:
        row.pop()
    return tuple(row)


def qfact_substituted(n: int, q: TruncatedSeries) -> TruncatedSeries:
    """
    [n]!_q = prod_{i=1..n} (1 + q + ... + q^(i-1)) with q replaced by a series.

    Args:
        n: Order of the q-factorial
        q: Series substituted for q

    Returns:
        The product, truncated at q's x-degree
    """
    N = q.max_x_degree
    result = constant(N, 1)
    partial = constant(N, 0)
    power = constant(N, 1)
    for _ in range(n):
        partial = partial + power
        result = result * partial
        power = power * q
    return result


def triangle_from_series(series: TruncatedSeries) -> Triangle:
    """Row n is the y-polynomial multiplying x^n."""
    return Triangle(
        tuple(tuple(series.x_coefficient(n)) for n in range(series.max_x_degree + 1))
    )


def expand_factorial_sum(N: int, q: TruncatedSeries) -> TruncatedSeries:
    """sum_{n=0..N} [n]!_q x^n, with the factorials built incrementally."""
    total = constant(N, 0)
    term = constant(N, 1)  # [n]!_q
    partial = constant(N, 0)
    power = constant(N, 1)
    x_power = constant(N, 1)
    for n in range(N + 1):
        if n > 0:
            partial = partial + power
            power = power * q
            term = term * partial
        total = total + term * x_power
        x_power = x_power * x(N)
    return total


@lru_cache(maxsize=None)
def mahonian_row(n: int) -> tuple[int, ...]:
    """Coefficients of [n]!_q, i.e. the inversion distribution over S_n."""
    return tuple(qfact_substituted(n, y(0)).x_coefficient(0))


def mahonian(n: int, k: int) -> int:
    row = mahonian_row(n)
    return row[k] if 0 <= k < len(row) else 0


def mahonian_triangle(N: int) -> Triangle:
    return Triangle(tuple(mahonian_row(n) for n in range(N + 1)))


def unsieved_series(N: int) -> TruncatedSeries:
    """sum [n]!_{1+xy} x^n: marked Mahonian features counted by y."""
    return expand_factorial_sum(N, 1 + x(N) * y(N))


def fishburn_series(N: int) -> TruncatedSeries:
    """sum [n]!_{1+x(y-1)} x^n: the sieved series."""
    return expand_factorial_sum(N, 1 + x(N) * (y(N) - 1))


def unsieved_triangle(N: int) -> Triangle:
    """u_{n,i} for n <= N."""
    return triangle_from_series(unsieved_series(N))


def fishburn_triangle(N: int) -> Triangle:
    """f_{n,k} for n <= N."""
    return triangle_from_series(fishburn_series(N))


def fishburn_numbers(N: int) -> list[int]:
    """Coefficients of sum [n]!_{1-x} x^n up to x^N."""
    series = expand_factorial_sum(N, 1 - x(N))
    return [series.coefficient(n) for n in range(N + 1)]


def fishburn_closed_form(N: int) -> TruncatedSeries:
    """
    sum_{m>=0} (-1)^m prod_{i=1..m} ((1 + (y-1)x)^i - 1) / (1 - y), truncated at x^N.

    Every factor has no constant term in x, so only m <= N contributes.
    """
    base = 1 + (y(N) - 1) * x(N)
    total = constant(N, 1)
    product = constant(N, 1)
    for m in range(1, N + 1):
        factor = (base**m - 1).divide_by_one_minus_y()
        product = product * factor
        total = total + (-1) ** m * product
    return total


def fishburn_triangle_closed_form(N: int) -> Triangle:
    return triangle_from_series(fishburn_closed_form(N))


def substitute_stat(series: TruncatedSeries, value: int) -> list[int]:
    """x-coefficients after fixing the statistic variable to value."""
    specialised = series.substitute_y(value)
    return [specialised.coefficient(n) for n in range(series.max_x_degree + 1)]


def identity_u(n: int, i: int) -> int:
    """u_{n,i} = sum_{j=i}^{C(n-i,2)} C(j,i) m_{n-i,j}."""
    if i < 0 or i > n:
        return 0
    return sum(
        binomial(j, i) * mahonian(n - i, j) for j in range(i, binomial(n - i, 2) + 1)
    )


def identity_f(n: int, k: int) -> int:
    """
    f_{n,k} = sum_{i>=k} (-1)^(i+k) C(i,k) u_{n,i}.

    u_{n,i} vanishes for i > n - 2 once n >= 2, so summing up to n covers the
    small cases f_{0,0} = f_{1,0} = 1 as well.
    """
    if k < 0:
        return 0
    return sum(
        (-1) ** (i + k) * binomial(i, k) * identity_u(n, i) for i in range(k, n + 1)
    )


def identity_fishburn(n: int) -> int:
    """The n-th Fishburn number from Mahonian numbers alone."""
    return identity_f(n, 0)


def max_statistic(N: int) -> dict[int, int]:
    """Largest k with f_{n,k} != 0, for every n <= N."""
    triangle = fishburn_triangle(N)
    result = {n: len(row) - 1 for n, row in enumerate(triangle)}
    logger.debug("max statistic up to N=%d: %s", N, result)
    return result
