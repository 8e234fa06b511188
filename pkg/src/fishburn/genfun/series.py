"""Bivariate integer polynomials in x and y, truncated in x."""

from collections.abc import Mapping
from types import MappingProxyType

from ..errors import DegreeMismatchError

Monomial = tuple[int, int]  # (x degree, y degree)


class TruncatedSeries:
    """
    Polynomial in x (size) and y (statistic) with every x-degree above
    max_x_degree discarded.

    Coefficients are stored sparsely as {(x_degree, y_degree): int};
    zero coefficients are never stored.
    """

    __slots__ = ("max_x_degree", "_coefficients")

    def __init__(self, max_x_degree: int, coefficients: Mapping[Monomial, int] | None = None):
        if max_x_degree < 0:
            raise ValueError(f"max_x_degree must be >= 0, got {max_x_degree}")
        self.max_x_degree = max_x_degree
        kept: dict[Monomial, int] = {}
        for (i, j), c in (coefficients or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative degree in monomial {(i, j)}")
            if c != 0 and i <= max_x_degree:
                kept[(i, j)] = int(c)
        self._coefficients = kept

    @property
    def coefficients(self) -> Mapping[Monomial, int]:
        return MappingProxyType(self._coefficients)

    def coefficient(self, x_degree: int, y_degree: int = 0) -> int:
        return self._coefficients.get((x_degree, y_degree), 0)

    def x_coefficient(self, x_degree: int) -> list[int]:
        """Coefficient of x^n as a y-polynomial, lowest degree first, trailing zeros trimmed."""
        degrees = [j for (i, j) in self._coefficients if i == x_degree]
        if not degrees:
            return []
        return [self.coefficient(x_degree, j) for j in range(max(degrees) + 1)]

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            if other.max_x_degree != self.max_x_degree:
                raise DegreeMismatchError(
                    f"truncation degrees differ: {self.max_x_degree} vs {other.max_x_degree}"
                )
            return other
        if isinstance(other, int):
            return constant(self.max_x_degree, other)
        return NotImplemented

    def __add__(self, other) -> "TruncatedSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        result = dict(self._coefficients)
        for key, c in other._coefficients.items():
            result[key] = result.get(key, 0) + c
        return TruncatedSeries(self.max_x_degree, result)

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(
            self.max_x_degree, {key: -c for key, c in self._coefficients.items()}
        )

    def __sub__(self, other) -> "TruncatedSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "TruncatedSeries":
        return (-self) + other

    def __mul__(self, other) -> "TruncatedSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = self.max_x_degree
        result: dict[Monomial, int] = {}
        for (i1, j1), c1 in self._coefficients.items():
            for (i2, j2), c2 in other._coefficients.items():
                if i1 + i2 > n:
                    continue
                key = (i1 + i2, j1 + j2)
                result[key] = result.get(key, 0) + c1 * c2
        return TruncatedSeries(n, result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"exponent must be a non-negative int, got {exponent!r}")
        result = constant(self.max_x_degree, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.max_x_degree == other.max_x_degree
            and self._coefficients == other._coefficients
        )

    def __hash__(self):
        return hash((self.max_x_degree, frozenset(self._coefficients.items())))

    def __repr__(self) -> str:
        terms = " + ".join(
            f"{c}*x^{i}*y^{j}" for (i, j), c in sorted(self._coefficients.items())
        )
        return f"TruncatedSeries(N={self.max_x_degree}, {terms or '0'})"

    def substitute_y(self, value: int) -> "TruncatedSeries":
        """Specialise y to an integer, leaving a series in x alone."""
        result: dict[Monomial, int] = {}
        for (i, j), c in self._coefficients.items():
            result[(i, 0)] = result.get((i, 0), 0) + c * value**j
        return TruncatedSeries(self.max_x_degree, result)

    def divide_by_one_minus_y(self) -> "TruncatedSeries":
        """
        Exact quotient by (1 - y).

        Raises:
            ValueError: If some x-coefficient does not vanish at y = 1
        """
        result: dict[Monomial, int] = {}
        for i in {i for (i, _) in self._coefficients}:
            row = self.x_coefficient(i)
            if sum(row) != 0:
                raise ValueError(f"x^{i} coefficient is not divisible by (1 - y)")
            running = 0
            for j, c in enumerate(row):
                running += c
                result[(i, j)] = running
        return TruncatedSeries(self.max_x_degree, result)


def constant(max_x_degree: int, value: int = 1) -> TruncatedSeries:
    return TruncatedSeries(max_x_degree, {(0, 0): value})


def x(max_x_degree: int) -> TruncatedSeries:
    return TruncatedSeries(max_x_degree, {(1, 0): 1})


def y(max_x_degree: int) -> TruncatedSeries:
    return TruncatedSeries(max_x_degree, {(0, 1): 1})


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """a + b; raises DegreeMismatchError when truncations differ."""
    return a + b


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """a * b truncated at their shared x-degree."""
    return a * b


def series_pow(a: TruncatedSeries, exponent: int) -> TruncatedSeries:
    return a**exponent
