"""Brute-force oracle for primitive row Fishburn matrices."""

import itertools
import logging
from collections import Counter
from collections.abc import Iterator

import numpy as np

logger = logging.getLogger(__name__)


def _rows(
    m: int, r: int, remaining: int
) -> Iterator[list[tuple[int, ...]]]:
    """Non-empty upper-triangular rows r..m-1 of an m x m binary matrix using exactly `remaining` ones."""
    rows_left = m - r
    if rows_left == 0:
        if remaining == 0:
            yield []
        return
    columns = range(r, m)
    most = min(m - r, remaining - (rows_left - 1))
    for size in range(1, most + 1):
        for chosen in itertools.combinations(columns, size):
            for tail in _rows(m, r + 1, remaining - size):
                yield [chosen, *tail]


def primitive_row_matrices(n: int) -> Iterator[np.ndarray]:
    """
    Yield every upper-triangular binary matrix with no empty row and entry sum n.

    The dimension m is at most n since each row holds at least one entry.
    """
    for m in range(1, n + 1):
        for rows in _rows(m, 0, n):
            matrix = np.zeros((m, m), dtype=np.int8)
            for r, chosen in enumerate(rows):
                matrix[r, list(chosen)] = 1
            yield matrix


def non_leading_entries(matrix: np.ndarray) -> int:
    """Number of ones that are not the leftmost one of their row."""
    return int(matrix.sum()) - int(np.count_nonzero(matrix.any(axis=1)))


def is_primitive_row(matrix: np.ndarray) -> bool:
    return bool(
        np.array_equal(matrix, np.triu(matrix))
        and np.isin(matrix, (0, 1)).all()
        and matrix.any(axis=1).all()
    )


def primitive_row_matrix_counts(N: int) -> dict[tuple[int, int], int]:
    """
    Count primitive row matrices by entry sum n <= N and non-leading entries k.

    Args:
        N: Largest entry sum

    Returns:
        Map (n, k) -> number of matrices
    """
    counts: Counter[tuple[int, int]] = Counter()
    for n in range(1, N + 1):
        for matrix in primitive_row_matrices(n):
            counts[(n, non_leading_entries(matrix))] += 1
        logger.debug("matrix oracle n=%d done", n)
    return dict(sorted(counts.items()))


def counts_as_rows(counts: dict[tuple[int, int], int], N: int) -> list[list[int]]:
    """Rows 1..N of a count map, each trimmed of trailing zeros."""
    rows = []
    for n in range(1, N + 1):
        width = max((k for (m, k) in counts if m == n), default=-1) + 1
        rows.append([counts.get((n, k), 0) for k in range(width)])
    return rows
