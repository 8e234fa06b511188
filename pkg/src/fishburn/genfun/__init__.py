"""Truncated series and the Mahonian and Fishburn triangles."""

from .formats import FORMATS, render_distribution, render_rows, render_triangle
from .matrices import counts_as_rows, primitive_row_matrices, primitive_row_matrix_counts
from .series import (
    TruncatedSeries,
    constant,
    series_add,
    series_mul,
    series_pow,
    x,
    y,
)
from .triangles import (
    Triangle,
    fishburn_closed_form,
    fishburn_numbers,
    fishburn_series,
    fishburn_triangle,
    fishburn_triangle_closed_form,
    identity_f,
    identity_fishburn,
    identity_u,
    mahonian,
    mahonian_row,
    mahonian_triangle,
    max_statistic,
    qfact_substituted,
    substitute_stat,
    triangle_from_series,
    unsieved_series,
    unsieved_triangle,
)

__all__ = [
    "FORMATS",
    "TruncatedSeries",
    "Triangle",
    "constant",
    "x",
    "y",
    "series_add",
    "series_mul",
    "series_pow",
    "qfact_substituted",
    "mahonian",
    "mahonian_row",
    "mahonian_triangle",
    "unsieved_series",
    "unsieved_triangle",
    "fishburn_series",
    "fishburn_triangle",
    "fishburn_numbers",
    "fishburn_closed_form",
    "fishburn_triangle_closed_form",
    "substitute_stat",
    "triangle_from_series",
    "identity_u",
    "identity_f",
    "identity_fishburn",
    "max_statistic",
    "primitive_row_matrices",
    "primitive_row_matrix_counts",
    "counts_as_rows",
    "render_rows",
    "render_triangle",
    "render_distribution",
]
