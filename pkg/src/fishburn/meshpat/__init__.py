"""Mesh patterns, their occurrences and the sigma bijection."""

from .bijection import MarkedPermutation, insert_sigma, remove_sigma, sigma_occurrence_at
from .involution import (
    involution,
    involution_rule,
    is_rule_consistent,
    q1_plus_p2,
    second_entries_determine,
    signature,
)
from .occurrences import (
    Occurrence,
    PatternCount,
    as_row,
    combination_distribution,
    count,
    distribution,
    is_occurrence,
    occurrences,
    statistic_distribution,
)
from .patterns import BUILTINS, MeshPattern, builtin, format_pattern, parse_pattern, resolve_pattern

__all__ = [
    "BUILTINS",
    "MeshPattern",
    "MarkedPermutation",
    "Occurrence",
    "PatternCount",
    "parse_pattern",
    "format_pattern",
    "builtin",
    "resolve_pattern",
    "occurrences",
    "is_occurrence",
    "count",
    "distribution",
    "combination_distribution",
    "statistic_distribution",
    "as_row",
    "insert_sigma",
    "remove_sigma",
    "sigma_occurrence_at",
    "involution",
    "involution_rule",
    "is_rule_consistent",
    "signature",
    "q1_plus_p2",
    "second_entries_determine",
]
