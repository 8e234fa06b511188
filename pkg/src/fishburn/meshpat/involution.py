"""Involution on S_n exchanging p1- and q1-occurrence counts and keeping p2's."""

import logging
from collections import defaultdict
from functools import lru_cache

from ..config import DEFAULT_RESIDUAL_LIMIT
from ..core import Permutation, enumerate_permutations
from ..errors import InvolutionError
from .occurrences import count, occurrences
from .patterns import builtin

logger = logging.getLogger(__name__)

P1 = builtin("p1")
P2 = builtin("p2")
Q1 = builtin("q1")


def signature(p: Permutation) -> tuple[int, int, int]:
    """(p1, q1, p2) occurrence counts."""
    return count(P1, p), count(Q1, p), count(P2, p)


def q1_plus_p2(p: Permutation) -> int:
    return count(Q1, p) + count(P2, p)


def second_entries_determine(P, p: Permutation) -> bool:
    """True if no two occurrences of P in p share their second entry."""
    seconds = [o[1] for o in occurrences(P, p)]
    return len(seconds) == len(set(seconds))


def involution_rule(p: Permutation) -> Permutation | None:
    """
    Apply the three-case move rule.

    A p1-occurrence abcd whose second entry b is not the second entry of any
    q1-occurrence moves b to immediately before c. A q1-occurrence efgh whose
    f is not the second entry of any p1-occurrence moves f to immediately
    after e. Everything else stays. Moves are read off p and applied
    together, entries tracked by value.

    Returns:
        The image, or None when two moves share a mover or a mover is also
        an anchor
    """
    values = p.values
    occ_p1 = occurrences(P1, p)
    occ_q1 = occurrences(Q1, p)
    p1_seconds = {values[o[1] - 1] for o in occ_p1}
    q1_seconds = {values[o[1] - 1] for o in occ_q1}

    before: list[tuple[int, int]] = []  # (b, c): b goes right before c
    after: list[tuple[int, int]] = []  # (f, e): f goes right after e
    for o in occ_p1:
        b = values[o[1] - 1]
        if b not in q1_seconds:
            before.append((b, values[o[2] - 1]))
    for o in occ_q1:
        f = values[o[1] - 1]
        if f not in p1_seconds:
            after.append((f, values[o[0] - 1]))

    movers = [m for m, _ in before] + [m for m, _ in after]
    anchors = {a for _, a in before} | {a for _, a in after}
    if len(set(movers)) != len(movers) or anchors & set(movers):
        return None

    moved = set(movers)
    result = [v for v in values if v not in moved]
    for f, e in after:
        result.insert(result.index(e) + 1, f)
    for b, c in before:
        result.insert(result.index(c), b)
    return Permutation(tuple(result))


def is_rule_consistent(p: Permutation) -> bool:
    """
    Whether the move rule alone already acts as the involution at p: it maps
    p to some q, maps q back to p, swaps the p1/q1 counts and keeps p2's.
    """
    q = involution_rule(p)
    if q is None or involution_rule(q) != p:
        return False
    a, b, c = signature(p)
    return signature(q) == (b, a, c)


@lru_cache(maxsize=None)
def _residual_pairing(n: int) -> dict[tuple[int, ...], tuple[int, ...]]:
    """
    Pair up the permutations where the rule is not consistent.

    Inside each (p1, q1, p2) class, taken in lexicographic order, the i-th
    member of class (a, b, c) is paired with the i-th member of (b, a, c).
    """
    classes: dict[tuple[int, int, int], list[tuple[int, ...]]] = defaultdict(list)
    for p in enumerate_permutations(n):
        if not is_rule_consistent(p):
            classes[signature(p)].append(p.values)

    pairing: dict[tuple[int, ...], tuple[int, ...]] = {}
    for (a, b, c), members in classes.items():
        partners = classes.get((b, a, c), [])
        if len(partners) != len(members):
            raise InvolutionError(
                f"unbalanced classes at n={n}: {(a, b, c)} has {len(members)}, "
                f"{(b, a, c)} has {len(partners)}"
            )
        pairing.update(zip(members, partners))
    logger.info(
        "involution residue at n=%d: %d permutations in %d classes",
        n,
        len(pairing),
        len(classes),
    )
    return pairing


def involution(p: Permutation, residual_limit: int = DEFAULT_RESIDUAL_LIMIT) -> Permutation:
    """
    Involution exchanging p1- and q1-occurrence counts and preserving p2's.

    The move rule is used wherever it is consistent; the remaining
    permutations of the same size are paired inside their count classes.

    The first residual lookup at size n scans all of S_n and is cached:
    about a second at n = 7, minutes at n = 8, and impractical from
    n = 9 on. In practice the involution is total only for n <= 8; the
    rule alone covers larger permutations when it is consistent.

    Args:
        p: Permutation to map
        residual_limit: Largest size for which the residual pairing may be built

    Raises:
        InvolutionError: If p needs the residual pairing and len(p) exceeds
            residual_limit, or the classes are unbalanced
    """
    if is_rule_consistent(p):
        return involution_rule(p)
    n = len(p)
    if n > residual_limit:
        raise InvolutionError(
            f"residual pairing needed at n={n}, above the limit {residual_limit}"
        )
    return Permutation(_residual_pairing(n)[p.values])
