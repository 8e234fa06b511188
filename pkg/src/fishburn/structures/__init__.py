"""Mahonian structures traded for Fishburn structures by marked insertion."""

from .base import MahonianStructure, MarkedResult, subsets
from .matching import MatchingStructure
from .permutation import PermutationStructure
from .poset import PosetStructure

STRUCTURES: dict[str, MahonianStructure] = {
    "perm": PermutationStructure(),
    "matching": MatchingStructure(),
    "poset": PosetStructure(),
}

__all__ = [
    "MahonianStructure",
    "MarkedResult",
    "PermutationStructure",
    "MatchingStructure",
    "PosetStructure",
    "STRUCTURES",
    "subsets",
]
