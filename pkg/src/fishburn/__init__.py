"""Mahonian and Fishburn structures."""

from .core import Permutation, parse_permutation
from .errors import FishburnError, MarkingError, ParseError
from .structures import STRUCTURES

__all__ = [
    "FishburnError",
    "MarkingError",
    "ParseError",
    "Permutation",
    "STRUCTURES",
    "parse_permutation",
]

__version__ = "0.1.0"
