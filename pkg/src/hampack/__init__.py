"""Multifold packings of radius-1 balls in Hamming graphs.

A library for constructing, verifying, bounding and classifying
lambda-fold 1-packings and 1-perfect unitrades in H(n, q), with exact
integer/rational arithmetic throughout.
"""

from .core import Code, Space, Word, ball, coverage_multiplicity, hamming_distance, weight

__all__ = [
    "Code",
    "Space",
    "Word",
    "ball",
    "coverage_multiplicity",
    "hamming_distance",
    "weight",
]
__version__ = "0.1.0"
