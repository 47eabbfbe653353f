"""Combinatorial-map toolkit for i-hedrites.

An i-hedrite is a 2-connected 4-valent plane graph whose faces are 2-, 3-
and 4-gons, with p_2 = 8 - i digons (i ranging over 4..8).  The package
represents such graphs as dart-based rotation systems and provides face and
circuit analysis, symmetry classification, structural transforms
(inflation, reduction, Goldberg-Coxeter), exhaustive enumeration up to a
vertex budget, and export of the associated alternating link projections.
"""

from .planegraph import PlaneGraph, FaceVector, decode, encode
from .circuits import CentralCircuit, CCVector, IntersectionVector

__all__ = [
    "PlaneGraph",
    "FaceVector",
    "decode",
    "encode",
    "CentralCircuit",
    "CCVector",
    "IntersectionVector",
]
