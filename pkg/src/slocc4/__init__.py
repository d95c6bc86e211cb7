"""Exact SLOCC classification of four-qubit states.

The package realises the 16-dimensional state space as the odd part of a
Z/2Z-graded Lie algebra of type D4 and classifies states under SL(2,C)^4
(87 orbit classes) and under qubit permutations combined with SL(2,C)^4
(27 classes), entirely in exact arithmetic over Q(i).
"""

from .scalars import GaussianRational, gr, parse_gr, format_gr
from .groebner import KERNEL_IMPLEMENTATION

__version__ = "1.0.0"

__all__ = [
    "GaussianRational",
    "gr",
    "parse_gr",
    "format_gr",
    "KERNEL_IMPLEMENTATION",
    "__version__",
]
