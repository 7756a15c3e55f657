"""Composition polynomials, permutitions and the (1-q)-transform of NSym."""

__version__ = "0.1.0"

from .compositions import Composition, compositions_of, merge_first_two, parse_composition, tail
from .permutitions import (
    Permutition, canonicalize, enumerate_permutitions, enumerate_shape, sinv_polynomial,
    standardize, std_suffix,
)
from .polynomials import g_integral, g_recursive, reduced_f, reduced_P, reduced_table
from .qpoly import QPoly, TPoly, integrate_power_from_q

__all__ = [
    "Composition", "compositions_of", "merge_first_two", "parse_composition", "tail",
    "Permutition", "canonicalize", "enumerate_permutitions", "enumerate_shape",
    "sinv_polynomial", "standardize", "std_suffix",
    "g_integral", "g_recursive", "reduced_f", "reduced_P", "reduced_table",
    "QPoly", "TPoly", "integrate_power_from_q",
]
