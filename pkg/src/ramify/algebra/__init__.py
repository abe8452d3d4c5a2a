"""Exact arithmetic kernel: finite fields, cyclotomics, Laurent series."""

from .cyclotomic import Cyclotomic, cyclotomic_polynomial, euler_phi
from .finitefield import FFElement, FiniteField, default_modulus
from .laurent import DEFAULT_RELATIVE_PRECISION, LaurentSeries

__all__ = [
    "Cyclotomic",
    "DEFAULT_RELATIVE_PRECISION",
    "FFElement",
    "FiniteField",
    "LaurentSeries",
    "cyclotomic_polynomial",
    "default_modulus",
    "euler_phi",
]
