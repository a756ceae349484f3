"""Exact classification of real structures on primary Kodaira surfaces."""

from .exactalg import AffineMap4, AffineSubspace, Poly, Rat, dioph_solve, fixed_locus
from .group import KodairaParams, NormalWord, collect, generators, word_to_affine
from .realstruct import Lifting, RealStructure, admissible
from .classify import (
    CASE_LABELS,
    Extension,
    enumerate_cases,
    extension_of,
    labels_for,
    reduce_extension,
    splits,
)
from .reallocus import RealPartReport, full_table, real_part
from .moduli import GaussRat, PeriodPoint, borcea_act, reality_conditions

__all__ = [
    "AffineMap4", "AffineSubspace", "Poly", "Rat", "dioph_solve", "fixed_locus",
    "KodairaParams", "NormalWord", "collect", "generators", "word_to_affine",
    "Lifting", "RealStructure", "admissible",
    "CASE_LABELS", "Extension", "enumerate_cases", "extension_of",
    "labels_for", "reduce_extension", "splits",
    "RealPartReport", "full_table", "real_part",
    "GaussRat", "PeriodPoint", "borcea_act", "reality_conditions",
]

__version__ = "0.1.0"
