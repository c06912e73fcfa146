"""Curves on the one-holed torus: orbit enumeration, self-intersection
numbers, totient count formulas, and hyperbolic length spectra."""

from .words import canonical, enumerate_classes, is_primitive, reduce_word, totient
from .intersect import self_intersection
from .orbits import (
    Automorphism,
    Orbit,
    classify,
    count_series,
    enumerate_orbit,
    whitehead_generators,
)
from .formulas import (
    TotientFormula,
    builtin_formula_table,
    fit_totient_formula,
    growth_coefficient,
    verify_formula,
)

__all__ = [
    "Automorphism",
    "Orbit",
    "TotientFormula",
    "builtin_formula_table",
    "canonical",
    "classify",
    "count_series",
    "enumerate_classes",
    "enumerate_orbit",
    "fit_totient_formula",
    "growth_coefficient",
    "is_primitive",
    "reduce_word",
    "self_intersection",
    "totient",
    "verify_formula",
    "whitehead_generators",
]
