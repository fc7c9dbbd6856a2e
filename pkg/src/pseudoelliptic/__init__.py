"""Exact computation of units in Q[x, sqrt(D)], the pseudo-elliptic
integrals they produce, and the torsion families that realise them.

    >>> from pseudoelliptic import parse_poly, find_unit
    >>> cert = find_unit(parse_poly("x^4+4*x^3-6*x^2+4*x+1"))
    >>> cert.m, cert.k
    (6, Fraction(1728, 1))
"""

from .cfrac import (
    Aborted,
    Bounds,
    CFExpansion,
    CFLine,
    InvalidRadicand,
    QuasiPeriodic,
    cf_detect,
    cf_init,
    cf_step,
    convergent,
    measure_heights,
    symmetry_report,
)
from .classify import (
    ClassReport,
    GaloisLabel,
    classify,
    exceptionality_screen,
    galois_quartic,
    resolvent_cubic,
    norm_split_report,
    period_report,
)
from .exactnum import (
    Factorization,
    Poly,
    X,
    discriminant,
    factor_over_Q,
    format_poly,
    parse_poly,
    poly_gcd,
    polypart_sqrt,
    resultant,
)
from .families import FamilyInstance, family_poly, odd_linear_factor, galois_exception_cell, factor_count_cell
from .quadext import QNum, QPoly, QuadCtx, factor_over_quadratic, split_unit_factor
from .units import IntegralIdentity, UnitCert, emit_identity, find_unit, integrand, torsion_order, verify_identity

__version__ = "0.1.0"

__all__ = [
    "Aborted",
    "Bounds",
    "cf_detect",
    "cf_init",
    "cf_step",
    "CFExpansion",
    "CFLine",
    "classify",
    "ClassReport",
    "convergent",
    "discriminant",
    "emit_identity",
    "exceptionality_screen",
    "factor_over_Q",
    "factor_over_quadratic",
    "Factorization",
    "family_poly",
    "FamilyInstance",
    "find_unit",
    "format_poly",
    "galois_quartic",
    "GaloisLabel",
    "IntegralIdentity",
    "integrand",
    "InvalidRadicand",
    "measure_heights",
    "odd_linear_factor",
    "parse_poly",
    "Poly",
    "poly_gcd",
    "polypart_sqrt",
    "QNum",
    "QPoly",
    "QuadCtx",
    "QuasiPeriodic",
    "resolvent_cubic",
    "resultant",
    "split_unit_factor",
    "symmetry_report",
    "galois_exception_cell",
    "factor_count_cell",
    "norm_split_report",
    "period_report",
    "torsion_order",
    "UnitCert",
    "verify_identity",
    "X",
]
