"""Exact tolerant, duplicant and generalized discriminant of univariate polynomials.

Values come back as canonical strings ("6561/256", "4*t^5") so nothing is
rounded. Fields are written "q", "fp:P" or "fpt:P".
"""

from ._core import (
    Field,
    Polynomial,
    TolerantError,
    disc,
    dupl,
    gdisc,
    hasse_derivative,
    homothety,
    homothety_exponent,
    in_T,
    is_separable,
    reciprocal,
    report,
    selfcheck,
    taylor_shift,
    tol,
    tol_from_factorization,
)

__all__ = [
    "Field",
    "Polynomial",
    "TolerantError",
    "disc",
    "dupl",
    "gdisc",
    "hasse_derivative",
    "homothety",
    "homothety_exponent",
    "in_T",
    "is_separable",
    "reciprocal",
    "report",
    "selfcheck",
    "taylor_shift",
    "tol",
    "tol_from_factorization",
]
