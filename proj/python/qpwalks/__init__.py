"""Exact enumeration of boundary-weighted quarter-plane walks.

Thin convenience layer over the compiled core: rationals cross the boundary
as strings and are wrapped into fractions.Fraction here.
"""

from fractions import Fraction

from . import _core
from ._core import (  # noqa: F401
    QpwError,
    excursion_symbolic,
    fe_check,
    group_elements,
    group_order,
    model_ids,
    model_info,
    verify,
)

__all__ = [
    "QpwError",
    "excursion",
    "excursion_symbolic",
    "fe_check",
    "group_elements",
    "group_order",
    "guess_algebraic",
    "guess_ode",
    "model_ids",
    "model_info",
    "verify",
]


def _rat(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)
    return str(x)


def excursion(model, order, a=1, b=1):
    """Excursion series coefficients as Fractions, lengths 0..order."""
    return [Fraction(c) for c in _core.excursion(model, order, _rat(a), _rat(b))]


def guess_algebraic(coeffs, deg_g=12, deg_t=16, margin=15):
    """Fit a polynomial equation P(t, g) = 0 to a coefficient list."""
    return _core.guess_algebraic([_rat(c) for c in coeffs], deg_g, deg_t, margin)


def guess_ode(coeffs, max_order=8, max_deg=12, margin=15):
    """Fit a linear differential equation to a coefficient list."""
    return _core.guess_ode([_rat(c) for c in coeffs], max_order, max_deg, margin)
