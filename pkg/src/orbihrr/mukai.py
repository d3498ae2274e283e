"""Orbifold Mukai vectors and the sesquilinear Mukai pairing.

Everything here is generic over :class:`~orbihrr.inertia.InertiaModel`, so the
same code serves BG, B mu_n and weighted projective stacks.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, NamedTuple

from .arith import Cyclotomic
from .inertia import InertiaClass, InertiaModel


def sqrt_td(model: InertiaModel) -> InertiaClass:
    return model.td.sqrt()


def td_ratio_sqrt(model: InertiaModel) -> InertiaClass:
    """``sqrt(td / td^v)``, the correction factor in the pairing."""
    return (model.td * model.td.involution().inverse()).sqrt()


def mukai_vector(model: InertiaModel, x: Any) -> InertiaClass:
    return model.orbch(x) * sqrt_td(model)


def mukai_pairing(model: InertiaModel, v: InertiaClass, w: InertiaClass) -> Cyclotomic:
    """``int v^v w / e^rho * sqrt(td / td^v)``; conjugate-linear in v, linear in w."""
    integrand = v.involution() * w * model.e_rho.inverse() * td_ratio_sqrt(model)
    return model.integrate(integrand)


def _exact(value: Cyclotomic) -> Fraction | Cyclotomic:
    return value.to_fraction() if value.is_rational() else value


def euler_pairing(model: InertiaModel, x: Any, y: Any) -> Fraction | Cyclotomic:
    """``chi(x, y) = chi(X, x^v y)`` evaluated by HRR.

    Rational (indeed integral) for honest K-classes; complexified classes may
    give a cyclotomic value.
    """
    return _exact(model.hrr_integral(model.k_product(model.dual(x), y)))


class IsometryCheck(NamedTuple):
    lhs: Fraction | Cyclotomic
    rhs: Fraction | Cyclotomic

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def verify_isometry(model: InertiaModel, x: Any, y: Any) -> IsometryCheck:
    lhs = euler_pairing(model, x, y)
    rhs = _exact(mukai_pairing(model, mukai_vector(model, x), mukai_vector(model, y)))
    return IsometryCheck(lhs, rhs)
