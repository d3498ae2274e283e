"""Classifying stacks BG of finite permutation groups, and B mu_n via the DFT.

The inertia stack of BG has one point-like sector per conjugacy class, with
integration weight ``1 / |Z(g)|``.  All Todd and twisted Euler classes are 1,
so the orbifold Chern character is the character map and HRR reduces to
averaging characters.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Sequence

from .arith import Cyclotomic, Scalar, as_cyclotomic, root_of_unity
from .groups import (
    PermGroup,
    Representation,
    character_of,
    cyclic_group,
    rep_dual,
    rep_tensor,
)
from .inertia import InertiaClass, InertiaModel, Sector
from .rings import KClass, KRing, RingMismatchError, SectorClass


def cycle_notation(p: Sequence[int]) -> str:
    seen, cycles = set(), []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc, i = [], start
        while i not in seen:
            seen.add(i)
            cyc.append(i)
            i = p[i]
        cycles.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(cycles) or "()"


class BGInertia(InertiaModel):
    def __init__(self, group: PermGroup):
        self.group = group
        self.sectors = tuple(
            Sector(cycle_notation(group.elements[c.representative]), 0, Fraction(1, c.centralizer_order))
            for c in group.classes
        )
        self.td = self.one()
        self.e_rho = self.one()
        self._finish()

    def __repr__(self):
        return f"BGInertia({self.group!r})"

    def _check(self, rep: Representation) -> Representation:
        if rep.group is not self.group:
            raise ValueError("representation is not on this model's group")
        return rep

    def orbch(self, rep: Representation) -> InertiaClass:
        chi = character_of(self._check(rep))
        return InertiaClass(SectorClass(0, [v]) for v in chi.values)

    def dual(self, rep: Representation) -> Representation:
        return rep_dual(self._check(rep))

    def k_product(self, a: Representation, b: Representation) -> Representation:
        return rep_tensor(self._check(a), self._check(b))


def _integer(value: Cyclotomic, what: str) -> Fraction:
    if not value.is_rational() or value.to_fraction().denominator != 1:
        raise ArithmeticError(f"{what} = {value} is not an integer; the input representation is inconsistent")
    return value.to_fraction()


def bg_orbch(rep: Representation) -> InertiaClass:
    return BGInertia(rep.group).orbch(rep)


def bg_euler_char(rep: Representation, model: BGInertia | None = None) -> Fraction:
    """``dim V^G`` as the centralizer-weighted sum of character values."""
    model = model or BGInertia(rep.group)
    return _integer(model.hrr_integral(rep), "chi(BG, V)")


def bg_euler_pairing(a: Representation, b: Representation, model: BGInertia | None = None) -> Fraction:
    """``sum_i conj(chi_a(g_i)) chi_b(g_i) / |Z(g_i)|``."""
    if a.group is not b.group:
        raise ValueError("representations live on different groups")
    model = model or BGInertia(a.group)
    chi_a, chi_b = character_of(a), character_of(b)
    total = as_cyclotomic(0)
    for s, u, v in zip(model.sectors, chi_a.values, chi_b.values):
        total = total + u.conjugate() * v * s.weight
    return _integer(total, "chi(V, W)")


# -- B mu_n and the discrete Fourier transform -------------------------------------


@lru_cache(maxsize=64)
def _roots(n: int) -> tuple[Cyclotomic, ...]:
    return tuple(root_of_unity(n, k) for k in range(n))


def idft(n: int, f: Sequence[Scalar]) -> list[Cyclotomic]:
    """``k -> sum_j w^(jk) f(j)`` with ``w = zeta_n``; no normalization."""
    if n < 1:
        raise ValueError("n must be positive")
    if len(f) != n:
        raise ValueError(f"expected {n} values, got {len(f)}")
    f = [as_cyclotomic(v) for v in f]
    roots = _roots(n)
    return [sum((roots[j * k % n] * f[j] for j in range(n)), roots[0] * 0) for k in range(n)]


def dft(n: int, f: Sequence[Scalar]) -> list[Cyclotomic]:
    """``j -> (1/n) sum_k w^(-jk) f(k)``, the inverse of :func:`idft`."""
    if n < 1:
        raise ValueError("n must be positive")
    if len(f) != n:
        raise ValueError(f"expected {n} values, got {len(f)}")
    f = [as_cyclotomic(v) for v in f]
    roots = _roots(n)
    return [sum((roots[-j * k % n] * f[k] for k in range(n)), roots[0] * 0) / n for j in range(n)]


def weighted_inner(a: Sequence[Cyclotomic], b: Sequence[Cyclotomic]) -> Cyclotomic:
    """``(1/n) sum conj(a_i) b_i``."""
    n = len(a)
    return sum((as_cyclotomic(x).conjugate() * y for x, y in zip(a, b)), as_cyclotomic(0)) / n


class ParsevalCheck(NamedTuple):
    lhs: Fraction
    rhs: Fraction

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def parseval_check(n: int, f: Sequence[int], g: Sequence[int]) -> ParsevalCheck:
    """Euler pairing ``sum f(i) g(i)`` against the weighted product of the transforms."""
    if len(f) != n or len(g) != n:
        raise ValueError(f"expected vectors of length {n}")
    lhs = Fraction(sum(a * b for a, b in zip(f, g)))
    rhs = weighted_inner(idft(n, f), idft(n, g))
    return ParsevalCheck(lhs, rhs.to_fraction() if rhs.is_rational() else rhs)


class CyclicBGModel(InertiaModel):
    """``B mu_n`` with K-side ``Z[x]/(x^n - 1)``; orbch is the inverse DFT of the coefficients.

    Sector k is the class of ``zeta_n^k``; every centralizer is all of mu_n.
    """

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("n must be positive")
        self.n = n
        self.ring = KRing((n,))
        self.group = cyclic_group(n)
        self.sectors = tuple(Sector(f"k={k}", 0, Fraction(1, n)) for k in range(n))
        self.td = self.one()
        self.e_rho = self.one()
        self._finish()

    def __repr__(self):
        return f"CyclicBGModel({self.n})"

    def _check(self, x) -> KClass:
        if not isinstance(x, KClass):
            return self.ring.element(x)
        if x.ring != self.ring:
            raise RingMismatchError(f"class lives in {x.ring!r}, model is B mu_{self.n}")
        return x

    def element(self, coeffs: Sequence[Scalar]) -> KClass:
        return self.ring.element(dict(enumerate(coeffs)))

    def orbch(self, x) -> InertiaClass:
        coeffs = self._check(x).coefficients()
        f = [coeffs.get(j, 0) for j in range(self.n)]
        return InertiaClass(SectorClass(0, [v]) for v in idft(self.n, f))

    def dual(self, x) -> KClass:
        return self._check(x).dual()

    def k_product(self, x, y) -> KClass:
        return self._check(x) * self._check(y)
