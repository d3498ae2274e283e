"""Weighted projective stacks P(a_0, ..., a_n).

Inertia sectors are indexed by roots of unity g with g^a_i = 1 for some i.
The sector of g is the weighted projective stack on the coordinates fixed by
g; the remaining coordinates form its normal bundle, on which g acts with
eigenvalue g^a_j.  Classes on a sector of dimension D are polynomials in
the hyperplane class h truncated above h^D, and

    int_{P(a_S)} h^(|S|-1) = 1 / prod_{i in S} a_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import factorial, gcd, prod
from typing import Sequence

from .arith import Cyclotomic, lcm, root_of_unity
from .inertia import InertiaClass, InertiaModel, Sector
from .rings import KClass, KRing, LaurentPoly, RingMismatchError, SectorClass, exp_line, todd_line


@dataclass(frozen=True)
class WPS:
    weights: tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(a) for a in self.weights)
        if not w or any(a < 1 for a in w):
            raise ValueError(f"weights must be a nonempty list of positive integers, got {self.weights}")
        object.__setattr__(self, "weights", w)

    @property
    def dim(self) -> int:
        return len(self.weights) - 1

    @cached_property
    def kring(self) -> KRing:
        return KRing(self.weights)

    def __str__(self):
        return "P(" + ",".join(map(str, self.weights)) + ")"


@dataclass(frozen=True)
class WpsSector:
    g: Cyclotomic
    g_order: int
    g_exponent: int
    fixed: tuple[int, ...]
    normal_weights: tuple[int, ...]
    volume_factor: int

    @property
    def dim(self) -> int:
        return len(self.fixed) - 1

    @property
    def label(self) -> str:
        return "g=" + root_label(self.g_order, self.g_exponent)


def root_label(order: int, exponent: int) -> str:
    if order == 1:
        return "1"
    if order == 2:
        return "-1"
    return f"z{order}" if exponent == 1 else f"z{order}^{exponent}"


def wps_sectors(w: WPS | Sequence[int]) -> list[WpsSector]:
    """Sectors for every root of unity whose order divides some weight, ordered by (order, exponent)."""
    w = _as_wps(w)
    big = lcm(*w.weights)
    out = []
    for k in range(big):
        m = big // gcd(k, big)
        j = k // gcd(k, big)
        g = root_of_unity(m, j)
        fixed = tuple(i for i, a in enumerate(w.weights) if g**a == 1)
        if not fixed:
            continue
        normal = tuple(a for i, a in enumerate(w.weights) if i not in fixed)
        out.append(WpsSector(g, m, j, fixed, normal, prod(w.weights[i] for i in fixed)))
    out.sort(key=lambda s: (s.g_order, s.g_exponent))
    return out


def _as_wps(w) -> WPS:
    return w if isinstance(w, WPS) else WPS(tuple(w))


def _exp_multiple(dim: int, d: int) -> SectorClass:
    """``exp(d h)`` truncated at ``h^dim``."""
    return SectorClass(dim, [Fraction(d**k, factorial(k)) for k in range(dim + 1)])


class WPSModel(InertiaModel):
    def __init__(self, w: WPS | Sequence[int]):
        self.wps = _as_wps(w)
        self.ring = self.wps.kring
        self.wsectors = tuple(wps_sectors(self.wps))
        self.sectors = tuple(Sector(s.label, s.dim, Fraction(1, s.volume_factor)) for s in self.wsectors)
        weights = self.wps.weights
        td, e_rho = [], []
        for s in self.wsectors:
            t = SectorClass.one(s.dim)
            for i in s.fixed:
                t = t * todd_line(SectorClass.h(s.dim, weights[i]))
            e = SectorClass.one(s.dim)
            for a in s.normal_weights:
                factor = 1 - exp_line(SectorClass.h(s.dim, -a)) * s.g ** (-a)
                assert factor.constant, f"vanishing twisted Euler factor at {s.label}"
                e = e * factor
            td.append(t)
            e_rho.append(e)
        self.td = InertiaClass(td)
        self.e_rho = InertiaClass(e_rho)
        self._finish()

    def __repr__(self):
        return f"WPSModel({self.wps})"

    def _check(self, x: KClass) -> KClass:
        if not isinstance(x, KClass):
            return self.ring.element(x)
        if x.ring != self.ring:
            raise RingMismatchError(f"class lives in {x.ring!r}, model is {self.wps}")
        return x

    def orbch(self, x: KClass) -> InertiaClass:
        """``x^d`` restricts to ``g^d e^(d h)`` on the sector of g; extended linearly."""
        x = self._check(x)
        comps = []
        for s in self.wsectors:
            acc = SectorClass(s.dim)
            for d, c in x.coefficients().items():
                acc = acc + _exp_multiple(s.dim, d) * (c * s.g**d)
            comps.append(acc)
        return InertiaClass(comps)

    def dual(self, x: KClass) -> KClass:
        return self._check(x).dual()

    def k_product(self, x: KClass, y: KClass) -> KClass:
        return self._check(x) * self._check(y)


def wps_orbch(w, x: KClass) -> InertiaClass:
    return WPSModel(w).orbch(x)


def wps_orbtd(w) -> InertiaClass:
    return WPSModel(w).orbtd()


def wps_integrate(w, v: InertiaClass) -> Cyclotomic:
    return WPSModel(w).integrate(v)


def wps_euler_char(w, x: KClass | int) -> Fraction:
    """``chi(P, x)`` by orbifold HRR; an int ``d`` means the line bundle O(d)."""
    model = w if isinstance(w, WPSModel) else WPSModel(w)
    if isinstance(x, int):
        x = model.ring.monomial(x)
    return model.euler_char(x)


def monomial_count_oracle(w, d: int) -> int:
    """Number of exponent vectors m >= 0 with sum a_i m_i = d."""
    weights = _as_wps(w).weights
    if d < 0:
        return 0
    ways = [1] + [0] * d
    for a in weights:
        for t in range(a, d + 1):
            ways[t] += ways[t - a]
    return ways[d]


def wps_kring_relation(w) -> tuple[LaurentPoly, str]:
    ring = _as_wps(w).kring
    return ring.relation, ring.presentation()
