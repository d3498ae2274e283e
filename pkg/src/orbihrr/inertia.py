"""Classes on an inertia stack and the interface shared by the model stacks."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Sequence

from .arith import Cyclotomic, Scalar, as_cyclotomic
from .rings import SectorClass


@dataclass(frozen=True)
class Sector:
    """One inertia component: a label, its dimension and its integration weight.

    The integral of a class over the component is ``weight`` times the
    coefficient of ``h^dim``.
    """

    label: str
    dim: int
    weight: Fraction


class InertiaClass:
    """Tuple of :class:`SectorClass`, one per sector; ring operations act componentwise."""

    __slots__ = ("components",)

    def __init__(self, components: Iterable[SectorClass]):
        self.components = tuple(components)

    def _zip(self, other):
        if not isinstance(other, InertiaClass):
            return [(a, other) for a in self.components]
        if len(other.components) != len(self.components):
            raise ValueError("inertia classes live on different sector lists")
        return zip(self.components, other.components)

    def __add__(self, other):
        return InertiaClass(a + b for a, b in self._zip(other))

    __radd__ = __add__

    def __sub__(self, other):
        return InertiaClass(a - b for a, b in self._zip(other))

    def __neg__(self):
        return InertiaClass(-a for a in self.components)

    def __mul__(self, other):
        return InertiaClass(a * b for a, b in self._zip(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, InertiaClass):
            return self * other.inverse()
        return InertiaClass(a / other for a in self.components)

    def inverse(self) -> "InertiaClass":
        return InertiaClass(a.inverse() for a in self.components)

    def sqrt(self) -> "InertiaClass":
        return InertiaClass(a.sqrt() for a in self.components)

    def involution(self) -> "InertiaClass":
        return InertiaClass(a.involution() for a in self.components)

    def __getitem__(self, i: int) -> SectorClass:
        return self.components[i]

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __eq__(self, other):
        if not isinstance(other, InertiaClass):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def flatten(self) -> list[Cyclotomic]:
        """All coefficients, sector by sector (used for rank computations)."""
        return [c for comp in self.components for c in comp.coeffs]

    def __repr__(self):
        return "InertiaClass(" + ", ".join(str(c) for c in self.components) + ")"


class InertiaModel:
    """A quotient stack reduced to its inertia data.

    Subclasses set ``sectors``, ``td`` (Todd class of each sector's tangent
    part) and ``e_rho`` (twisted Euler class of each sector's normal part),
    and implement ``orbch``, ``dual`` and ``k_product`` on their K-side objects.
    The distinguished sector comes first.
    """

    sectors: tuple[Sector, ...]
    td: InertiaClass
    e_rho: InertiaClass

    def orbch(self, x: Any) -> InertiaClass:
        raise NotImplementedError

    def dual(self, x: Any) -> Any:
        raise NotImplementedError

    def k_product(self, x: Any, y: Any) -> Any:
        raise NotImplementedError

    # -- shared machinery ---------------------------------------------------------

    def constant(self, value: Scalar) -> InertiaClass:
        return InertiaClass(SectorClass.scalar(s.dim, value) for s in self.sectors)

    def zero(self) -> InertiaClass:
        return self.constant(0)

    def one(self) -> InertiaClass:
        return self.constant(1)

    def from_components(self, comps: Sequence[Sequence[Scalar]]) -> InertiaClass:
        return InertiaClass(SectorClass(s.dim, c) for s, c in zip(self.sectors, comps))

    def _finish(self) -> None:
        # called once by subclasses after td and e_rho are set
        for s, d, e in zip(self.sectors, self.td, self.e_rho):
            if d.dim != s.dim or e.dim != s.dim or not d.constant or not e.constant:
                raise ValueError(f"sector {s.label}: td / e_rho must be units of truncation {s.dim}")
        if self.e_rho[0] != 1:
            raise ValueError("distinguished sector must have trivial twisted Euler class")
        self._orbtd = self.td / self.e_rho

    def orbtd(self) -> InertiaClass:
        return self._orbtd

    def sector_integrals(self, v: InertiaClass) -> list[Cyclotomic]:
        if len(v) != len(self.sectors):
            raise ValueError(f"class has {len(v)} components, model has {len(self.sectors)} sectors")
        return [comp.top * s.weight for comp, s in zip(v, self.sectors)]

    def integrate(self, v: InertiaClass) -> Cyclotomic:
        total = as_cyclotomic(0)
        for part in self.sector_integrals(v):
            total = total + part
        return total

    def hrr_contributions(self, x: Any) -> list[Cyclotomic]:
        """Per-sector pieces of ``int orbch(x) orbtd``."""
        return self.sector_integrals(self.orbch(x) * self.orbtd())

    def hrr_integral(self, x: Any) -> Cyclotomic:
        return self.integrate(self.orbch(x) * self.orbtd())

    def euler_char(self, x: Any) -> Fraction:
        value = self.hrr_integral(x)
        if not value.is_rational():
            raise ArithmeticError(f"HRR integral {value} is not rational; sector data is inconsistent")
        return value.to_fraction()
