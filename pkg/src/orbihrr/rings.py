"""Grothendieck rings of the model stacks and truncated Chow-class series.

``KRing(weights)`` is ``Z[x, x^-1] / <prod_i (x^a_i - 1)>`` (coefficients are
allowed to be cyclotomic so that complexified classes fit too).  Classes are
kept as the unique remainder of degree below ``sum(weights)``.

``SectorClass`` is a polynomial in the hyperplane class ``h`` truncated above
``h^dim``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping, Sequence

from .arith import Cyclotomic, Scalar, as_cyclotomic, root_of_unity

__all__ = [
    "KClass",
    "KRing",
    "LaurentPoly",
    "NotInvertibleError",
    "RingMismatchError",
    "SectorClass",
    "exp_line",
    "k_euler_class",
    "kring_new",
    "lambda_power",
    "parse_kclass",
    "parse_sector_class",
    "todd_coefficients",
    "todd_line",
]

ONE = as_cyclotomic(1)
ZERO = as_cyclotomic(0)


class RingMismatchError(ValueError):
    """Operands live in different rings (or sectors of different dimension)."""


class NotInvertibleError(ArithmeticError):
    pass


# -- Laurent polynomials -------------------------------------------------------


class LaurentPoly:
    """Finitely supported map exponent -> Cyclotomic with no stored zeros."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Scalar] | None = None):
        clean = {}
        for e, c in (terms or {}).items():
            c = as_cyclotomic(c)
            if c:
                clean[int(e)] = c
        self._terms = clean

    @classmethod
    def monomial(cls, exp: int, coeff: Scalar = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    @property
    def terms(self) -> dict[int, Cyclotomic]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def min_exp(self) -> int:
        return min(self._terms, default=0)

    def max_exp(self) -> int:
        return max(self._terms, default=0)

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly({0: other})
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out[e] + c if e in out else c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, LaurentPoly) else -as_cyclotomic(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            c = as_cyclotomic(other)
            return LaurentPoly({e: v * c for e, v in self._terms.items()})
        out: dict[int, Cyclotomic] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out[e] + c1 * c2 if e in out else c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) != 1:
                raise NotInvertibleError(f"{self} is not a unit in the Laurent ring")
            (e, c), = self._terms.items()
            return LaurentPoly({e * k: c**k})
        acc = LaurentPoly({0: 1})
        for _ in range(k):
            acc = acc * self
        return acc

    def substitute_inverse(self) -> "LaurentPoly":
        """x -> x^-1 with complex conjugation of the coefficients."""
        return LaurentPoly({-e: c.conjugate() for e, c in self._terms.items()})

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            try:
                other = LaurentPoly({0: other})
            except TypeError:
                return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self):
        return format_poly(self._terms, "x")

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"


def _product_relation(weights: Sequence[int]) -> LaurentPoly:
    rel = LaurentPoly({0: 1})
    for a in weights:
        rel = rel * LaurentPoly({a: 1, 0: -1})
    return rel


class KRing:
    """``Z[x, x^-1]`` modulo ``prod (x^a_i - 1)``, or the free Laurent ring.

    Equality is by weights, so two handles built from the same weights are
    interchangeable.
    """

    def __init__(self, weights: Sequence[int] | None):
        if weights is None:
            self.weights = None
            self.relation = None
            self.degree = None
            return
        weights = tuple(int(a) for a in weights)
        if not weights:
            raise ValueError("a K-ring needs at least one weight")
        if any(a < 1 for a in weights):
            raise ValueError(f"weights must be positive integers, got {weights}")
        self.weights = weights
        self.relation = _product_relation(weights)
        self.degree = sum(weights)
        # relation = x * P(x) + c0 with c0 = +-1, so x^-1 = -c0 * P(x)
        c0 = self.relation.terms[0]
        self._xinv = LaurentPoly({e - 1: -c0 * c for e, c in self.relation.terms.items() if e > 0})
        self._inv_powers = {0: {0: ONE}}

    @classmethod
    def free(cls) -> "KRing":
        """The Laurent ring itself, e.g. K of [C^(n+1)/C*] before removing the origin."""
        return cls(None)

    @property
    def is_free(self) -> bool:
        return self.weights is None

    def __eq__(self, other):
        return isinstance(other, KRing) and self.weights == other.weights

    def __hash__(self):
        return hash(("KRing", self.weights))

    def __repr__(self):
        return f"KRing({list(self.weights) if self.weights else None})"

    def presentation(self) -> str:
        if self.is_free:
            return "Z[x, x^-1]"
        factors = "".join(f"({format_poly({a: ONE, 0: -ONE}, 'x')})" for a in self.weights)
        return f"Z[x]/<{factors}>"

    # -- canonical form ------------------------------------------------------

    def _reduce_poly(self, terms: Mapping[int, Cyclotomic]) -> dict[int, Cyclotomic]:
        """Remainder of a polynomial (nonnegative exponents) modulo the relation."""
        deg = self.degree
        rel = self.relation.terms
        work = dict(terms)
        top = max(work, default=-1)
        while top >= deg:
            c = work.pop(top)
            if c:
                shift = top - deg
                for re_, rc in rel.items():
                    if re_ == deg:
                        continue
                    k = re_ + shift
                    work[k] = work[k] - c * rc if k in work else -c * rc
            top = max(work, default=-1)
        return {e: c for e, c in work.items() if c}

    def _inverse_power(self, k: int) -> dict[int, Cyclotomic]:
        """Canonical form of ``x^-k``."""
        # idempotent fill; concurrent callers at worst duplicate work
        cache = self._inv_powers
        start = max(j for j in cache if j <= k)
        for j in range(start + 1, k + 1):
            prod: dict[int, Cyclotomic] = {}
            for e1, c1 in cache[j - 1].items():
                for e2, c2 in self._xinv.terms.items():
                    e = e1 + e2
                    prod[e] = prod[e] + c1 * c2 if e in prod else c1 * c2
            cache[j] = self._reduce_poly(prod)
        return cache[k]

    def reduce(self, poly: LaurentPoly) -> LaurentPoly:
        if self.is_free:
            return poly
        pos: dict[int, Cyclotomic] = {}
        for e, c in poly.terms.items():
            if e >= 0:
                pos[e] = pos[e] + c if e in pos else c
            else:
                for e2, c2 in self._inverse_power(-e).items():
                    pos[e2] = pos[e2] + c * c2 if e2 in pos else c * c2
        return LaurentPoly(self._reduce_poly({e: c for e, c in pos.items() if c}))

    # -- element constructors -------------------------------------------------

    def element(self, value: LaurentPoly | Mapping[int, Scalar] | Scalar) -> "KClass":
        if isinstance(value, LaurentPoly):
            poly = value
        elif isinstance(value, Mapping):
            poly = LaurentPoly(value)
        else:
            poly = LaurentPoly({0: value})
        return KClass(self, self.reduce(poly))

    def monomial(self, d: int, coeff: Scalar = 1) -> "KClass":
        return self.element({d: coeff})

    def one(self) -> "KClass":
        return self.element({0: 1})

    def zero(self) -> "KClass":
        return self.element({})

    def x(self) -> "KClass":
        return self.monomial(1)

    def parse(self, text: str) -> "KClass":
        return self.element(parse_laurent(text, "x"))


def kring_new(weights: Sequence[int]) -> KRing:
    return KRing(weights)


class KClass:
    """An element of a :class:`KRing` in canonical reduced form."""

    __slots__ = ("ring", "rep")

    def __init__(self, ring: KRing, rep: LaurentPoly):
        self.ring = ring
        self.rep = rep

    def _check(self, other) -> "KClass":
        if not isinstance(other, KClass):
            return self.ring.element(other)
        if other.ring != self.ring:
            raise RingMismatchError(f"{self.ring!r} vs {other.ring!r}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return KClass(self.ring, self.rep + other.rep)

    __radd__ = __add__

    def __neg__(self):
        return KClass(self.ring, -self.rep)

    def __sub__(self, other):
        other = self._check(other)
        return KClass(self.ring, self.rep - other.rep)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, KClass):
            other = self._check(other)
            return self.ring.element(self.rep * other.rep)
        return KClass(self.ring, self.rep * as_cyclotomic(other))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        base = self if k >= 0 else self.inverse()
        acc = self.ring.one()
        for _ in range(abs(k)):
            acc = acc * base
        return acc

    def dual(self) -> "KClass":
        """``x^d -> x^-d``; scalar coefficients are complex-conjugated."""
        return self.ring.element(self.rep.substitute_inverse())

    def inverse(self) -> "KClass":
        if self.ring.is_free:
            return KClass(self.ring, self.rep ** -1)
        shift = max(0, -self.rep.min_exp())
        f = _dense(self.rep * LaurentPoly.monomial(shift))
        g = _dense(self.ring.relation)
        r0, r1, s0, s1 = g, f, [], [ONE]
        while len(r1) > 1:
            q, rem = _dense_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _dense_sub(s0, _dense_mul(q, s1))
        if not r1:
            raise NotInvertibleError(f"{self} shares a factor with {self.ring.presentation()}")
        c = r1[0].inverse()
        inv = LaurentPoly({i: v * c for i, v in enumerate(s1)}) * LaurentPoly.monomial(shift)
        return self.ring.element(inv)

    def coefficients(self) -> dict[int, Cyclotomic]:
        return self.rep.terms

    def __eq__(self, other):
        if not isinstance(other, KClass):
            try:
                other = self.ring.element(other)
            except TypeError:
                return NotImplemented
        return self.ring == other.ring and self.rep == other.rep

    def __hash__(self):
        return hash((self.ring, self.rep))

    def __str__(self):
        return str(self.rep)

    def __repr__(self):
        return f"KClass({str(self)!r}, {self.ring!r})"


def parse_kclass(ring: KRing, text: str) -> KClass:
    return ring.parse(text)


def _dense(poly: LaurentPoly) -> list[Cyclotomic]:
    terms = poly.terms
    if not terms:
        return []
    if min(terms) < 0:
        raise ValueError("negative exponent in dense conversion")
    out = [ZERO] * (max(terms) + 1)
    for e, c in terms.items():
        out[e] = c
    return out


def _dense_trim(p):
    while p and not p[-1]:
        p.pop()
    return p


def _dense_divmod(num, den):
    num, den = list(num), _dense_trim(list(den))
    quot = [ZERO] * max(len(num) - len(den) + 1, 0)
    lead_inv = den[-1].inverse()
    for shift in range(len(num) - len(den), -1, -1):
        c = num[shift + len(den) - 1]
        if not c:
            continue
        c = c * lead_inv
        quot[shift] = c
        for i, d in enumerate(den):
            num[shift + i] = num[shift + i] - c * d
    return _dense_trim(quot), _dense_trim(num[: len(den) - 1])


def _dense_mul(a, b):
    if not a or not b:
        return []
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
    return _dense_trim(out)


def _dense_sub(a, b):
    n = max(len(a), len(b))
    return _dense_trim([(a[i] if i < len(a) else ZERO) - (b[i] if i < len(b) else ZERO) for i in range(n)])


# -- lambda operations on line-class combinations ----------------------------


def _net_terms(terms: Iterable) -> dict[int, int]:
    """Collapse ``[(sign, b), ...]`` (or bare exponents) to net multiplicities."""
    net: dict[int, int] = {}
    for t in terms:
        sign, b = (1, t) if isinstance(t, int) else t
        if sign not in (1, -1):
            raise ValueError(f"term sign must be +1 or -1, got {sign}")
        net[b] = net.get(b, 0) + sign
    return {b: m for b, m in net.items() if m}


def lambda_power(ring: KRing, exponents: Sequence[int], i: int) -> KClass:
    """``lambda^i`` of the sum of line classes ``x^b`` (elementary symmetric function)."""
    # coefficients of prod (1 + x^b t) as a polynomial in t
    coeffs = [ring.one()]
    for b in exponents:
        line = ring.monomial(b)
        coeffs = [
            (coeffs[k] if k < len(coeffs) else ring.zero())
            + (line * coeffs[k - 1] if k >= 1 else ring.zero())
            for k in range(len(coeffs) + 1)
        ]
    return coeffs[i] if 0 <= i < len(coeffs) else ring.zero()


def k_euler_class(ring: KRing, terms: Iterable) -> KClass:
    """K-theoretic Euler class of ``sum eps_i x^b_i``: ``prod (1 - x^-b_i)^eps_i``.

    Terms are ``(sign, exponent)`` pairs or bare exponents (positive sign).
    Opposite terms with equal exponent cancel before anything is inverted.
    """
    result = ring.one()
    for b, m in sorted(_net_terms(terms).items()):
        factor = ring.one() - ring.monomial(-b)
        if m < 0:
            try:
                factor = factor.inverse()
            except NotInvertibleError as exc:
                raise NotInvertibleError(f"e^K factor 1 - x^{-b} of term -x^{b} is not invertible") from exc
        result = result * factor ** abs(m)
    return result


# -- truncated series -----------------------------------------------------------


class SectorClass:
    """Polynomial in ``h`` with cyclotomic coefficients, truncated above ``h^dim``."""

    __slots__ = ("dim", "coeffs")

    def __init__(self, dim: int, coeffs: Iterable[Scalar] = ()):
        if dim < 0:
            raise ValueError(f"sector dimension must be nonnegative, got {dim}")
        cs = [as_cyclotomic(c) for c in coeffs][: dim + 1]
        cs += [ZERO] * (dim + 1 - len(cs))
        self.dim = dim
        self.coeffs = tuple(cs)

    @classmethod
    def scalar(cls, dim: int, value: Scalar) -> "SectorClass":
        return cls(dim, [value])

    @classmethod
    def one(cls, dim: int) -> "SectorClass":
        return cls(dim, [1])

    @classmethod
    def h(cls, dim: int, multiple: Scalar = 1) -> "SectorClass":
        return cls(dim, [0, multiple])

    def __getitem__(self, j: int) -> Cyclotomic:
        return self.coeffs[j] if 0 <= j <= self.dim else ZERO

    @property
    def constant(self) -> Cyclotomic:
        return self.coeffs[0]

    @property
    def top(self) -> Cyclotomic:
        return self.coeffs[self.dim]

    def _check(self, other) -> "SectorClass":
        if not isinstance(other, SectorClass):
            return SectorClass.scalar(self.dim, other)
        if other.dim != self.dim:
            raise RingMismatchError(f"truncation degrees differ: {self.dim} vs {other.dim}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return SectorClass(self.dim, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return SectorClass(self.dim, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._check(other)
        return SectorClass(self.dim, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, SectorClass):
            c = as_cyclotomic(other)
            return SectorClass(self.dim, [a * c for a in self.coeffs])
        other = self._check(other)
        out = [ZERO] * (self.dim + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(self.dim + 1 - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] = out[i + j] + a * b
        return SectorClass(self.dim, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, SectorClass):
            return self * other.inverse()
        return self * as_cyclotomic(other).inverse()

    def __pow__(self, k: int):
        base = self if k >= 0 else self.inverse()
        acc = SectorClass.one(self.dim)
        for _ in range(abs(k)):
            acc = acc * base
        return acc

    def inverse(self) -> "SectorClass":
        a0 = self.constant
        if not a0:
            raise NotInvertibleError(f"{self} has zero constant term")
        inv0 = a0.inverse()
        out = [inv0]
        for k in range(1, self.dim + 1):
            acc = ZERO
            for j in range(1, k + 1):
                acc = acc + self.coeffs[j] * out[k - j]
            out.append(-acc * inv0)
        return SectorClass(self.dim, out)

    def sqrt(self) -> "SectorClass":
        """Principal square root ``sum_k binom(1/2, k) v^k`` of ``1 + v``."""
        if self.constant != 1:
            raise ValueError(f"square root needs constant term 1, got {self.constant}")
        v = self - 1
        acc = SectorClass.one(self.dim)
        power = SectorClass.one(self.dim)
        for k in range(1, self.dim + 1):
            power = power * v
            acc = acc + power * _binom_half(k)
        return acc

    def involution(self) -> "SectorClass":
        """``h^j`` picks up ``(-1)^j`` and coefficients are conjugated."""
        return SectorClass(self.dim, [c.conjugate() if j % 2 == 0 else -c.conjugate() for j, c in enumerate(self.coeffs)])

    def compose(self, series: Sequence[Scalar]) -> "SectorClass":
        """Evaluate ``sum_k series[k] * self^k``; self must be nilpotent."""
        if self.constant:
            raise ValueError("composition needs a class with zero constant term")
        top = min(self.dim, len(series) - 1)
        acc = SectorClass.scalar(self.dim, series[top])
        for k in range(top - 1, -1, -1):
            acc = acc * self + series[k]
        return acc

    def __eq__(self, other):
        if not isinstance(other, SectorClass):
            try:
                other = SectorClass.scalar(self.dim, other)
            except TypeError:
                return NotImplemented
        return self.dim == other.dim and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.dim, self.coeffs))

    def __str__(self):
        return format_poly(dict(enumerate(self.coeffs)), "h")

    def __repr__(self):
        return f"SectorClass({self.dim}, {str(self)!r})"


def _binom_half(k: int) -> Fraction:
    out = Fraction(1)
    for i in range(k):
        out *= Fraction(1, 2) - i
    return out / factorial(k)


@lru_cache(maxsize=None)
def todd_coefficients(n: int) -> tuple[Fraction, ...]:
    """Taylor coefficients of ``t / (1 - e^-t)`` up to ``t^n`` (h^1 term is +1/2)."""
    # (1 - e^-t)/t = sum (-1)^k t^k / (k+1)!
    s = [Fraction((-1) ** k, factorial(k + 1)) for k in range(n + 1)]
    out = [Fraction(1)]
    for k in range(1, n + 1):
        out.append(-sum(s[j] * out[k - j] for j in range(1, k + 1)))
    return tuple(out)


def exp_line(c: SectorClass) -> SectorClass:
    if c.constant:
        raise ValueError(f"exp_line needs zero constant term, got {c}")
    return c.compose([Fraction(1, factorial(k)) for k in range(c.dim + 1)])


def todd_line(c: SectorClass) -> SectorClass:
    """Todd class ``c / (1 - e^-c)`` of a line bundle with first Chern class c."""
    if c.constant:
        raise ValueError(f"todd_line needs zero constant term, got {c}")
    return c.compose(todd_coefficients(c.dim))


# -- text forms -------------------------------------------------------------------


def _format_coeff(c: Cyclotomic) -> tuple[str, str]:
    """Split a coefficient into (sign, body) for inline printing."""
    nonzero = [x for x in c.coeffs if x]
    if len(nonzero) == 1:
        s = str(c)
        return ("-", s[1:]) if s.startswith("-") else ("+", s)
    return "+", f"({c})"


def format_poly(terms: Mapping[int, Cyclotomic], var: str) -> str:
    pieces = []
    for e in sorted(terms, reverse=True):
        c = terms[e]
        if not c:
            continue
        sign, body = _format_coeff(c)
        if e != 0:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if body == "1" else f"{body}*{mono}"
        pieces.append((sign, body))
    if not pieces:
        return "0"
    out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


_PTOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<z>z(?P<ord>\d+))|(?P<var>[a-y])|(?P<op>[-+*^()]))")


def parse_laurent(text: str, var: str) -> LaurentPoly:
    """Parse a Laurent polynomial in ``var`` with cyclotomic coefficients."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _PTOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {text!r} at position {pos}")
        pos = m.end()
        if m.group("num"):
            tokens.append(("num", Fraction(m.group("num"))))
        elif m.group("z"):
            tokens.append(("const", root_of_unity(int(m.group("ord")))))
        elif m.group("var"):
            if m.group("var") != var:
                raise ValueError(f"unexpected variable {m.group('var')!r} (expected {var!r})")
            tokens.append(("const", LaurentPoly.monomial(1)))
        else:
            tokens.append((m.group("op"), None))
    if not tokens:
        raise ValueError("empty polynomial literal")
    value, i = _psum(tokens, 0)
    if i != len(tokens):
        raise ValueError(f"trailing input in {text!r}")
    return value


def _as_poly(v):
    return v if isinstance(v, LaurentPoly) else LaurentPoly({0: v})


def _psum(tokens, i):
    sign = 1
    if i < len(tokens) and tokens[i][0] in ("+", "-"):
        sign = -1 if tokens[i][0] == "-" else 1
        i += 1
    value, i = _pprod(tokens, i)
    value = _as_poly(value) * sign
    while i < len(tokens) and tokens[i][0] in ("+", "-"):
        sign = -1 if tokens[i][0] == "-" else 1
        term, i = _pprod(tokens, i + 1)
        value = value + _as_poly(term) * sign
    return value, i


def _pprod(tokens, i):
    value, i = _ppow(tokens, i)
    while i < len(tokens) and tokens[i][0] == "*":
        factor, i = _ppow(tokens, i + 1)
        value = _as_poly(value) * _as_poly(factor)
    return value, i


def _ppow(tokens, i):
    if i >= len(tokens):
        raise ValueError("unexpected end of polynomial literal")
    kind, payload = tokens[i]
    if kind == "num":
        base = as_cyclotomic(payload)
    elif kind == "const":
        base = payload
    elif kind == "(":
        base, i = _psum(tokens, i + 1)
        if i >= len(tokens) or tokens[i][0] != ")":
            raise ValueError("unbalanced parenthesis")
    else:
        raise ValueError(f"unexpected token {kind!r}")
    i += 1
    if i < len(tokens) and tokens[i][0] == "^":
        i += 1
        neg = False
        if i < len(tokens) and tokens[i][0] == "-":
            neg, i = True, i + 1
        if i >= len(tokens) or tokens[i][0] != "num" or tokens[i][1].denominator != 1:
            raise ValueError("exponent must be an integer")
        k = int(tokens[i][1])
        base = base ** (-k if neg else k)
        i += 1
    return base, i


def parse_sector_class(text: str, dim: int) -> SectorClass:
    poly = parse_laurent(text, "h")
    terms = poly.terms
    if terms and min(terms) < 0:
        raise ValueError("negative powers of h are not allowed")
    return SectorClass(dim, [terms.get(j, 0) for j in range(dim + 1)])
