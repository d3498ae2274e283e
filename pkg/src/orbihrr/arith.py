"""Exact arithmetic in cyclotomic fields Q(zeta_N).

An element of order ``N`` is stored as its residue modulo the cyclotomic
polynomial ``Phi_N``, i.e. a vector of ``phi(N)`` rationals in the power basis
``1, z, ..., z^(phi(N)-1)`` where ``z = exp(2 pi i / N)``.  Elements of
different orders are combined by lifting both to the lcm of the orders.

Rationals are plain :class:`fractions.Fraction` values.

    >>> z3 = root_of_unity(3, 1)
    >>> z3 + z3**2
    Cyclotomic('-1', order=3)
    >>> print((1 - z3).inverse())
    1/3*z3 + 2/3
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd
from typing import Iterable, Mapping, Union

__all__ = [
    "Cyclotomic",
    "CyclotomicZeroDivisionError",
    "Scalar",
    "as_cyclotomic",
    "cyclotomic_poly",
    "lcm",
    "parse_cyclotomic",
    "root_of_unity",
    "totient",
]

Scalar = Union[int, Fraction, "Cyclotomic"]


class CyclotomicZeroDivisionError(ZeroDivisionError):
    """Raised when inverting the zero element of a cyclotomic field."""


def lcm(*values: int) -> int:
    return reduce(lambda a, b: a * b // gcd(a, b), values, 1)


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _mobius(n: int) -> int:
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


# -- dense polynomials over Q (low degree first) ------------------------------


def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(num: list, den: list) -> tuple[list, list]:
    num = list(num)
    den = _trim(list(den))
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [0] * max(len(num) - len(den) + 1, 0)
    lead = den[-1]
    for shift in range(len(num) - len(den), -1, -1):
        c = num[shift + len(den) - 1]
        if c == 0:
            continue
        if lead != 1:
            c = Fraction(c) / lead
        quot[shift] = c
        for i, d in enumerate(den):
            num[shift + i] -= c * d
    return _trim(quot), _trim(num[: len(den) - 1])


def _poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _poly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of ``Phi_n``, constant term first.

    Obtained by dividing ``x^n - 1`` by ``Phi_d`` for every proper divisor d.
    """
    if n < 1:
        raise ValueError(f"cyclotomic order must be positive, got {n}")
    num: list = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        num, rem = _poly_divmod(num, list(cyclotomic_poly(d)))
        assert not rem
    return tuple(int(c) for c in num)


def totient(n: int) -> int:
    return len(cyclotomic_poly(n)) - 1


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Row k holds the coefficients of ``x^k mod Phi_n`` for 0 <= k < n."""
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    rows = []
    row = [0] * deg
    row[0] = 1 if deg else 0
    if deg == 0:  # pragma: no cover - phi(n) >= 1 always
        raise AssertionError
    for _ in range(n):
        rows.append(tuple(row))
        # multiply by x and reduce the overflow with the monic Phi_n
        top = row[-1]
        row = [0] + row[:-1]
        if top:
            for i in range(deg):
                row[i] -= top * phi[i]
    return tuple(rows)


@lru_cache(maxsize=None)
def _trace_weights(n: int) -> tuple[Fraction, ...]:
    # normalized trace of z_n^i is mobius(m)/phi(m), m = n/gcd(i, n)
    out = []
    for i in range(totient(n)):
        m = n // gcd(i, n)
        out.append(Fraction(_mobius(m), totient(m)))
    return tuple(out)


def _reduce_dense(n: int, dense: Mapping[int, Fraction] | Iterable) -> tuple[Fraction, ...]:
    """Reduce ``sum c_k x^k`` (exponents taken mod n) to the power basis."""
    table = _power_table(n)
    deg = len(table[0])
    out = [Fraction(0)] * deg
    items = dense.items() if isinstance(dense, Mapping) else enumerate(dense)
    for k, c in items:
        if not c:
            continue
        k %= n
        if k < deg:
            out[k] += c
        else:
            for i, t in enumerate(table[k]):
                if t:
                    out[i] += c * t
    return tuple(out)


def _scaled(coeffs: tuple[Fraction, ...]) -> tuple[list[int], int]:
    den = 1
    for c in coeffs:
        if c.denominator != 1:
            den = den * c.denominator // gcd(den, c.denominator)
    return [c.numerator * (den // c.denominator) for c in coeffs], den


class Cyclotomic:
    """Immutable element of Q(zeta_order) in canonical residue form."""

    __slots__ = ("_order", "_coeffs")

    def __init__(self, order: int, coeffs: Iterable = (0,)):
        if order < 1:
            raise ValueError(f"cyclotomic order must be positive, got {order}")
        coeffs = tuple(Fraction(c) for c in coeffs)
        deg = totient(order)
        if len(coeffs) > deg:
            coeffs = _reduce_dense(order, coeffs)
        elif len(coeffs) < deg:
            coeffs = coeffs + (Fraction(0),) * (deg - len(coeffs))
        self._order = order
        self._coeffs = coeffs

    @classmethod
    def from_exponents(cls, order: int, terms: Mapping[int, Scalar]) -> "Cyclotomic":
        """Build ``sum c_k z^k`` where each c_k is rational."""
        return cls._raw(order, _reduce_dense(order, {k: Fraction(c) for k, c in terms.items()}))

    @classmethod
    def _raw(cls, order: int, coeffs: tuple) -> "Cyclotomic":
        obj = object.__new__(cls)
        obj._order = order
        obj._coeffs = coeffs
        return obj

    @property
    def order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    # -- structure ----------------------------------------------------------

    def lift(self, order: int) -> "Cyclotomic":
        """Embed into Q(zeta_order) via z_N = z_M^(M/N); requires N | M."""
        if order == self._order:
            return self
        if order % self._order:
            raise ValueError(f"cannot embed order {self._order} into order {order}")
        step = order // self._order
        return Cyclotomic._raw(
            order, _reduce_dense(order, {i * step: c for i, c in enumerate(self._coeffs) if c})
        )

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def is_rational(self) -> bool:
        return not any(self._coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self._coeffs[0]

    def galois(self, t: int) -> "Cyclotomic":
        """Apply the automorphism z -> z^t (t coprime to the order)."""
        if gcd(t, self._order) != 1:
            raise ValueError(f"exponent {t} is not a unit mod {self._order}")
        return Cyclotomic._raw(
            self._order,
            _reduce_dense(self._order, {i * t: c for i, c in enumerate(self._coeffs) if c}),
        )

    def conjugate(self) -> "Cyclotomic":
        return self.galois(-1)

    def reduce_order(self) -> "Cyclotomic":
        """Rewrite at the smallest order M | N whose field contains self."""
        n = self._order
        for m in divisors(n):
            if m == n:
                return self
            # fixed by Gal(Q(z_n)/Q(z_m)) <=> lies in Q(z_m)
            units = [t for t in range(1, n) if gcd(t, n) == 1 and t % m == 1 % m]
            if all(self.galois(t) == self for t in units):
                return self._express_at(m)
        return self  # pragma: no cover

    def _express_at(self, m: int) -> "Cyclotomic":
        k = totient(m)
        basis = [Cyclotomic.from_exponents(m, {j: 1}).lift(self._order)._coeffs for j in range(k)]
        # solve sum_j y_j basis[j] = self by elimination on the transposed system
        rows = [[basis[j][i] for j in range(k)] + [self._coeffs[i]] for i in range(len(self._coeffs))]
        piv_row = 0
        pivots = []
        for col in range(k):
            sel = next((r for r in range(piv_row, len(rows)) if rows[r][col] != 0), None)
            if sel is None:
                continue
            rows[piv_row], rows[sel] = rows[sel], rows[piv_row]
            p = rows[piv_row][col]
            rows[piv_row] = [v / p for v in rows[piv_row]]
            for r in range(len(rows)):
                if r != piv_row and rows[r][col] != 0:
                    f = rows[r][col]
                    rows[r] = [a - f * b for a, b in zip(rows[r], rows[piv_row])]
            pivots.append(col)
            piv_row += 1
        sol = [Fraction(0)] * k
        for r, col in enumerate(pivots):
            sol[col] = rows[r][-1]
        return Cyclotomic._raw(m, tuple(sol))

    # -- arithmetic ---------------------------------------------------------

    def _common(self, other) -> tuple["Cyclotomic", "Cyclotomic"]:
        other = as_cyclotomic(other)
        if other._order == self._order:
            return self, other
        m = lcm(self._order, other._order)
        return self.lift(m), other.lift(m)

    def __add__(self, other):
        try:
            a, b = self._common(other)
        except TypeError:
            return NotImplemented
        return Cyclotomic._raw(a._order, tuple(x + y for x, y in zip(a._coeffs, b._coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self._order, tuple(-x for x in self._coeffs))

    def __sub__(self, other):
        try:
            a, b = self._common(other)
        except TypeError:
            return NotImplemented
        return Cyclotomic._raw(a._order, tuple(x - y for x, y in zip(a._coeffs, b._coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic._raw(self._order, tuple(x * other for x in self._coeffs))
        try:
            a, b = self._common(other)
        except TypeError:
            return NotImplemented
        if b.is_rational():
            c = b._coeffs[0]
            return Cyclotomic._raw(a._order, tuple(x * c for x in a._coeffs))
        if a.is_rational():
            c = a._coeffs[0]
            return Cyclotomic._raw(a._order, tuple(x * c for x in b._coeffs))
        # integer convolution over a common denominator, then one reduction
        xa, da = _scaled(a._coeffs)
        xb, db = _scaled(b._coeffs)
        n = a._order
        table = _power_table(n)
        deg = len(xa)
        acc = [0] * deg
        for i, x in enumerate(xa):
            if x:
                for j, y in enumerate(xb):
                    if y:
                        k = i + j
                        if k < deg:
                            acc[k] += x * y
                        else:
                            xy = x * y
                            for t, c in enumerate(table[k % n]):
                                if c:
                                    acc[t] += xy * c
        den = da * db
        return Cyclotomic._raw(n, tuple(Fraction(v, den) for v in acc))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        """Multiplicative inverse via the extended Euclidean algorithm mod Phi_N."""
        if self.is_zero():
            raise CyclotomicZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return Cyclotomic._raw(self._order, (1 / self._coeffs[0],) + self._coeffs[1:])
        phi = [Fraction(c) for c in cyclotomic_poly(self._order)]
        # invariant: s * a == r (mod Phi_N)
        r0, r1 = phi, _trim(list(self._coeffs))
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        c = r1[0]
        return Cyclotomic(self._order, [x / c for x in s1])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise CyclotomicZeroDivisionError("division by zero")
            return Cyclotomic._raw(self._order, tuple(x / other for x in self._coeffs))
        try:
            other = as_cyclotomic(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return as_cyclotomic(other) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        acc = Cyclotomic._raw(self._order, _reduce_dense(self._order, {0: Fraction(1)}))
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def __eq__(self, other):
        try:
            a, b = self._common(other)
        except TypeError:
            return NotImplemented
        return a._coeffs == b._coeffs

    def __hash__(self):
        # normalized trace is invariant under the embeddings Q(z_N) -> Q(z_M)
        if self.is_rational():
            return hash(self._coeffs[0])
        return hash(sum(c * w for c, w in zip(self._coeffs, _trace_weights(self._order))))

    def __bool__(self):
        return not self.is_zero()

    def __complex__(self):
        import cmath

        z = cmath.exp(2j * cmath.pi / self._order)
        return sum(complex(float(c)) * z**i for i, c in enumerate(self._coeffs))

    def __str__(self):
        terms = []
        for i in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[i]
            if not c:
                continue
            if i == 0:
                body = str(abs(c))
            else:
                mono = f"z{self._order}" + (f"^{i}" if i > 1 else "")
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Cyclotomic({str(self)!r})" if self._order == 1 else f"Cyclotomic({str(self)!r}, order={self._order})"


def as_cyclotomic(value: Scalar) -> Cyclotomic:
    if isinstance(value, Cyclotomic):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return Cyclotomic._raw(1, (Fraction(value),))
    raise TypeError(f"cannot coerce {type(value).__name__} to Cyclotomic")


def root_of_unity(n: int, k: int = 1) -> Cyclotomic:
    """``zeta_n^k`` in canonical form at order n."""
    if n < 1:
        raise ValueError(f"root of unity order must be positive, got {n}")
    return Cyclotomic.from_exponents(n, {k % n: 1})


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<z>z(?P<ord>\d+))|(?P<op>[-+*^()]))"
)


def parse_cyclotomic(text: str) -> Cyclotomic:
    """Parse the ``1/3*z12^5 - 2`` grammar (sums of rational multiples of powers of ``z<N>``).

    Parenthesised sub-expressions are accepted as factors, so output of
    :class:`~orbihrr.rings.SectorClass` coefficients parses too.
    """
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"unexpected character in cyclotomic literal {text!r} at {pos}")
        pos = m.end()
        if m.group("num"):
            tokens.append(("num", Fraction(m.group("num"))))
        elif m.group("z"):
            tokens.append(("z", int(m.group("ord"))))
        elif m.group("op"):
            tokens.append((m.group("op"), None))
    if not tokens:
        raise ValueError("empty cyclotomic literal")
    value, i = _parse_sum(tokens, 0)
    if i != len(tokens):
        raise ValueError(f"trailing input in cyclotomic literal {text!r}")
    return value


def _parse_sum(tokens, i):
    sign = 1
    if i < len(tokens) and tokens[i][0] in "+-":
        sign = -1 if tokens[i][0] == "-" else 1
        i += 1
    value, i = _parse_product(tokens, i)
    value = value * sign
    while i < len(tokens) and tokens[i][0] in "+-":
        sign = -1 if tokens[i][0] == "-" else 1
        term, i = _parse_product(tokens, i + 1)
        value = value + term * sign
    return value, i


def _parse_product(tokens, i):
    value, i = _parse_power(tokens, i)
    while i < len(tokens) and tokens[i][0] == "*":
        factor, i = _parse_power(tokens, i + 1)
        value = value * factor
    return value, i


def _parse_power(tokens, i):
    if i >= len(tokens):
        raise ValueError("unexpected end of cyclotomic literal")
    kind, payload = tokens[i]
    if kind == "num":
        base, i = as_cyclotomic(payload), i + 1
    elif kind == "z":
        if payload < 1:
            raise ValueError("z0 is not a root of unity")
        base, i = root_of_unity(payload, 1), i + 1
    elif kind == "(":
        base, i = _parse_sum(tokens, i + 1)
        if i >= len(tokens) or tokens[i][0] != ")":
            raise ValueError("unbalanced parenthesis in cyclotomic literal")
        i += 1
    else:
        raise ValueError(f"unexpected token {kind!r} in cyclotomic literal")
    if i < len(tokens) and tokens[i][0] == "^":
        i += 1
        neg = False
        if i < len(tokens) and tokens[i][0] == "-":
            neg, i = True, i + 1
        if i >= len(tokens) or tokens[i][0] != "num" or tokens[i][1].denominator != 1:
            raise ValueError("exponent must be an integer")
        exp = int(tokens[i][1])
        base = base ** (-exp if neg else exp)
        i += 1
    return as_cyclotomic(base), i
