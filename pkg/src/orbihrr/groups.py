"""Finite permutation groups, their conjugacy classes, and matrix representations.

Elements are permutations of ``range(degree)`` stored as tuples ``p`` with
``p[i]`` the image of ``i``; the product ``p * q`` applies ``q`` first.  Each
element remembers one word in the generators (found by breadth-first search),
and a representation is evaluated by multiplying generator matrices along
that word.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import linalg
from .arith import Cyclotomic, as_cyclotomic, lcm, parse_cyclotomic, root_of_unity

DEFAULT_MAX_GROUP_ORDER = 10080


class GroupTooLargeError(ValueError):
    pass


class RepresentationError(ValueError):
    """Generator matrices do not define a representation of the group."""


def max_group_order() -> int:
    return int(os.environ.get("ORBIHRR_MAX_GROUP_ORDER", DEFAULT_MAX_GROUP_ORDER))


def compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(p[i] for i in q)


def invert(p: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def permutation_sign(p: Sequence[int]) -> int:
    seen = [False] * len(p)
    sign = 1
    for start in range(len(p)):
        if seen[start]:
            continue
        length, i = 0, start
        while not seen[i]:
            seen[i] = True
            i = p[i]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def element_order(p: tuple[int, ...]) -> int:
    ident = tuple(range(len(p)))
    k, q = 1, p
    while q != ident:
        q = compose(q, p)
        k += 1
    return k


@dataclass(frozen=True)
class ConjClass:
    representative: int
    size: int
    centralizer_order: int
    representative_order: int
    members: tuple[int, ...]


class PermGroup:
    def __init__(self, degree: int, generators: Sequence[Sequence[int]], max_order: int | None = None):
        if degree < 1:
            raise ValueError(f"degree must be positive, got {degree}")
        gens = []
        for g in generators:
            g = tuple(int(i) for i in g)
            if sorted(g) != list(range(degree)):
                raise ValueError(f"{list(g)} is not a permutation of 0..{degree - 1}")
            gens.append(g)
        bound = max_group_order() if max_order is None else max_order
        self.degree = degree
        self.generators = tuple(gens)

        ident = tuple(range(degree))
        elements = [ident]
        words: list[tuple[int, ...]] = [()]
        parent: list[tuple[int, int] | None] = [None]
        index = {ident: 0}
        head = 0
        while head < len(elements):
            cur = elements[head]
            for gi, g in enumerate(gens):
                new = compose(cur, g)
                if new not in index:
                    if len(elements) >= bound:
                        raise GroupTooLargeError(f"group closure exceeds bound {bound}")
                    index[new] = len(elements)
                    elements.append(new)
                    words.append(words[head] + (gi,))
                    parent.append((head, gi))
            head += 1
        self.elements = tuple(elements)
        self.words = tuple(words)
        self.parent = tuple(parent)
        self.index = index
        self.inverse_index = tuple(index[invert(p)] for p in elements)

        class_of = [-1] * len(elements)
        classes = []
        for i, p in enumerate(elements):
            if class_of[i] >= 0:
                continue
            members = sorted({index[compose(compose(g, p), invert(g))] for g in elements})
            for m in members:
                class_of[m] = len(classes)
            centralizer = sum(1 for g in elements if compose(g, p) == compose(p, g))
            classes.append(ConjClass(i, len(members), centralizer, element_order(p), tuple(members)))
        self.classes = tuple(classes)
        self.class_of = tuple(class_of)

    @property
    def order(self) -> int:
        return len(self.elements)

    def is_abelian(self) -> bool:
        return len(self.classes) == self.order

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self.order}, classes={len(self.classes)})"


def group_from_generators(degree: int, gens: Sequence[Sequence[int]], max_order: int | None = None) -> PermGroup:
    return PermGroup(degree, gens, max_order)


def symmetric_group(n: int) -> PermGroup:
    if n == 1:
        return PermGroup(1, [])
    swap = [1, 0] + list(range(2, n))
    cycle = [(i + 1) % n for i in range(n)]
    return PermGroup(n, [swap, cycle])


def cyclic_group(n: int) -> PermGroup:
    return PermGroup(n, [[(i + 1) % n for i in range(n)]] if n > 1 else [])


class Representation:
    """``phi: G -> GL_d(Q(zeta_N))`` given by one matrix per generator.

    All element matrices are computed at construction; the object is
    immutable afterwards.
    """

    def __init__(self, group: PermGroup, cyclotomic_order: int, matrices: Sequence, dimension: int | None = None,
                 verify: bool = False, name: str | None = None):
        mats = [[[as_cyclotomic(x) for x in row] for row in m] for m in matrices]
        if len(mats) != len(group.generators):
            raise RepresentationError(f"expected {len(group.generators)} generator matrices, got {len(mats)}")
        if dimension is None:
            dimension = len(mats[0]) if mats else 1
        for m in mats:
            if len(m) != dimension or any(len(r) != dimension for r in m):
                raise RepresentationError(f"generator matrix is not {dimension}x{dimension}")
        self.group = group
        self.cyclotomic_order = cyclotomic_order
        self.dimension = dimension
        self.matrices = tuple(tuple(tuple(r) for r in m) for m in mats)
        self.name = name

        values: list = [linalg.identity(dimension)]
        for k in range(1, group.order):
            head, gi = group.parent[k]
            values.append(linalg.matmul(values[head], mats[gi]))
        self._values = tuple(values)

        ident = linalg.identity(dimension)
        for cls in group.classes:
            g = self._values[cls.representative]
            power = g
            for _ in range(cls.representative_order - 1):
                power = linalg.matmul(power, g)
            if power != ident:
                raise RepresentationError(
                    f"image of class {cls.representative} does not have order dividing {cls.representative_order}"
                )
        if verify:
            self.verify_homomorphism()

    def __call__(self, element: int) -> linalg.Matrix:
        return self._values[element]

    def verify_homomorphism(self) -> None:
        """Brute-force check phi(g) phi(h) = phi(gh) over all pairs."""
        G = self.group
        for i, g in enumerate(G.elements):
            for j, h in enumerate(G.elements):
                k = G.index[compose(g, h)]
                if linalg.matmul(self._values[i], self._values[j]) != self._values[k]:
                    raise RepresentationError(f"phi(g)phi(h) != phi(gh) for elements {i}, {j}")

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"Representation{label}(dim={self.dimension}, order={self.cyclotomic_order})"


@dataclass(frozen=True)
class Character:
    group: PermGroup
    values: tuple[Cyclotomic, ...]

    def __add__(self, other: "Character") -> "Character":
        return Character(self.group, tuple(a + b for a, b in zip(self.values, other.values)))

    def __mul__(self, other: "Character") -> "Character":
        return Character(self.group, tuple(a * b for a, b in zip(self.values, other.values)))

    def __eq__(self, other):
        return isinstance(other, Character) and self.group is other.group and self.values == other.values

    def __hash__(self):
        return hash(self.values)


def _same_group(a: Representation, b: Representation) -> None:
    if a.group is not b.group:
        raise ValueError("representations live on different groups")


def character_of(rep: Representation) -> Character:
    return Character(rep.group, tuple(linalg.trace(rep(c.representative)) for c in rep.group.classes))


def rep_dual(rep: Representation) -> Representation:
    mats = [linalg.transpose(linalg.inverse([list(r) for r in m])) for m in rep.matrices]
    return Representation(rep.group, rep.cyclotomic_order, mats, rep.dimension, name=f"{rep.name}*" if rep.name else None)


def rep_dsum(a: Representation, b: Representation) -> Representation:
    _same_group(a, b)
    mats = [linalg.block_diag(ma, mb) for ma, mb in zip(a.matrices, b.matrices)]
    return Representation(a.group, lcm(a.cyclotomic_order, b.cyclotomic_order), mats, a.dimension + b.dimension)


def rep_tensor(a: Representation, b: Representation) -> Representation:
    _same_group(a, b)
    mats = [linalg.kron(ma, mb) for ma, mb in zip(a.matrices, b.matrices)]
    return Representation(a.group, lcm(a.cyclotomic_order, b.cyclotomic_order), mats, a.dimension * b.dimension)


def hom_fixed_dim_oracle(a: Representation, b: Representation) -> int:
    """``dim Hom(V, W)^G`` as the rank of the averaging projector on ``V* (x) W``."""
    _same_group(a, b)
    G = a.group
    n = a.dimension * b.dimension
    total = [[as_cyclotomic(0)] * n for _ in range(n)]
    for k in range(G.order):
        # a(g)^-1 = a(g^-1): no matrix inversion needed
        term = linalg.kron(linalg.transpose(a(G.inverse_index[k])), b(k))
        total = [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(total, term)]
    proj = [[x / G.order for x in row] for row in total]
    tr = linalg.trace(proj)
    if not tr.is_rational() or tr.to_fraction().denominator != 1 or tr.to_fraction() < 0:
        raise RepresentationError(f"projector trace {tr} is not a nonnegative integer")
    r = linalg.rank(proj)
    if r != tr.to_fraction():
        raise RepresentationError(f"projector rank {r} differs from its trace {tr}")
    return r


# -- standard representations ------------------------------------------------------


def trivial_rep(group: PermGroup) -> Representation:
    return Representation(group, 1, [[[1]] for _ in group.generators], 1, name="trivial")


def sign_rep(group: PermGroup) -> Representation:
    return Representation(group, 1, [[[permutation_sign(g)]] for g in group.generators], 1, name="sign")


def permutation_rep(group: PermGroup) -> Representation:
    n = group.degree
    mats = [[[1 if g[j] == i else 0 for j in range(n)] for i in range(n)] for g in group.generators]
    return Representation(group, 1, mats, n, name="permutation")


def linear_character_rep(group: PermGroup, order: int, exponents: Sequence[int], name: str | None = None) -> Representation:
    """One-dimensional rep sending generator i to ``zeta_order^exponents[i]``."""
    return Representation(group, order, [[[root_of_unity(order, k)]] for k in exponents], 1, name=name)


def s3_standard_rep(group: PermGroup) -> Representation:
    """The 2-dim irreducible of S3 on generators ``(0 1)``, ``(0 1 2)`` over Q(zeta_3)."""
    z = root_of_unity(3, 1)
    swap = [[0, 1], [1, 0]]
    rot = [[z, 0], [0, z * z]]
    return Representation(group, 3, [swap, rot], 2, name="std")


def regular_rep(group: PermGroup) -> Representation:
    idx = group.index
    mats = []
    for g in group.generators:
        # left multiplication h -> g h permutes the basis e_h
        m = [[0] * group.order for _ in range(group.order)]
        for j, h in enumerate(group.elements):
            m[idx[compose(g, h)]][j] = 1
        mats.append(m)
    return Representation(group, 1, mats, group.order, name="regular")


# -- JSON input ---------------------------------------------------------------------


def _load(source) -> dict:
    if isinstance(source, dict):
        return source
    return json.loads(Path(source).read_text())


def load_group(source) -> PermGroup:
    data = _load(source)
    return PermGroup(int(data["degree"]), data.get("generators", []))


def _entry(x) -> Cyclotomic:
    if isinstance(x, str):
        return parse_cyclotomic(x)
    return as_cyclotomic(Fraction(x) if not isinstance(x, int) else x)


def load_representation(group: PermGroup, source, verify: bool = True) -> Representation:
    data = _load(source)
    mats = [[[_entry(x) for x in row] for row in m] for m in data["matrices"]]
    name = data.get("name") or (Path(source).stem if not isinstance(source, dict) else None)
    return Representation(group, int(data.get("cyclotomic_order", 1)), mats, int(data["dimension"]),
                          verify=verify, name=name)


def dump_representation(rep: Representation) -> dict:
    return {
        "name": rep.name,
        "cyclotomic_order": rep.cyclotomic_order,
        "dimension": rep.dimension,
        "matrices": [[[str(x) for x in row] for row in m] for m in rep.matrices],
    }
