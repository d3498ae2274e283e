"""Exit-criteria checks, shared by ``orbihrr selftest`` and the test-suite.

Every check is exact; each returns a :class:`CriterionResult` rather than
raising so that a full report can be printed.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import linalg
from .arith import Cyclotomic, as_cyclotomic, lcm, root_of_unity
from .groups import (
    hom_fixed_dim_oracle,
    s3_standard_rep,
    sign_rep,
    symmetric_group,
    trivial_rep,
)
from .mukai import verify_isometry
from .rings import KRing, NotInvertibleError, SectorClass, k_euler_class
from .stack_bg import BGInertia, bg_euler_char, bg_euler_pairing, dft, idft, parseval_check
from .stack_wps import WPSModel, monomial_count_oracle, wps_euler_char


@dataclass(frozen=True)
class AcceptanceConfig:
    sweep_weights: tuple[tuple[int, ...], ...] = ((1, 1), (2, 3), (1, 2), (2, 2), (1, 1, 1), (1, 2, 3), (3, 4, 5))
    dmax: int = 40
    sweep_seconds: float = 5.0
    bg_seconds: float = 1.0
    dft_max_n: int = 12
    dft_trials: int = 20
    parseval_ns: tuple[int, ...] = (2, 3, 4, 6, 8)
    parseval_trials: int = 50
    isometry_random_pairs: int = 50
    property_cases: int = 100
    seed: int = 20240101


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    checks: int
    detail: str = ""
    failures: list[str] = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" - {self.detail}" if self.detail else ""
        return f"[{status}] criterion {self.number}: {self.name} ({self.checks} checks){extra}"


def _result(number, name, failures, checks, detail=""):
    return CriterionResult(number, name, not failures, checks, detail, failures[:20])


def hrr_sweep(cfg: AcceptanceConfig = AcceptanceConfig()) -> CriterionResult:
    start = time.perf_counter()
    failures, checks = [], 0
    for w in cfg.sweep_weights:
        model = WPSModel(w)
        for d in range(cfg.dmax + 1):
            chi, oracle = wps_euler_char(model, d), monomial_count_oracle(w, d)
            checks += 1
            if chi != oracle:
                failures.append(f"P{w} O({d}): HRR {chi} != oracle {oracle}")
    elapsed = time.perf_counter() - start
    if elapsed >= cfg.sweep_seconds:
        failures.append(f"sweep took {elapsed:.2f}s >= {cfg.sweep_seconds}s")
    if checks < 287:
        failures.append(f"only {checks} equalities checked")
    return _result(1, "HRR vs weighted-monomial oracle", failures, checks, f"{elapsed:.2f}s")


def p23_sector_ledger(cfg: AcceptanceConfig = AcceptanceConfig()) -> CriterionResult:
    model = WPSModel((2, 3))
    parts = dict(zip((s.label for s in model.sectors), model.hrr_contributions(model.ring.one())))
    got = {
        "distinguished": parts["g=1"],
        "g=-1": parts["g=-1"],
        "mu3": parts["g=z3"] + parts["g=z3^2"],
    }
    want = {"distinguished": Fraction(5, 12), "g=-1": Fraction(1, 4), "mu3": Fraction(1, 3)}
    failures = [f"{k}: {got[k]} != {v}" for k, v in want.items() if got[k] != v]
    total = sum(parts.values(), as_cyclotomic(0))
    if total != 1:
        failures.append(f"total {total} != 1")
    return _result(2, "P(2,3) sector ledger 5/12 + 1/4 + 1/3 = 1", failures, 4)


def p23_inertia(cfg: AcceptanceConfig = AcceptanceConfig()) -> CriterionResult:
    model = WPSModel((2, 3))
    failures = []
    labels = [s.label for s in model.sectors]
    dims = [s.dim for s in model.sectors]
    if labels != ["g=1", "g=-1", "g=z3", "g=z3^2"]:
        failures.append(f"labels {labels}")
    if dims != [1, 0, 0, 0]:
        failures.append(f"dims {dims}")
    gs = [s.g for s in model.wsectors]
    if len(gs) == 4:
        # g2, g3 = (-1 +- sqrt(-3))/2: roots of g^2 + g + 1, conjugate to each other
        if gs[0] != 1 or gs[1] != -1:
            failures.append(f"g0, g1 = {gs[0]}, {gs[1]}")
        for g in gs[2:]:
            if g * g + g + 1 != 0:
                failures.append(f"{g} is not a primitive cube root of unity")
        if gs[2].conjugate() != gs[3]:
            failures.append("mu_3 sectors are not complex conjugate")
    return _result(3, "inertia decomposition of P(2,3)", failures, 4)


def _random_signed_sum(rng: random.Random) -> list[tuple[int, int]]:
    # positive line classes plus cancelling +/- pairs, so e^K is defined
    terms = [(1, rng.randint(-5, 5)) for _ in range(rng.randint(0, 3))]
    for _ in range(rng.randint(0, 2)):
        b = rng.randint(-5, 5)
        terms += [(1, b), (-1, b)]
    rng.shuffle(terms)
    return terms


def kring_presentation(cfg: AcceptanceConfig = AcceptanceConfig()) -> CriterionResult:
    rng = random.Random(cfg.seed)
    failures, checks = [], 0
    ring = KRing((2, 3))
    expected = ring.parse("x^5 - x^3 - x^2 + 1")
    checks += 1
    if ring.relation != (ring.parse("x^2 - 1").rep * ring.parse("x^3 - 1").rep):
        failures.append(f"relation {ring.relation}")
    if ring.element(ring.relation) != 0 or expected != 0:
        failures.append("relation does not vanish in the quotient")
    checks += 1
    if k_euler_class(ring, [2, 3]) != 0:
        failures.append("(1 - x^-2)(1 - x^-3) != 0 in K(P(2,3))")
    checks += 1
    if k_euler_class(ring, [0]) != 0:
        failures.append("e^K(1) != 0")
    for r in (KRing.free(), ring):
        for _ in range(cfg.property_cases):
            u, v = _random_signed_sum(rng), _random_signed_sum(rng)
            checks += 1
            try:
                lhs = k_euler_class(r, u + v)
                rhs = k_euler_class(r, u) * k_euler_class(r, v)
            except NotInvertibleError as exc:
                failures.append(f"{u} + {v}: {exc}")
                continue
            if lhs != rhs:
                failures.append(f"e^K({u} + {v}) = {lhs} != {rhs}")
    return _result(4, "K-ring presentation and e^K multiplicativity", failures, checks)


def bg_suite(cfg: AcceptanceConfig = AcceptanceConfig()) -> CriterionResult:
    start = time.perf_counter()
    G = symmetric_group(3)
    model = BGInertia(G)
    pool = [trivial_rep(G), sign_rep(G), s3_standard_rep(G)]
    failures, checks = [], 0
    for i, a in enumerate(pool):
        for j, b in enumerate(pool):
            checks += 1
            pairing, oracle = bg_euler_pairing(a, b, model), hom_fixed_dim_oracle(a, b)
            if pairing != oracle:
                failures.append(f"({a.name}, {b.name}): pairing {pairing} != oracle {oracle}")
            if pairing != (1 if i == j else 0):
                failures.append(f"Gram[{i}][{j}] = {pairing}")
    checks += 1
    if bg_euler_char(pool[2], model) != 0:
        failures.append("chi(BS3, std) != 0")
    elapsed = time.perf_counter() - start
    if elapsed >= cfg.bg_seconds:
        failures.append(f"BG suite took {elapsed:.2f}s >= {cfg.bg_seconds}s")
    return _result(5, "BS3 pairing vs Hom-projector oracle", failures, checks, f"{elapsed:.3f}s")


def dft_parseval(cfg: AcceptanceConfig = AcceptanceConfig()) -> CriterionResult:
    rng = random.Random(cfg.seed + 6)
    failures, checks = [], 0
    for n in range(1, cfg.dft_max_n + 1):
        for _ in range(cfg.dft_trials):
            f = [rng.randint(-9, 9) for _ in range(n)]
            checks += 1
            if dft(n, idft(n, f)) != [as_cyclotomic(v) for v in f]:
                failures.append(f"dft(idft({f})) != f")
    for n in cfg.parseval_ns:
        for _ in range(cfg.parseval_trials):
            f = [rng.randint(-9, 9) for _ in range(n)]
            g = [rng.randint(-9, 9) for _ in range(n)]
            checks += 1
            res = parseval_check(n, f, g)
            if not res.ok:
                failures.append(f"n={n} f={f} g={g}: {res.lhs} != {res.rhs}")
    return _result(6, "DFT round trip and Parseval", failures, checks)


def isometry(cfg: AcceptanceConfig = AcceptanceConfig()) -> CriterionResult:
    rng = random.Random(cfg.seed + 7)
    failures, checks = [], 0
    p23 = WPSModel((2, 3))
    basis = [p23.ring.monomial(i) for i in range(5)]
    for i, x in enumerate(basis):
        for j, y in enumerate(basis):
            checks += 1
            res = verify_isometry(p23, x, y)
            if not res.ok:
                failures.append(f"P(2,3) (x^{i}, x^{j}): {res.lhs} != {res.rhs}")
    G = symmetric_group(3)
    bg = BGInertia(G)
    pool = [trivial_rep(G), sign_rep(G), s3_standard_rep(G)]
    for a in pool:
        for b in pool:
            checks += 1
            res = verify_isometry(bg, a, b)
            if not res.ok:
                failures.append(f"BS3 ({a.name}, {b.name}): {res.lhs} != {res.rhs}")
    p123 = WPSModel((1, 2, 3))
    for _ in range(cfg.isometry_random_pairs):
        x, y = (
            p123.ring.element({rng.randint(-8, 8): rng.randint(-4, 4) for _ in range(rng.randint(1, 4))})
            for _ in range(2)
        )
        checks += 1
        res = verify_isometry(p123, x, y)
        if not res.ok:
            failures.append(f"P(1,2,3) ({x}, {y}): {res.lhs} != {res.rhs}")
    return _result(7, "Euler pairing = Mukai pairing of Mukai vectors", failures, checks)


def rank_witnesses(cfg: AcceptanceConfig = AcceptanceConfig()) -> CriterionResult:
    failures = []
    p23 = WPSModel((2, 3))
    r = linalg.rank([p23.orbch(p23.ring.monomial(i)).flatten() for i in range(5)])
    if r != 5:
        failures.append(f"rank on P(2,3) is {r}, expected 5")
    G = symmetric_group(3)
    bg = BGInertia(G)
    r = linalg.rank([bg.orbch(rep).flatten() for rep in (trivial_rep(G), sign_rep(G), s3_standard_rep(G))])
    if r != 3:
        failures.append(f"rank on BS3 is {r}, expected 3")
    return _result(8, "orbch of a K-basis has full rank", failures, 2)


def _random_cyclotomic(rng: random.Random, orders=(1, 2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60)) -> Cyclotomic:
    n = rng.choice(orders)
    return Cyclotomic.from_exponents(n, {rng.randrange(n): Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(3)})


def _random_series(rng: random.Random, dim: int, unit: bool = False) -> SectorClass:
    coeffs = [_random_cyclotomic(rng) for _ in range(dim + 1)]
    if unit:
        coeffs[0] = 1
    return SectorClass(dim, coeffs)


def property_suites(cfg: AcceptanceConfig = AcceptanceConfig()) -> CriterionResult:
    rng = random.Random(cfg.seed + 9)
    failures, checks = [], 0
    k = cfg.property_cases
    for _ in range(k):
        a, b, c = (_random_cyclotomic(rng) for _ in range(3))
        checks += 1
        ok = (a * b) * c == a * (b * c) and a * (b + c) == a * b + a * c and a + b == b + a
        if a:
            ok = ok and a * a.inverse() == 1
        if not ok:
            failures.append(f"field axioms fail for {a}, {b}, {c}")
    for n in range(2, 2 + k):
        checks += 1
        if sum((root_of_unity(n, j) for j in range(n)), as_cyclotomic(0)) != 0:
            failures.append(f"sum of {n}-th roots of unity is nonzero")
    for _ in range(k):
        dim = rng.randint(0, 4)
        a, b = _random_series(rng, dim), _random_series(rng, dim)
        checks += 1
        if a.involution().involution() != a or (a * b).involution() != a.involution() * b.involution():
            failures.append(f"involution laws fail for {a}, {b}")
    for _ in range(k):
        u = _random_series(rng, rng.randint(0, 6), unit=True)
        checks += 1
        root = u.sqrt()
        if root * root != u:
            failures.append(f"sqrt({u})^2 != {u}")
    rings = [KRing((2, 3)), KRing((1, 2, 3)), KRing((2, 2)), KRing.free()]
    for _ in range(k):
        r = rng.choice(rings)
        a, b = (
            r.element({rng.randint(-6, 6): rng.randint(-3, 3) for _ in range(rng.randint(0, 3))})
            for _ in range(2)
        )
        checks += 1
        if (a * b).dual() != a.dual() * b.dual() or (a + b).dual() != a.dual() + b.dual() or a.dual().dual() != a:
            failures.append(f"dual laws fail in {r!r} for {a}, {b}")
    return _result(9, "randomized algebraic property suites", failures, checks)


CRITERIA: tuple[Callable[[AcceptanceConfig], CriterionResult], ...] = (
    hrr_sweep,
    p23_sector_ledger,
    p23_inertia,
    kring_presentation,
    bg_suite,
    dft_parseval,
    isometry,
    rank_witnesses,
    property_suites,
)


def run_all(cfg: AcceptanceConfig = AcceptanceConfig()) -> list[CriterionResult]:
    return [criterion(cfg) for criterion in CRITERIA]
