"""Command-line front end: ``orbihrr <group> <command> [options]``.

Every numeric value is printed as an exact string.  Exit status is 0 when all
checks in the report pass, 1 when a mathematical check fails, and 2 on usage
errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from . import acceptance
from .arith import Cyclotomic, parse_cyclotomic
from .groups import character_of, hom_fixed_dim_oracle, load_group, load_representation, trivial_rep
from .inertia import InertiaClass
from .mukai import euler_pairing, mukai_pairing, mukai_vector, verify_isometry
from .rings import KClass, SectorClass
from .stack_bg import BGInertia, CyclicBGModel, bg_euler_char, bg_euler_pairing, dft, idft, parseval_check
from .stack_wps import WPSModel, monomial_count_oracle


@dataclass
class Report:
    command: str
    inputs: dict[str, Any]
    results: dict[str, Any] = field(default_factory=dict)
    rows: list[dict[str, Any]] = field(default_factory=list)
    checks: list[dict[str, Any]] = field(default_factory=list)
    elapsed: float = 0.0

    def check(self, name: str, expected: Any, computed: Any) -> bool:
        ok = expected == computed
        self.checks.append({"name": name, "expected": expected, "computed": computed, "pass": ok})
        return ok

    @property
    def ok(self) -> bool:
        return all(c["pass"] for c in self.checks)

    def as_dict(self, approx: bool = False) -> dict[str, Any]:
        out: dict[str, Any] = {"command": self.command, "inputs": exact(self.inputs)}
        out.update(exact(self.results))
        if self.rows:
            out["rows"] = exact(self.rows)
        if self.checks:
            out["checks"] = exact(self.checks)
        out["ok"] = self.ok
        out["elapsed"] = f"{self.elapsed:.4f}s"
        if approx:
            out["approx"] = approximate({"results": self.results, "rows": self.rows})
        return out


def exact(value: Any) -> Any:
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, (Cyclotomic, Fraction, SectorClass, KClass, int)):
        return str(value)
    if isinstance(value, InertiaClass):
        return [str(c) for c in value]
    if isinstance(value, dict):
        return {str(k): exact(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [exact(v) for v in value]
    return value


def approximate(value: Any) -> Any:
    """Float renderings, for eyeballing only."""
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    if isinstance(value, Fraction):
        return repr(float(value))
    if isinstance(value, Cyclotomic):
        z = complex(value)
        return repr(z.real) if abs(z.imag) < 1e-12 else repr(z)
    if isinstance(value, SectorClass):
        return [approximate(c) for c in value.coeffs]
    if isinstance(value, InertiaClass):
        return [approximate(c) for c in value]
    if isinstance(value, dict):
        return {str(k): approximate(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [approximate(v) for v in value]
    return str(value)


def render(report: Report, fmt: str, approx: bool) -> str:
    data = report.as_dict(approx)
    if fmt == "json":
        return json.dumps(data, indent=2)
    if fmt == "csv":
        rows = data.get("rows") or data.get("checks") or [
            {k: v for k, v in data.items() if not isinstance(v, (dict, list))}
        ]
        keys: list[str] = []
        for r in rows:
            keys += [k for k in r if k not in keys]
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=keys, lineterminator="\r\n")
        writer.writeheader()
        for r in rows:
            writer.writerow({k: json.dumps(v) if isinstance(v, (dict, list)) else v for k, v in r.items()})
        return buf.getvalue().rstrip("\r\n")
    lines = []
    for k, v in data.items():
        if isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{k}:")
            lines += ["  " + ", ".join(f"{a}={b}" for a, b in item.items()) for item in v]
        else:
            lines.append(f"{k}: {v}")
    return "\n".join(lines)


# -- argument helpers ------------------------------------------------------------------


def int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def cyclo_list(text: str) -> list[Cyclotomic]:
    try:
        return [parse_cyclotomic(t) for t in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _kclass(model: WPSModel, text: str) -> KClass:
    return model.ring.parse(text)


# -- wps --------------------------------------------------------------------------------


def cmd_wps_inertia(args, report: Report) -> None:
    model = WPSModel(args.weights)
    report.rows = [
        {
            "sector": s.label,
            "g": s.g,
            "dim": s.dim,
            "fixed": list(s.fixed),
            "normal_weights": list(s.normal_weights),
            "volume_factor": s.volume_factor,
        }
        for s in model.wsectors
    ]
    report.results["sector_count"] = len(model.sectors)


def cmd_wps_chi(args, report: Report) -> None:
    model = WPSModel(args.weights)
    x = model.ring.monomial(args.d) if args.cls is None else _kclass(model, args.cls)
    parts = model.hrr_contributions(x)
    report.results["class"] = x
    report.results["chi"] = model.euler_char(x)
    report.results["sectors"] = {s.label: p for s, p in zip(model.sectors, parts)}
    if args.cls is None and args.d >= 0:
        report.check("monomial_count_oracle", monomial_count_oracle(args.weights, args.d), report.results["chi"])


def _chi_row(weights: tuple[int, ...], d: int) -> dict[str, Any]:
    model = WPSModel(weights)
    chi = model.euler_char(model.ring.monomial(d))
    oracle = monomial_count_oracle(weights, d)
    return {"d": d, "chi": chi, "oracle": oracle, "pass": chi == oracle}


def cmd_wps_hrr_verify(args, report: Report) -> None:
    weights = tuple(args.weights)
    ds = list(range(args.dmin, args.dmax + 1))
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            rows = list(pool.map(_chi_row, [weights] * len(ds), ds))
    else:
        model = WPSModel(weights)
        rows = []
        for d in ds:
            chi = model.euler_char(model.ring.monomial(d))
            oracle = monomial_count_oracle(weights, d)
            rows.append({"d": d, "chi": chi, "oracle": oracle, "pass": chi == oracle})
    report.rows = sorted(rows, key=lambda r: r["d"])
    for r in report.rows:
        report.check(f"O({r['d']})", r["oracle"], r["chi"])


def cmd_wps_kring(args, report: Report) -> None:
    ring = WPSModel(args.weights).ring
    report.results["relation"] = str(ring.relation)
    report.results["presentation"] = ring.presentation()
    report.results["rank"] = ring.degree


def cmd_wps_orbtd(args, report: Report) -> None:
    model = WPSModel(args.weights)
    report.rows = [
        {"sector": s.label, "dim": s.dim, "td": t, "e_rho": e, "orbtd": o}
        for s, t, e, o in zip(model.sectors, model.td, model.e_rho, model.orbtd())
    ]


# -- bg ---------------------------------------------------------------------------------


def _group_and_reps(args):
    group = load_group(args.group)
    reps = [load_representation(group, path) for path in args.rep]
    return group, reps


def cmd_bg_euler_char(args, report: Report) -> None:
    group, reps = _group_and_reps(args)
    for rep in reps:
        chi = bg_euler_char(rep)
        report.rows.append({"rep": rep.name, "chi": chi})
        report.check(f"dim Hom(1, {rep.name})^G", hom_fixed_dim_oracle(trivial_rep(group), rep), chi)


def cmd_bg_pairing(args, report: Report) -> None:
    group, reps = _group_and_reps(args)
    if len(reps) != 2:
        raise SystemExit("bg pairing needs exactly two --rep files")
    a, b = reps
    value = bg_euler_pairing(a, b)
    report.results["pairing"] = value
    report.check("hom_fixed_dim_oracle", hom_fixed_dim_oracle(a, b), value)


def cmd_bg_orbch(args, report: Report) -> None:
    group, reps = _group_and_reps(args)
    model = BGInertia(group)
    for rep in reps:
        chi = character_of(rep).values
        report.rows.append({"rep": rep.name, **{s.label: v for s, v in zip(model.sectors, chi)}})
    report.results["centralizer_orders"] = {s.label: 1 / s.weight for s in model.sectors}


def cmd_bg_orthogonality(args, report: Report) -> None:
    group, reps = _group_and_reps(args)
    model = BGInertia(group)
    for a in reps:
        for b in reps:
            value = bg_euler_pairing(a, b, model)
            oracle = hom_fixed_dim_oracle(a, b)
            report.rows.append({"a": a.name, "b": b.name, "pairing": value, "oracle": oracle})
            report.check(f"({a.name}, {b.name})", oracle, value)


# -- dft ----------------------------------------------------------------------------------


def cmd_dft(args, report: Report) -> None:
    inverse = getattr(args, "inverse", False) or args.command == "idft"
    values = (idft if inverse else dft)(args.n, args.coeffs)
    report.results["transform"] = "idft" if inverse else "dft"
    report.results["values"] = values
    report.rows = [{"k": k, "value": v} for k, v in enumerate(values)]


def cmd_parseval(args, report: Report) -> None:
    res = parseval_check(args.n, args.f, args.g)
    report.results["lhs"] = res.lhs
    report.results["rhs"] = res.rhs
    report.check("parseval", res.lhs, res.rhs)


# -- mukai --------------------------------------------------------------------------------


def _mukai_model_and_pairs(args):
    if args.model == "wps":
        if not args.weights:
            raise SystemExit("--model wps needs --weights")
        model = WPSModel(args.weights)
        if args.x is not None:
            items = [(args.x, _kclass(model, args.x)), (args.y or args.x, _kclass(model, args.y or args.x))]
            return model, [(items[0], items[1])]
        basis = [(f"x^{i}", model.ring.monomial(i)) for i in range(args.xmax + 1)]
        return model, [(a, b) for a in basis for b in basis]
    if args.model == "bg":
        if not args.group:
            raise SystemExit("--model bg needs --group")
        group, reps = _group_and_reps(args)
        named = [(r.name, r) for r in reps]
        if args.command == "pairing":
            if len(named) != 2:
                raise SystemExit("mukai pairing --model bg needs exactly two --rep files")
            return BGInertia(group), [(named[0], named[1])]
        return BGInertia(group), [(a, b) for a in named for b in named]
    model = CyclicBGModel(args.n)
    rng = random.Random(args.seed)
    pairs = []
    for _ in range(args.trials):
        f = [rng.randint(-9, 9) for _ in range(args.n)]
        g = [rng.randint(-9, 9) for _ in range(args.n)]
        pairs.append(((str(f), model.element(f)), (str(g), model.element(g))))
    return model, pairs


def cmd_mukai(args, report: Report) -> None:
    model, pairs = _mukai_model_and_pairs(args)
    for (na, a), (nb, b) in pairs:
        res = verify_isometry(model, a, b)
        report.rows.append({"x": na, "y": nb, "lhs": res.lhs, "rhs": res.rhs, "pass": res.ok})
        report.check(f"chi({na}, {nb})", res.lhs, res.rhs)
    if args.command == "pairing" and pairs:
        (na, a), (nb, b) = pairs[0]
        report.results["mukai_vector_x"] = mukai_vector(model, a)
        report.results["mukai_vector_y"] = mukai_vector(model, b)
        report.results["mukai_pairing"] = mukai_pairing(model, mukai_vector(model, a), mukai_vector(model, b))
        report.results["euler_pairing"] = euler_pairing(model, a, b)


def cmd_selftest(args, report: Report) -> None:
    for res in acceptance.run_all():
        report.rows.append({"criterion": res.number, "name": res.name, "checks": res.checks, "pass": res.passed,
                            "detail": res.detail})
        report.check(f"criterion {res.number}", True, res.passed)
        if not res.passed:
            report.results.setdefault("failures", {})[str(res.number)] = res.failures


# -- parser ----------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--approx", action="store_true", help="append float renderings (diagnostic only)")

    parser = argparse.ArgumentParser(prog="orbihrr", description="Exact orbifold Riemann-Roch computations.")
    top = parser.add_subparsers(dest="area", required=True)

    wps = top.add_parser("wps", help="weighted projective stacks").add_subparsers(dest="command", required=True)
    for name, func, helptext in (
        ("inertia", cmd_wps_inertia, "list inertia sectors"),
        ("chi", cmd_wps_chi, "Euler characteristic by orbifold HRR"),
        ("hrr-verify", cmd_wps_hrr_verify, "compare HRR with monomial counts"),
        ("kring", cmd_wps_kring, "Grothendieck ring presentation"),
        ("orbtd", cmd_wps_orbtd, "orbifold Todd class per sector"),
    ):
        p = wps.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--weights", type=int_list, required=True)
        p.set_defaults(func=func)
        if name == "chi":
            p.add_argument("--d", type=int, default=0, help="line bundle O(d)")
            p.add_argument("--class", dest="cls", help="K-class as a Laurent polynomial in x")
        if name == "hrr-verify":
            p.add_argument("--dmin", type=int, default=0)
            p.add_argument("--dmax", type=int, default=40)
            p.add_argument("--jobs", type=int, default=1)

    bg = top.add_parser("bg", help="classifying stacks of finite groups").add_subparsers(dest="command", required=True)
    for name, func in (
        ("euler-char", cmd_bg_euler_char),
        ("pairing", cmd_bg_pairing),
        ("orbch", cmd_bg_orbch),
        ("verify-orthogonality", cmd_bg_orthogonality),
    ):
        p = bg.add_parser(name, parents=[common])
        p.add_argument("--group", required=True, help="group JSON file")
        p.add_argument("--rep", action="append", required=True, help="representation JSON file (repeatable)")
        p.set_defaults(func=func)

    for name in ("dft", "idft"):
        p = top.add_parser(name, parents=[common], help=f"{'inverse ' if name == 'idft' else ''}discrete Fourier transform")
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--coeffs", type=cyclo_list, required=True)
        if name == "dft":
            p.add_argument("--inverse", action="store_true")
        p.set_defaults(func=cmd_dft, command=name)

    p = top.add_parser("parseval", parents=[common], help="Parseval identity for B mu_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--f", type=int_list, required=True)
    p.add_argument("--g", type=int_list, required=True)
    p.set_defaults(func=cmd_parseval, command="parseval")

    mk = top.add_parser("mukai", help="orbifold Mukai pairing").add_subparsers(dest="command", required=True)
    for name in ("verify", "pairing"):
        p = mk.add_parser(name, parents=[common])
        p.add_argument("--model", choices=("wps", "bg", "bmu"), required=True)
        p.add_argument("--weights", type=int_list)
        p.add_argument("--xmax", type=int, default=4)
        p.add_argument("--x", help="K-class (wps)")
        p.add_argument("--y", help="K-class (wps)")
        p.add_argument("--group")
        p.add_argument("--rep", action="append", default=[])
        p.add_argument("--n", type=int, default=4)
        p.add_argument("--trials", type=int, default=10)
        p.add_argument("--seed", type=int, default=0)
        p.set_defaults(func=cmd_mukai)

    p = top.add_parser("selftest", parents=[common], help="run every acceptance criterion")
    p.set_defaults(func=cmd_selftest, command="selftest")
    return parser


def _validate(args, parser) -> None:
    if getattr(args, "n", 1) is not None and getattr(args, "n", 1) < 1:
        parser.error("--n must be positive")
    if args.func is cmd_dft and len(args.coeffs) != args.n:
        parser.error(f"--coeffs has {len(args.coeffs)} entries, expected {args.n}")
    if args.func is cmd_parseval and (len(args.f) != args.n or len(args.g) != args.n):
        parser.error(f"--f and --g need {args.n} entries")
    weights = getattr(args, "weights", None)
    if weights is not None and (not weights or min(weights) < 1):
        parser.error("--weights must be positive integers")


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(args, parser)
    echo = " ".join([args.area] + ([args.command] if args.command != args.area else []))
    inputs = {k: v for k, v in vars(args).items() if k not in ("func", "area", "command", "format", "approx")}
    report = Report(echo, inputs)
    start = time.perf_counter()
    try:
        args.func(args, report)
    except (OSError, ValueError, KeyError, ArithmeticError) as exc:
        # bad input files, oversized groups, inconsistent representations
        print(f"orbihrr: error: {exc}", file=sys.stderr)
        return 2
    report.elapsed = time.perf_counter() - start
    print(render(report, args.format, args.approx), file=out)
    if not report.ok:
        for c in report.checks:
            if not c["pass"]:
                print(f"MISMATCH {c['name']}: expected {exact(c['expected'])}, computed {exact(c['computed'])}",
                      file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
