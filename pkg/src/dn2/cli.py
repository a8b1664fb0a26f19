"""Command-line front end: evaluate dn2, periods, lattice data, identity
sweeps, and CSV/JSONL sampling for external plotting.

Exit codes: 0 success, 1 identity/tolerance failure, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import random
import re
import sys

from . import core, identities
from .core import Modulus, PeriodMethod, Route
from .jacobi import PoleError
from .kernel import ConvergenceError, DomainError
from .weier import wp_halfperiods


def _fmt(v) -> str:
    if isinstance(v, float):
        return f"{v:.17g}"
    return str(v)


def _emit(records, fmt: str, stream) -> None:
    records = list(records)
    if not records:
        return
    if fmt == "jsonl":
        for r in records:
            stream.write(json.dumps(r) + "\n")
    elif fmt == "csv":
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(records[0].keys())
        for r in records:
            writer.writerow([_fmt(v) for v in r.values()])
    else:
        first = True
        for r in records:
            if not first:
                stream.write("\n")
            first = False
            for k, v in r.items():
                stream.write(f"{k} = {_fmt(v)}\n")


def parse_z(text: str, K: float, Kprime: float) -> complex:
    """Parse a z argument: a number like 0.3+0.4i, or symbolic K / iK' forms."""
    s = text.strip().replace(" ", "").replace("K'", "Q")
    s = re.sub(r"(?<=[0-9.])(?=[iKQ(])", "*", s)
    s = re.sub(r"(?<=[iKQ)])(?=[0-9.iKQ(])", "*", s)
    s = s.replace("i", "1j")
    try:
        value = eval(s, {"__builtins__": {}}, {"K": K, "Q": Kprime})  # noqa: S307
    except Exception as exc:
        raise DomainError(f"cannot parse z value {text!r}") from exc
    if not isinstance(value, (int, float, complex)):
        raise DomainError(f"cannot parse z value {text!r}")
    return complex(value)


def cmd_eval(args) -> int:
    mod = Modulus(args.kappa)
    pp = core.periods(mod)
    z = parse_z(args.z, pp.K, pp.Kprime)
    real = z.imag == 0.0
    zin: float | complex = z.real if real else z
    record = {"kappa": args.kappa, "z_re": z.real, "z_im": z.imag, "route": args.route}

    def one(route: Route):
        try:
            return complex(core.dn2(zin, mod, route))
        except PoleError:
            return None

    if args.route == "all":
        routes = [Route.SN, Route.WP] + ([Route.PHI] if real else [])
        vals = {r.value: one(r) for r in routes}
        for name, v in vals.items():
            record[f"dn2_{name}_re"] = "pole" if v is None else v.real
            record[f"dn2_{name}_im"] = "pole" if v is None else v.imag
        nums = [v for v in vals.values() if v is not None]
        deltas = [abs(p - q) for i, p in enumerate(nums) for q in nums[i + 1:]]
        record["delta_max"] = max(deltas) if deltas else 0.0
    else:
        v = one(Route(args.route))
        record["dn2_re"] = "pole" if v is None else v.real
        record["dn2_im"] = "pole" if v is None else v.imag
    if real:
        record["s2"] = core.s2(z.real, mod)
        record["phi"] = core.phi(z.real, mod)
    _emit([record], args.format, sys.stdout)
    return 0


def cmd_periods(args) -> int:
    mod = Modulus(args.kappa)
    record = {"kappa": args.kappa, "method": args.method}
    if args.method == "all":
        pairs = {m.value: core.periods(mod, m) for m in PeriodMethod}
        for name, p in pairs.items():
            record[f"K_{name}"] = p.K
            record[f"Kprime_{name}"] = p.Kprime
            record[f"ratio_{name}"] = p.Kprime / p.K
        ks = [p.K for p in pairs.values()]
        kps = [p.Kprime for p in pairs.values()]
        record["delta_K_max"] = max(ks) - min(ks)
        record["delta_Kprime_max"] = max(kps) - min(kps)
    else:
        p = core.periods(mod, PeriodMethod(args.method))
        record["K"] = p.K
        record["Kprime"] = p.Kprime
        record["ratio"] = p.Kprime / p.K
    _emit([record], args.format, sys.stdout)
    return 0


def cmd_lattice(args) -> int:
    mod = Modulus(args.kappa)
    lat = core.invariants_of(mod)
    hp = wp_halfperiods(lat)
    record = {
        "kappa": args.kappa,
        "g2": lat.g2,
        "g3": lat.g3,
        "delta": lat.delta,
        "e1": lat.e1,
        "e2": lat.e2,
        "e3": lat.e3,
        "k2": lat.m,
        "K": hp.K,
        "Kprime": hp.Kprime,
    }
    _emit([record], args.format, sys.stdout)
    return 0


def cmd_identities(args) -> int:
    step = args.step
    if not 0.0 < step < 0.5:
        raise DomainError(f"step must lie in (0, 0.5), got {step}")
    grid = []
    i = 1
    while i * step < 1.0 - 0.5 * step:
        grid.append(i * step)
        i += 1
    eps = args.perturb_lambda

    records = []
    worst: dict[str, dict] = {}

    def run(name: str, checker, param: float, tol_default: float):
        tol = args.tol if args.tol is not None else tol_default
        rep = checker(param, tol=tol)
        if eps is not None and name.startswith("bbg"):
            other = checker(min(param + eps, 1.0 - 1e-9), tol=tol)
            residual = rep.lhs - other.rhs
            rep = identities.ResidualReport(
                param, rep.lhs, other.rhs, residual, tol, abs(residual) <= tol
            )
        rec = {
            "identity": name,
            "parameter": rep.parameter,
            "lhs": rep.lhs,
            "rhs": rep.rhs,
            "residual": rep.residual,
            "tol": rep.tol,
            "passed": rep.passed,
        }
        records.append(rec)
        if name not in worst or abs(rec["residual"]) > abs(worst[name]["residual"]):
            worst[name] = rec

    for lam in grid:
        run("bbg_91", identities.identity_bbg_91, lam, 1e-12)
        run("bbg_92", identities.identity_bbg_92, lam, 1e-12)
    for x in grid:
        run("transform_sig4", identities.transform_signature4, x, 1e-11)
    for kappa in grid:
        tol = args.tol if args.tol is not None else 1e-12
        for label, rep in zip(
            identities.PERIOD_RELATION_LABELS, identities.period_relations(kappa, tol=tol)
        ):
            rec = {
                "identity": f"period_{label}",
                "parameter": rep.parameter,
                "lhs": rep.lhs,
                "rhs": rep.rhs,
                "residual": rep.residual,
                "tol": rep.tol,
                "passed": rep.passed,
            }
            records.append(rec)
            name = rec["identity"]
            if name not in worst or abs(rec["residual"]) > abs(worst[name]["residual"]):
                worst[name] = rec

    for name in sorted(worst):
        rec = dict(worst[name])
        rec["identity"] = f"worst:{name}"
        records.append(rec)
    _emit(records, args.format, sys.stdout)
    return 0 if all(r["passed"] for r in records) else 1


def _perimeter_point(s: float, K: float, Kprime: float) -> complex:
    # counterclockwise walk around the half-period rectangle starting at iK'
    if s <= Kprime:
        return complex(0.0, Kprime - s)
    s -= Kprime
    if s <= K:
        return complex(s, 0.0)
    s -= K
    if s <= Kprime:
        return complex(K, s)
    s -= Kprime
    return complex(K - s, Kprime)


def cmd_sample(args) -> int:
    mod = Modulus(args.kappa)
    pp = core.periods(mod)
    K, Kprime = pp.K, pp.Kprime
    n = args.n
    if n < 2:
        raise DomainError(f"need at least 2 sample points, got {n}")
    route = Route(args.route)
    if args.region != "real-axis" and route is Route.PHI:
        raise DomainError("phi route samples the real axis only")

    rows = []
    if args.region == "real-axis":
        for i in range(n):
            x = 2.0 * K * i / (n - 1)
            v = complex(core.dn2(x, mod, route))
            rows.append(
                {"z_re": x, "z_im": 0.0, "dn2_re": v.real, "dn2_im": v.imag, "route": route.value}
            )
    elif args.region == "perimeter":
        total = 2.0 * (K + Kprime)
        # keep clear of the pole vertex at iK' (start and end of the walk)
        margin = 0.01 * total
        prev = None
        for i in range(n):
            s = margin + (total - 2.0 * margin) * i / (n - 1)
            z = _perimeter_point(s, K, Kprime)
            v = complex(core.dn2(z, mod, route))
            dec = "true" if prev is None or v.real < prev else "false"
            prev = v.real
            rows.append(
                {
                    "z_re": z.real,
                    "z_im": z.imag,
                    "dn2_re": v.real,
                    "dn2_im": v.imag,
                    "route": route.value,
                    "decreasing": dec,
                }
            )
    else:
        rng = random.Random(args.seed) if args.seed is not None else None
        for i in range(n):
            for j in range(n):
                if rng is not None:
                    x = rng.uniform(0.0, 2.0 * K)
                    y = rng.uniform(0.0, 2.0 * Kprime)
                else:
                    x = 2.0 * K * j / (n - 1)
                    y = 2.0 * Kprime * i / (n - 1)
                try:
                    v = complex(core.dn2(complex(x, y), mod, route))
                    re_v, im_v = v.real, v.imag
                except PoleError:
                    re_v = im_v = "pole"
                rows.append(
                    {"z_re": x, "z_im": y, "dn2_re": re_v, "dn2_im": im_v, "route": route.value}
                )

    fmt = "jsonl" if args.format == "jsonl" else "csv"
    if args.out == "-":
        _emit(rows, fmt, sys.stdout)
    else:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            _emit(rows, fmt, fh)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dn2",
        description="Signature-four elliptic function dn2: evaluation, periods, "
        "lattice data, identity sweeps, and plot sampling.",
    )
    parser.add_argument(
        "--format", choices=("human", "csv", "jsonl"), default="human",
        help="output rendering (sample treats human as csv)",
    )
    parser.add_argument("--tol", type=float, default=None, help="override identity tolerances")
    parser.add_argument("--seed", type=int, default=None, help="seed for random grid sampling")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate dn2 (and s2, phi on the real axis)")
    p.add_argument("--kappa", type=float, required=True)
    p.add_argument("--z", required=True, help="point, e.g. 0.37, 0.3+0.4i, K, K+iK', iK'/2")
    p.add_argument("--route", choices=("sn", "wp", "phi", "all"), default="sn")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("periods", help="fundamental half-periods K, K'")
    p.add_argument("--kappa", type=float, required=True)
    p.add_argument("--method", choices=("integral", "elliptic", "hyper", "all"), default="elliptic")
    p.set_defaults(func=cmd_periods)

    p = sub.add_parser("lattice", help="invariants, discriminant, roots, half-periods")
    p.add_argument("--kappa", type=float, required=True)
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("identities", help="sweep all identity checkers over a grid")
    p.add_argument("--step", type=float, default=0.05)
    p.add_argument("--perturb-lambda", type=float, default=None, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_identities)

    p = sub.add_parser("sample", help="write CSV/JSONL samples for plotting")
    p.add_argument("--kappa", type=float, required=True)
    p.add_argument("--region", choices=("real-axis", "perimeter", "grid"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", required=True, help="output path, or - for stdout")
    p.add_argument("--route", choices=("sn", "wp", "phi"), default="sn")
    p.set_defaults(func=cmd_sample)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, ConvergenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
