"""Bohr-radius tables, inequality checks and sharpness scans from the command line.

Exit codes: 0 success, 1 a check FAILS, 2 bad usage, 3 parameter out of
range, 4 a check is INCONCLUSIVE.
"""
from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable

import numpy as np

from . import families as fam
from . import harmonic as hm
from . import powerseries as ps
from . import props
from . import quasisub as qs
from . import radii as rd
from .config import Settings
from .errors import BadBracket, BohrLabError, ParamOutOfRange, PreconditionViolated
from .report import Verdict, VerificationReport

EXIT_OK, EXIT_FAILS, EXIT_USAGE, EXIT_RANGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3, 4

PARAM_ORDER = ("p", "k", "m", "a")


class UsageError(Exception):
    pass


def parse_values(text: str | None, cast: Callable = float) -> list:
    """``"0.5"``, ``"0.5,1,2"`` or ``"start:stop:num"`` (inclusive, ``num`` points)."""
    if text is None:
        return [None]
    if text.count(":") == 2:
        lo, hi, num = text.split(":")
        vals = np.linspace(float(lo), float(hi), int(num))
        return [cast(v) for v in vals]
    return [cast(v) for v in text.split(",") if v.strip()]


def _pmap(fn, items: Iterable, threads: int) -> list:
    items = list(items)
    if threads <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def emit(rows: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(rows, indent=2, default=_json_default) + "\n")
        return
    if not rows:
        return
    header = list(rows[0])
    for row in rows[1:]:
        header += [k for k in row if k not in header]
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=header, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _csv_cell(v) for k, v in row.items()})
    out.write(buf.getvalue())


def _csv_cell(v):
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, (list, tuple, dict)):
        return json.dumps(v, default=_json_default)
    return v


def _json_default(o):
    if isinstance(o, (np.floating, np.integer)):
        return o.item()
    if isinstance(o, Verdict):
        return o.value
    raise TypeError(f"cannot serialise {type(o).__name__}")


# radius


def _radius_value(formula: str, p, k, m, a) -> float:
    need = {
        "r_p": ("p", "a"), "t_p": ("p", "a"), "r_1": ("a",), "C_p": ("p",),
        "eq7": ("p", "a"), "eq10": ("p",), "eq12": ("p", "a"),
        "eq13": ("p",), "eq14": ("p",), "alpha_plus": ("a",), "alpha_minus": ("a",),
        "R_k": ("a",),
    }[formula]
    given = {"p": p, "k": k, "m": m, "a": a}
    missing = [n for n in need if given[n] is None]
    if missing:
        raise UsageError(f"--formula {formula} needs {', '.join('--' + n for n in missing)}")
    k = 0.0 if k is None else k
    m = 1 if m is None else m
    if formula == "r_p":
        return float(rd.r_p(p, a))
    if formula == "t_p":
        return float(rd.t_p(p, a))
    if formula == "r_1":
        return float(rd.r_1_closed(a))
    if formula == "C_p":
        return rd.C_p(p)
    if formula == "eq7":
        return rd.lambda_root_a(rd.RadiusParams(p, k, m, a))
    if formula == "eq10":
        return rd.lambda_root(rd.RadiusParams(p, k, m))
    if formula == "eq12":
        return rd.r_k_p_closed(rd.RadiusParams(p, k, 1, a))
    if formula == "eq13":
        rd.RadiusParams(p, k)
        return rd.corollary6_radius(p, k)
    if formula == "eq14":
        rd.RadiusParams(p, k)
        return rd.r_k_p_inf(p, k)
    if formula == "alpha_plus":
        return rd.alpha_plus(a)
    if formula == "alpha_minus":
        return rd.alpha_minus(a)
    return rd.R_k_bound(a, k)


def cmd_radius(args, settings: Settings, out) -> int:
    grids = {
        "p": parse_values(args.p), "k": parse_values(args.k),
        "m": parse_values(args.m, lambda v: int(float(v))), "a": parse_values(args.a),
    }
    combos = list(itertools.product(*(grids[n] for n in PARAM_ORDER)))

    def row(c):
        vals = dict(zip(PARAM_ORDER, c))
        r = _radius_value(args.formula, **vals)
        return {**{n: v for n, v in vals.items() if v is not None}, "formula": args.formula,
                "radius": r}

    emit(_pmap(row, combos, settings.threads), args.out, out)
    return EXIT_OK


# family construction from flags


def _family_dict(args) -> dict:
    desc = {"family": args.family}
    for name in ("a", "k", "q", "b", "degree", "seed"):
        v = getattr(args, name, None)
        if v is not None:
            desc[name] = v
    return desc


def build_pair(args, settings: Settings) -> fam.HarmonicPair:
    name = args.family
    if name is None:
        raise UsageError("--family is required")
    k = 0.0 if args.k is None else float(args.k)
    if name in ("extremal", "extremal_harmonic"):
        return fam.extremal_harmonic(_need(args, "a"), k, settings.order)
    if name == "z_plus_conj_z":
        return fam.z_plus_conj_z(settings.order)
    if name == "random_hk":
        seed = settings.seed if args.seed is None else args.seed
        return fam.random_hk_pair(k, seed, settings.order)
    h = build_series(args, settings)
    return fam.HarmonicPair(h, ps.TruncatedSeries.zero(settings.order), k)


def build_series(args, settings: Settings) -> ps.TruncatedSeries:
    if args.family is None:
        raise UsageError("--family is required")
    desc = {"family": args.family}
    wants = {
        "omega_a": ("a",), "corollary2": ("a",), "monomial": ("q", "b", "a"), "z_omega": (),
        "random_blaschke": ("degree", "seed"), "random_polynomial": ("degree", "seed"),
    }
    if args.family not in wants:
        raise UsageError(f"unknown analytic family {args.family!r}; known: {sorted(wants)}")
    for name in wants[args.family]:
        if name == "seed":
            desc[name] = settings.seed if args.seed is None else args.seed
        elif name == "degree":
            desc[name] = 6 if args.degree is None else args.degree
        elif name == "b":
            desc[name] = 1.0 if args.b is None else complex(args.b)
        else:
            desc[name] = _need(args, name)
    if args.family == "z_omega" and args.a is not None:
        desc["a"] = args.a
    return fam.from_description(desc, settings.order)


def _need(args, name: str):
    v = getattr(args, name, None)
    if v is None:
        raise UsageError(f"--{name} is required for --family {args.family}")
    return v


# verify


def _report_row(rep: VerificationReport, extra: dict | None = None) -> dict:
    d = rep.to_dict()
    return {**(extra or {}), **d}


def cmd_verify(args, settings: Settings, out) -> int:
    th = args.theorem
    p = 1.0 if args.p is None else float(args.p)
    k = 0.0 if args.k is None else float(args.k)
    m = 1 if args.m is None else int(args.m)
    margin = settings.margin if args.margin is None else args.margin
    if th == "1":
        f = build_series(args, settings)
        rep = qs.theorem1_report(f, p, margin=0.0 if args.margin is None else args.margin)
    elif th == "2":
        seed = settings.seed if args.seed is None else args.seed
        rep = qs.theorem2_report(*props.random_triple(seed, settings.order),
                                 margin=1e-6 if args.margin is None else args.margin)
    elif th == "lemma5":
        pair = build_pair(args, settings)
        r = args.r if args.r is not None else min(0.3, hm.validity_radius(pair, k))
        rep = hm.lemma5_bound_check(pair, k, r)
    elif th == "3":
        rep = hm.theorem3_verify(rd.RadiusParams(p, k, m), build_pair(args, settings), margin)
    else:
        rep = hm.corollary456_verify(th, rd.RadiusParams(p, k, m), build_pair(args, settings),
                                     margin)
    emit([_report_row(rep, {"theorem": th, "family": args.family})], args.out, out)
    return _verdict_code(rep.verdict)


def _verdict_code(v: Verdict) -> int:
    return {Verdict.HOLDS: EXIT_OK, Verdict.FAILS: EXIT_FAILS,
            Verdict.INCONCLUSIVE: EXIT_INCONCLUSIVE}[v]


# sharpness


def sharpness_setup(args, settings: Settings):
    """``(lhs, rhs, predicted, r_lo, r_hi)`` for the chosen extremal family."""
    name = args.family
    if name is None:
        raise UsageError("--family is required")
    p = 1.0 if args.p is None else float(args.p)
    k = 0.0 if args.k is None else float(args.k)
    m = 1 if args.m is None else int(args.m)
    N = settings.order
    if name in ("extremal", "extremal_harmonic"):
        P = rd.RadiusParams(p, k, m, _need(args, "a"))
        pair = fam.extremal_harmonic(P.a, k, N)
        pred = rd.lambda_root_a(P)
        return (lambda r: hm.F_upper(P, pair, r)), 1.0, pred, 0.5 * pred, pred + 0.05 * (1 - pred)
    if name == "omega_a":
        a = _need(args, "a")
        w = fam.disk_automorphism(a, N)
        pred = float(rd.r_p(p, a))
        return (lambda r: qs.bohr_head_sum(w, p, r)), 1.0, pred, 0.01, 0.99
    if name == "z_omega":
        b = 1 / math.sqrt(2) if args.a is None else args.a
        f = fam.monomial_extremal(1, 1.0, b, N)
        return (lambda r: qs.bohr_head_sum(f, p, r)), 1.0, 1 / (2 * b), 0.01, 0.99
    if name == "corollary2":
        a = _need(args, "a")
        f = fam.corollary2_function(a, N)
        g = ps.TruncatedSeries.monomial(1.0, 2, N)
        return f, g, rd.alpha_plus(a), 0.5 * float(rd.r_1_closed(a * a)), 0.9
    if name == "monomial":
        q = 1 if args.q is None else int(args.q)
        b = 1.0 if args.b is None else complex(args.b)
        a = _need(args, "a")
        f = fam.monomial_extremal(q, b, a, N)
        g = ps.TruncatedSeries.monomial(b, q, N)
        return f, g, float(rd.r_1_closed(a)), 0.01, 0.99
    if name == "z_plus_conj_z":
        return (lambda r: hm.remark_identity(r, p, N)[0]), 1.0, 1 / 3, 0.05, 0.9
    raise UsageError(f"no sharpness scan for family {name!r}")


def cmd_sharpness(args, settings: Settings, out) -> int:
    lhs, rhs, pred, r_lo, r_hi = sharpness_setup(args, settings)
    r_lo = r_lo if args.r_lo is None else args.r_lo
    r_hi = r_hi if args.r_hi is None else args.r_hi
    cross = qs.sharpness_scan(lhs, rhs, r_lo, r_hi, settings.scan_tol)
    params = {n: v for n, v in (("p", args.p), ("m", args.m)) if v is not None}
    row = {"family": args.family, "params": _family_dict(args) | params,
           "predicted_radius": pred, "crossover_bracket": list(cross.bracket),
           "crossover": cross.estimate, "inconclusive_width": cross.inconclusive}
    emit([row], args.out, out)
    return EXIT_OK


# table


def _r4_rows(settings):
    xs = [0.5, 1 / 3, 0.0, 1.0]
    labels = ["r_4(1/2)", "r_4(1/3)", "r_4(0)", "r_4(1)"]
    vals = [float(rd.r_p(4.0, x)) for x in xs]
    rows = [{"quantity": lab, "x": x, "value": v} for lab, x, v in zip(labels, xs, vals)]
    chain = all(u > v for u, v in zip(vals, vals[1:])) and vals[-1] > 0.5
    rows.append({"quantity": "strict chain > 1/2", "x": "", "value": chain})
    return rows


def _radii_rows(settings):
    grid = [(p, k) for p in (0.5, 1.0, 1.5, 2.0) for k in (0.0, 0.5, 1.0)]

    def row(pk):
        p, k = pk
        r10 = rd.lambda_root(rd.RadiusParams(p, k, 1))
        return {"p": p, "k": k, "eq10_m1": r10, "eq10_m2": rd.lambda_root(rd.RadiusParams(p, k, 2)),
                "eq13": rd.corollary6_radius(p, k), "bound": 1 / (2 + k),
                "closed_k0": p / (math.sqrt(4 * p + 1) + p + 1) if k == 0 else ""}

    return _pmap(row, grid, settings.threads)


def _corollary2_rows(settings):
    def row(a):
        c = qs.corollary2_crossover(a, settings.order, settings.scan_tol)
        return {"a": a, "N": qs.sign_change_index(a), "r1_a2": float(rd.r_1_closed(a * a)),
                "crossover": c.estimate, "alpha_plus": rd.alpha_plus(a)}

    return _pmap(row, [0.75, 0.8, 0.85, 0.9, 0.95, 0.99], settings.threads)


def _theorem3_rows(settings):
    grid = list(itertools.product((1, 2), (1.0, 2.0), (0.0, 0.5, 1.0), (0.3, 0.6, 0.9)))

    def row(c):
        m, p, k, a = c
        P = rd.RadiusParams(p, k, m, a)
        cross = hm.extremal_crossover(P, settings.order)
        return {"m": m, "p": p, "k": k, "a": a, "eq7_root": rd.lambda_root_a(P),
                "crossover": cross.estimate, "eq10_root": rd.lambda_root(P)}

    return _pmap(row, grid, settings.threads)


TABLES = {"r4_ordering": _r4_rows, "radii": _radii_rows, "corollary2": _corollary2_rows,
          "theorem3": _theorem3_rows}


def cmd_table(args, settings: Settings, out) -> int:
    emit(TABLES[args.name](settings), args.out, out)
    return EXIT_OK


# props


def cmd_props(args, settings: Settings, out) -> int:
    names = list(props.SUITES) if args.suite == "all" else [args.suite]
    rows = []
    for name in names:
        for res in props.run_suite(name, settings.seed, settings.order):
            rows.append({"suite": name, **res.to_dict()})
    emit(rows, args.out, out)
    return EXIT_OK if all(r["passed"] for r in rows) else EXIT_FAILS


# plotdata


def cmd_plotdata(args, settings: Settings, out) -> int:
    n = settings.grid if args.points is None else args.points
    p = 1.0 if args.p is None else float(args.p)
    k = 0.0 if args.k is None else float(args.k)
    m = 1 if args.m is None else int(args.m)
    rows = []
    if args.curve in ("r_p", "t_p"):
        fn = rd.r_p if args.curve == "r_p" else rd.t_p
        for x in np.linspace(0, 1, n):
            rows.append({"p": p, "x": float(x), args.curve: float(fn(p, float(x)))})
    elif args.curve == "S_a":
        a = 0.9 if args.a is None else args.a
        for r in np.linspace(0, 0.95, n):
            rows.append({"a": a, "r": float(r), "S_a": qs.S_a_closed(a, float(r)),
                         "S_aN": qs.S_aN_closed(a, float(r))})
    elif args.curve == "lambda_root_a":
        P = rd.RadiusParams(p, k, m)
        for a in np.linspace(0, 0.99, n):
            rows.append({"p": p, "k": k, "m": m, "a": float(a),
                         "radius": rd.lambda_root_a(P.with_a(float(a))),
                         "eq12": rd.r_k_p_closed(rd.RadiusParams(p, k, 1, float(a)))})
    else:
        for r in np.linspace(0, 0.99, n):
            rows.append({"r": float(r), "F_extremal_minus_1": rd.Lambda(
                rd.RadiusParams(p, k, m, 0.5 if args.a is None else args.a), float(r))})
    emit(rows, args.out, out)
    return EXIT_OK


# parser


def _add_params(p: argparse.ArgumentParser, grid: bool = False) -> None:
    kind = str if grid else float
    p.add_argument("--p", type=kind, help="exponent on |a_0|" + (" (list or a:b:n)" if grid else ""))
    p.add_argument("--k", type=kind, help="dilatation bound in [0, 1]")
    p.add_argument("--m", type=str if grid else int, help="power in h(z^m)")
    p.add_argument("--a", type=kind, help="|h(0)|")


def _add_family(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", help="family name; not used by --theorem 2")
    p.add_argument("--q", type=int)
    p.add_argument("--b", type=str, help="complex coefficient, e.g. 0.9 or 0.5j")
    p.add_argument("--degree", type=int)
    p.add_argument("--seed", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bohr-lab", description=__doc__.splitlines()[0])
    parser.add_argument("--config", help="key = value settings file")
    parser.add_argument("--order", type=int, help="truncation order N")
    parser.add_argument("--seed", dest="global_seed", type=int)
    parser.add_argument("--output", help="write to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--out", choices=("csv", "json"), default="csv")
        sp.set_defaults(func=fn)
        return sp

    sp = add("radius", cmd_radius, "evaluate a radius formula over a parameter grid")
    sp.add_argument("--formula", required=True,
                    choices=("r_p", "t_p", "r_1", "C_p", "eq7", "eq10", "eq12", "eq13", "eq14",
                             "alpha_plus", "alpha_minus", "R_k"))
    _add_params(sp, grid=True)

    sp = add("verify", cmd_verify, "check an inequality at its predicted radius")
    sp.add_argument("--theorem", required=True, choices=("1", "2", "3", "c4", "c5", "c6", "lemma5"))
    _add_params(sp)
    _add_family(sp)
    sp.add_argument("--r", type=float, help="radius (lemma5 only)")
    sp.add_argument("--margin", type=float, help="distance below the predicted radius")

    sp = add("sharpness", cmd_sharpness, "locate the crossover radius of an extremal family")
    _add_params(sp)
    _add_family(sp)
    sp.add_argument("--r-lo", type=float)
    sp.add_argument("--r-hi", type=float)

    sp = add("table", cmd_table, "comparison grids")
    sp.add_argument("--name", choices=sorted(TABLES), default="r4_ordering")

    sp = add("props", cmd_props, "run an invariant suite")
    sp.add_argument("--suite", choices=sorted(props.SUITES) + ["all"], required=True)

    sp = add("plotdata", cmd_plotdata, "curve samples for figures")
    sp.add_argument("--curve", choices=("r_p", "t_p", "S_a", "lambda_root_a", "Lambda"),
                    required=True)
    sp.add_argument("--points", type=int)
    _add_params(sp)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        settings = Settings.from_file(args.config)
    except (OSError, ValueError) as exc:
        print(f"bohr-lab: config: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.order is not None:
        settings.order = args.order
    if args.global_seed is not None:
        settings.seed = args.global_seed
    out = open(args.output, "w", newline="") if args.output else sys.stdout
    try:
        return args.func(args, settings, out)
    except UsageError as exc:
        print(f"bohr-lab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParamOutOfRange as exc:
        print(f"bohr-lab: parameter out of range: {exc}", file=sys.stderr)
        return EXIT_RANGE
    except (BadBracket, PreconditionViolated) as exc:
        print(f"bohr-lab: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except BohrLabError as exc:
        print(f"bohr-lab: {exc}", file=sys.stderr)
        return EXIT_RANGE
    finally:
        if out is not sys.stdout:
            out.close()


if __name__ == "__main__":
    sys.exit(main())
