"""Seeded invariant suites shared by the CLI ``props`` command and the test suite.

Each check returns a :class:`PropertyResult` counting how many instances were
examined and how many violated the property.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Callable

import numpy as np

from . import families as fam
from . import harmonic as hm
from . import oracle
from . import powerseries as ps
from . import quasisub as qs
from . import radii as rd
from .report import Verdict


@dataclass(frozen=True)
class PropertyResult:
    name: str
    checked: int
    violations: int
    worst: float = 0.0
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def to_dict(self) -> dict:
        return {**asdict(self), "passed": self.passed}


def _count(name: str, flags, worst: float = 0.0, detail: str = "") -> PropertyResult:
    flags = list(flags)
    return PropertyResult(name, len(flags), int(sum(not f for f in flags)), float(worst), detail)


def _seeds(seed: int, n: int) -> list[int]:
    return [int(s) for s in np.random.default_rng(seed).integers(0, 2**31, size=n)]


# Lemma-level suites for class B


def schwarz_pick_sampled(seed: int = 0, samples: int = 50, order: int = ps.DEFAULT_ORDER) -> PropertyResult:
    flags, worst = [], -math.inf
    rng = np.random.default_rng(seed)
    for s in _seeds(seed, samples):
        deg = int(rng.integers(1, 7))
        ev = fam.blaschke_evaluator(deg, s)
        a0 = abs(complex(ev(np.array(0j))))
        z = rng.uniform(0, 0.99, 100) * np.exp(2j * np.pi * rng.uniform(size=100))
        excess = np.abs(ev(z)) - hm.schwarz_pick_bound(a0, np.abs(z))
        worst = max(worst, float(excess.max()))
        flags.append(bool(np.all(excess <= 1e-10)))
    return _count("schwarz_pick", flags, worst)


def lemma_c_sampled(seed: int = 0, samples: int = 50, order: int = ps.DEFAULT_ORDER) -> PropertyResult:
    flags, worst = [], -math.inf
    rng = np.random.default_rng(seed + 1)
    for s in _seeds(seed + 1, samples):
        f = fam.random_blaschke(int(rng.integers(1, 7)), s, order)
        for r in (0.1, 0.3, 0.5, 0.7):
            rep = hm.lemma_c_check(f, r)
            worst = max(worst, -rep.margin)
            flags.append(rep.verdict is Verdict.HOLDS)
    return _count("lemma_c", flags, worst)


def lemma_d_sampled(seed: int = 0, samples: int = 50, order: int = ps.DEFAULT_ORDER) -> PropertyResult:
    flags, worst = [], -math.inf
    rng = np.random.default_rng(seed + 2)
    for s in _seeds(seed + 2, samples):
        f = fam.random_blaschke(int(rng.integers(1, 7)), s, order)
        for r in np.linspace(0.1, 0.8, 8):
            rep = hm.lemma_d_check(f, float(r))
            worst = max(worst, -rep.margin)
            flags.append(rep.verdict is Verdict.HOLDS)
    return _count("lemma_d", flags, worst)


# radius formulas


def lemma4_t_p(grid: int = 10_000, ps_=(0.5, 1.0, 1.5, 2.0, 3.0, 4.0)) -> PropertyResult:
    """``t_p`` increasing for ``p < 2``, decreasing for ``p > 2``, with the stated ranges."""
    x = np.linspace(0.0, 1.0, grid)
    flags, worst = [], 0.0
    for p in ps_:
        t = rd.t_p(p, x)
        d = np.diff(t)
        if p < 2:
            ok = np.all(d > 0) and t.min() >= 1 - 1e-10 and np.all(t[:-1] < 2 / p + 1e-10)
        elif p > 2:
            ok = np.all(d < 0) and t.max() <= 1 + 1e-10 and np.all(t[:-1] > 2 / p - 1e-10)
        else:
            ok = np.all(np.abs(t - 1) <= 1e-10)
        worst = max(worst, float(np.abs(d).max()))
        flags.append(bool(ok and abs(t[-1] - 2 / p) <= 1e-10))
    return _count("lemma4_t_p", flags, worst, "max step across the grid in worst")


def branch_jumps(p: float) -> float:
    """Largest jump of ``r_p`` across ``C(p)`` and into ``x = 1``, and of ``t_p`` into ``x = 1``."""
    c = rd.C_p(p)
    at_c = abs(float(rd.r_p(p, np.nextafter(c, 0))) - float(rd.r_p(p, c)))
    below_one = 1 - 1e-9
    at_one = max(abs(rd.r_p(p, below_one) - rd.r_p(p, 1.0)), abs(rd.t_p(p, below_one) - rd.t_p(p, 1.0)))
    return max(at_c, at_one)


def lemma4_r_p(grid: int = 10_000, ps_=(0.5, 1.0, 1.5, 2.0)) -> PropertyResult:
    """``r_p`` continuous and strictly decreasing from ``1/sqrt 2`` to ``p/(2+p)`` for ``p <= 2``."""
    x = np.linspace(0.0, 1.0, grid)
    flags, worst = [], 0.0
    for p in ps_:
        r = rd.r_p(p, x)
        d = np.diff(r)
        jump = branch_jumps(p)
        worst = max(worst, jump)
        flags.append(bool(np.all(d < 0) and jump <= 1e-6
                          and abs(r[0] - 1 / math.sqrt(2)) <= 1e-10
                          and abs(r[-1] - p / (2 + p)) <= 1e-10 and np.all(r < 1)))
    return _count("lemma4_r_p", flags, worst, "worst = largest branch or endpoint jump")


def root_residuals(ps_=(0.5, 1.0, 1.5, 2.0), ks=(0.0, 0.5, 1.0), ms=(1, 2, 3),
                   as_=(0.0, 0.3, 0.6, 0.9)) -> PropertyResult:
    flags, worst = [], 0.0
    for p in ps_:
        c = rd.C_p(p)
        res = abs(1 - c - c**p)
        worst = max(worst, res)
        flags.append(res <= 1e-11)
        for k in ks:
            for m in ms:
                P = rd.RadiusParams(p, k, m)
                r = rd.lambda_root(P)
                worst = max(worst, abs(rd.lambda_univ(P, r)))
                flags.append(abs(rd.lambda_univ(P, r)) <= 1e-10
                             and r <= p / (2 * (1 + k) + p) <= 1 / (2 + k) + 1e-15)
                for a in as_:
                    Q = P.with_a(a)
                    ra = rd.lambda_root_a(Q)
                    worst = max(worst, abs(rd.lambda_a(Q, ra)))
                    flags.append(abs(rd.lambda_a(Q, ra)) <= 1e-10
                                 and ra <= rd.lambda_root_a(rd.RadiusParams(2.0, k, m, a)) + 1e-12
                                 and rd.lambda_root_a(rd.RadiusParams(2.0, k, m, a)) < 1 / (2 + k))
    return _count("root_residuals", flags, worst)


def root_monotone(ms=(1, 2, 3)) -> PropertyResult:
    """``lambda_root`` nonincreasing in ``k`` and nondecreasing in ``p``."""
    ks = np.linspace(0, 1, 11)
    pgrid = np.linspace(0.1, 2.0, 20)
    flags = []
    for m in ms:
        for p in (0.5, 1.0, 2.0):
            vals = [rd.lambda_root(rd.RadiusParams(p, float(k), m)) for k in ks]
            flags.append(bool(np.all(np.diff(vals) <= 1e-15)))
        for k in (0.0, 0.5, 1.0):
            vals = [rd.lambda_root(rd.RadiusParams(float(p), k, m)) for p in pgrid]
            flags.append(bool(np.all(np.diff(vals) >= -1e-15)))
    return _count("root_monotone", flags)


def r1_bound(ks=(0.0, 0.25, 0.5, 1.0), ms=(1, 2, 3), as_=np.linspace(0, 0.99, 12)) -> PropertyResult:
    """``r^1_{m,k}(a) < 1/R_k(a)``."""
    flags = [rd.lambda_root_a(rd.RadiusParams(1.0, k, m, float(a))) < rd.R_k_bound(float(a), k)
             for k in ks for m in ms for a in as_]
    return _count("r1_below_R_k", flags)


def eq12_eq13_chain(ps_=(0.5, 1.0, 1.5, 2.0), ks=(0.0, 0.5, 1.0)) -> PropertyResult:
    a = np.concatenate([np.linspace(0, 0.99, 100), 1 - np.geomspace(1e-3, 1e-9, 50)])
    flags, worst = [], 0.0
    for p in ps_:
        for k in ks:
            vals = np.array([rd.r_k_p_closed(rd.RadiusParams(p, k, 1, float(x))) for x in a])
            bound = p / (2 * (1 + k) + p)
            worst = max(worst, bound - float(vals.min()))
            flags.append(vals.min() >= bound - 1e-9)
    return _count("eq12_eq13_chain", flags, worst)


def large_p_infimum(ps_=(2.5, 3.0, 4.0), ks=(0.0, 0.5, 1.0)) -> PropertyResult:
    """For ``p > 2`` the infimum of ``r_k^p(a)`` over an ``a``-grid refined near 1 is ``1/(2+k)``."""
    a = np.concatenate([np.linspace(0, 0.99, 100), 1 - np.geomspace(1e-3, 1e-9, 50)])
    flags, worst = [], 0.0
    for p in ps_:
        for k in ks:
            vals = np.array([rd.r_k_p_closed(rd.RadiusParams(p, k, 1, float(x))) for x in a])
            gap = abs(float(vals.min()) - 1 / (2 + k))
            worst = max(worst, gap)
            flags.append(gap <= 1e-3 and abs(rd.r_k_p_inf(p, k) - 1 / (2 + k)) <= 1e-15)
    return _count("large_p_infimum", flags, worst, "minimum sits at a = 0")


# quasi-subordination and the Bohr sum


def theorem1_suite(seed: int = 0, samples: int = 500, ps_=(0.5, 1.0, 2.0, 3.0),
                   order: int = ps.DEFAULT_ORDER) -> PropertyResult:
    rng = np.random.default_rng(seed + 10)
    flags, worst = [], -math.inf
    for s in _seeds(seed + 10, samples):
        f = fam.random_blaschke(int(rng.integers(1, 7)), s, order)
        for p in ps_:
            rep = qs.theorem1_report(f, p)
            worst = max(worst, rep.lhs.hi - 1.0)
            flags.append(rep.lhs.hi <= 1 + 1e-9)
    return _count("theorem1", flags, worst, "worst = max(D - 1)")


def random_triple(seed: int, order: int = ps.DEFAULT_ORDER):
    rng = np.random.default_rng(seed)
    Phi = fam.random_polynomial(int(rng.integers(0, 7)), int(rng.integers(2**31)), order)
    g = fam.random_polynomial(int(rng.integers(1, 7)), int(rng.integers(2**31)), order)
    w = fam.random_polynomial(int(rng.integers(1, 7)), int(rng.integers(2**31)), order,
                              vanish_at_zero=True)
    return Phi, g, w


def theorem2_suite(seed: int = 0, samples: int = 200, order: int = ps.DEFAULT_ORDER) -> PropertyResult:
    flags, worst = [], -math.inf
    for s in _seeds(seed + 20, samples):
        rep = qs.theorem2_report(*random_triple(s, order))
        worst = max(worst, -rep.margin)
        flags.append(rep.verdict is Verdict.HOLDS)
    return _count("theorem2", flags, worst, "worst = max(lhs - rhs)")


def corollary3_suite(seed: int = 0, samples: int = 100, order: int = ps.DEFAULT_ORDER) -> PropertyResult:
    flags = []
    for s in _seeds(seed + 30, samples):
        Phi, g, _ = random_triple(s, order)
        flags.append(qs.majorization_report(Phi, g).verdict is Verdict.HOLDS)
    return _count("corollary3", flags)


def corollary2_bracket(as_=(0.75, 0.8, 0.9, 0.95, 0.99), order: int = ps.DEFAULT_ORDER) -> PropertyResult:
    """Crossover inside ``[r_1(a^2), alpha_+(a)]`` and decreasing in ``a``."""
    flags, details, mids = [], [], []
    for a in sorted(as_):
        lo, hi = qs.corollary2_crossover(a, order).bracket
        flags.append(rd.r_1_closed(a * a) - 1e-7 <= lo and hi <= rd.alpha_plus(a) + 1e-7)
        mids.append(0.5 * (lo + hi))
        details.append(f"{a}:{mids[-1]:.10f}")
    flags.append(bool(np.all(np.diff(mids) < 0)))
    return _count("corollary2_bracket", flags, detail=" ".join(details))


def S_a_iff(as_=(0.75, 0.8, 0.9, 0.95), grid: int = 1000) -> PropertyResult:
    flags = []
    for a in as_:
        ap, am = rd.alpha_plus(a), rd.alpha_minus(a)
        for r in np.linspace(0, 0.999, grid):
            s = qs.S_a_closed(a, float(r))
            if min(abs(r - ap), abs(r - am)) < 1e-9:
                continue
            flags.append((s <= 1) == (r <= ap or r >= am))
    return _count("S_a_iff", flags)


# harmonic mappings


def lemma5_equality(as_=(0.0, 0.3, 0.6, 0.9, 0.95), ks=(0.0, 0.5, 1.0), rs=(0.1, 0.25, 0.5),
                    order: int = ps.DEFAULT_ORDER) -> PropertyResult:
    flags, worst = [], 0.0
    for a in as_:
        for k in ks:
            pair = fam.extremal_harmonic(a, k, order)
            for r in rs:
                err = abs(hm.E_f(pair, k, r).mid - hm.lemma5_rhs(a, k, r))
                worst = max(worst, err)
                flags.append(err <= 1e-9)
    return _count("lemma5_equality", flags, worst)


def lemma5_random(seed: int = 0, samples: int = 30, order: int = ps.DEFAULT_ORDER) -> PropertyResult:
    flags = []
    rng = np.random.default_rng(seed + 40)
    for s in _seeds(seed + 40, samples):
        k = float(rng.uniform(0, 1))
        pair = fam.random_hk_pair(k, s, order)
        limit = hm.validity_radius(pair, k)
        for r in (0.1, 0.2, 0.3):
            r = min(r, limit)
            flags.append(hm.lemma5_bound_check(pair, k, r).verdict is Verdict.HOLDS)
            flags.append(hm.eq4_check(pair, k, r).verdict is Verdict.HOLDS)
            flags.append(hm.eq5_check(pair, k, r).verdict is Verdict.HOLDS)
    return _count("lemma5_random", flags)


def factorization_grid(n: int = 1000) -> PropertyResult:
    rng = np.random.default_rng(7)
    flags, worst = [], 0.0
    for _ in range(n):
        P = rd.RadiusParams(float(rng.uniform(0.1, 2)), float(rng.uniform(0, 1)),
                            int(rng.integers(1, 4)), float(rng.uniform(0, 0.99)))
        r = float(rng.uniform(0, 0.99))
        res = max(hm.factorization_residual(P, r), hm.eq9_identity_residual(P, r) * (1 - r))
        worst = max(worst, res)
        flags.append(res <= 1e-12)
    return _count("factorization", flags, worst)


def Lambda_monotone() -> PropertyResult:
    r = np.linspace(0, 0.99, 500)
    flags = []
    for p in (0.5, 1.0, 2.0, 3.0):
        for k in (0.0, 0.5, 1.0):
            for m in (1, 2):
                for a in (0.0, 0.5, 0.9):
                    P = rd.RadiusParams(p, k, m, a)
                    flags.append(bool(np.all(np.diff([rd.Lambda(P, float(x)) for x in r]) > 0)))
    return _count("Lambda_increasing_in_r", flags)


def Lambda_in_a() -> PropertyResult:
    """For ``r <= lambda_root``, ``Lambda(a, r)`` is nondecreasing in ``a`` with ``Lambda(1, r) <= 0``."""
    flags = []
    a = np.linspace(0, 1, 101)
    for p in (0.5, 1.0, 1.5, 2.0):
        for k in (0.0, 0.5, 1.0):
            for m in (1, 2):
                P = rd.RadiusParams(p, k, m)
                root = rd.lambda_root(P)
                for r in np.linspace(0, root, 6):
                    flags.append(hm.lambda_a_monotone_in_a(P, float(r), a))
    return _count("Lambda_nondecreasing_in_a", flags)


def theorem3_sharpness(order: int = ps.DEFAULT_ORDER) -> PropertyResult:
    flags, worst = [], 0.0
    for m in (1, 2):
        for p in (1.0, 2.0):
            for k in (0.0, 1.0):
                for a in (0.3, 0.6, 0.9):
                    P = rd.RadiusParams(p, k, m, a)
                    rep = hm.theorem3_verify(P, fam.extremal_harmonic(a, k, order))
                    lo, hi = rep.crossover_bracket
                    worst = max(worst, abs(lo - rep.predicted_radius), abs(hi - rep.predicted_radius))
                    flags.append(rep.verdict is Verdict.HOLDS
                                 and rep.predicted_radius - 1e-7 <= lo and hi <= rep.predicted_radius + 1e-7)
    return _count("theorem3_sharpness", flags, worst)


def remark_identity_suite(order: int = ps.DEFAULT_ORDER) -> PropertyResult:
    flags, worst = [], 0.0
    for r in (0.1, 0.2, 0.3, 0.4, 0.5):
        q, closed = hm.remark_identity(r, 1.0, order)
        worst = max(worst, abs(q.mid - closed))
        flags.append(abs(q.mid - closed) <= 1e-10)
    cross = qs.sharpness_scan(lambda r: hm.remark_identity(r, 1.0, order)[0], 1.0, 0.1, 0.5)
    flags.append(abs(cross.holds_at - 1 / 3) <= 1e-9 and abs(cross.fails_at - 1 / 3) <= 1e-9)
    return _count("remark_identity", flags, worst)


# oracle equivalence


def family_members(seed: int = 0, order: int = ps.DEFAULT_ORDER):
    """``(name, series, evaluator)`` triples covering every constructor."""
    out = []
    for a in (0.0, 0.3, 0.5, 0.9):
        w = fam.disk_automorphism(a, order)
        out.append((f"omega_a({a})", w, lambda z, a=a: (z + a) / (1 + a * z)))
    for a in (0.5, 0.75, 0.9):
        out.append((f"corollary2({a})", fam.corollary2_function(a, order),
                    lambda z, a=a: z**2 * ((z - a) / (1 - a * z)) ** 2))
    for q, b, a in ((0, 1.0, 0.0), (1, 1.0, 1 / math.sqrt(2)), (2, 0.9, 0.5), (3, -0.5j, 0.8)):
        out.append((f"monomial({q},{b},{a:.3f})", fam.monomial_extremal(q, b, a, order),
                    lambda z, q=q, b=b, a=a: b * z**q * (z + a) / (1 + a * z)))
    for z0 in (0.5, -0.3 + 0.4j):
        out.append((f"blaschke_factor({z0})", fam.blaschke_factor(z0, order),
                    lambda z, z0=z0: (z - z0) / (1 - np.conj(z0) * z)))
    for i, s in enumerate(_seeds(seed + 50, 6)):
        deg = (0, 1, 3, 6, 10, 20)[i]
        out.append((f"random_blaschke({deg},{s})", fam.random_blaschke(deg, s, order),
                    fam.blaschke_evaluator(deg, s)))
    for i, s in enumerate(_seeds(seed + 60, 4)):
        deg = (1, 8, 32, 64)[i]
        p = fam.random_polynomial(deg, s, order)
        out.append((f"random_polynomial({deg},{s})", p, p.evaluate))
    for i, s in enumerate(_seeds(seed + 70, 6)):
        Phi, g, w = random_triple(s, order)
        out.append((f"quasi_compose({s})", qs.quasi_compose(Phi, g, w),
                    lambda z, Phi=Phi, g=g, w=w: Phi(z) * g(w(z))))
    ev = fam.blaschke_evaluator(3, 11)
    b3 = fam.random_blaschke(3, 11, order)
    inner = fam.monomial_extremal(1, 1.0, 0.4, order)
    out.append(("quasi_compose(blaschke)", qs.quasi_compose(b3, b3, inner),
                lambda z: ev(z) * ev(z * (z + 0.4) / (1 + 0.4 * z))))
    return out


def oracle_equivalence(seed: int = 0, rho: float = 0.7, n_max: int = 64,
                       order: int = ps.DEFAULT_ORDER) -> PropertyResult:
    flags, worst, bad = [], 0.0, []
    for name, series, ev in family_members(seed, order):
        gap = oracle.max_coefficient_gap(oracle.dft_coefficients(ev, rho, n_max), series, n_max)
        worst = max(worst, gap)
        flags.append(gap <= 1e-9)
        if gap > 1e-9:
            bad.append(name)
    return _count("oracle_equivalence", flags, worst, ",".join(bad))


def dft_roundtrip(seed: int = 0, rho: float = 0.7, degree: int = 64) -> PropertyResult:
    flags, worst = [], 0.0
    for s in _seeds(seed + 80, 5):
        p = fam.random_polynomial(degree, s, degree)
        d = oracle.dft_coefficients(p.evaluate, rho, degree)
        z = oracle.circle_points(rho, 4 * degree)
        err = float(np.abs(d.evaluate(z) - p.evaluate(z)).max())
        worst = max(worst, err)
        flags.append(err <= 1e-9)
    return _count("dft_roundtrip", flags, worst)


def dilatation_suite(seed: int = 0, samples: int = 20, order: int = ps.DEFAULT_ORDER) -> PropertyResult:
    flags = []
    for a in (0.0, 0.5, 0.9):
        for k in (0.0, 0.3, 1.0):
            res = oracle.dilatation_check(fam.extremal_harmonic(a, k, order), k, 0.9)
            flags.append(abs(res.max_ratio - k) <= 1e-10)
    rng = np.random.default_rng(seed + 90)
    for s in _seeds(seed + 90, samples):
        k = float(rng.uniform(0, 1))
        flags.append(oracle.hk_membership(fam.random_hk_pair(k, s, order), k))
    return _count("dilatation", flags)


SUITES: dict[str, list[Callable[[], PropertyResult]]] = {
    "lemmas": [schwarz_pick_sampled, lemma_c_sampled, lemma_d_sampled, lemma5_equality],
    "radii": [lemma4_t_p, lemma4_r_p, root_residuals, root_monotone, r1_bound,
              eq12_eq13_chain, large_p_infimum],
    "quasisub": [theorem1_suite, theorem2_suite, corollary3_suite, corollary2_bracket, S_a_iff],
    "harmonic": [lemma5_random, factorization_grid, Lambda_monotone, Lambda_in_a,
                 theorem3_sharpness, remark_identity_suite],
    "oracle": [oracle_equivalence, dft_roundtrip, dilatation_suite],
}


def run_suite(name: str, seed: int = 0, order: int = ps.DEFAULT_ORDER) -> list[PropertyResult]:
    """Run every check of suite ``name``, passing ``seed``/``order`` where accepted."""
    import inspect
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; known: {sorted(SUITES)}")
    out = []
    for fn in SUITES[name]:
        accepted = inspect.signature(fn).parameters
        kwargs = {k: v for k, v in (("seed", seed), ("order", order)) if k in accepted}
        out.append(fn(**kwargs))
    return out
