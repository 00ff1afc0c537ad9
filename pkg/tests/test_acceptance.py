"""Acceptance criteria, each with its stated tolerance.

Every test records a PASS/FAIL line that the terminal summary prints.
"""
import math

import numpy as np
import pytest

from bohr_lab import families as fam
from bohr_lab import harmonic as hm
from bohr_lab import oracle
from bohr_lab import powerseries as ps
from bohr_lab import props
from bohr_lab import quasisub as qs
from bohr_lab import radii as rd
from bohr_lab.report import Verdict

N = ps.DEFAULT_ORDER


def test_01_closed_form_radii(acceptance):
    errs = []
    for p in (0.5, 1.0, 2.0):
        errs.append(abs(rd.r_p(p, 0.0) - 1 / math.sqrt(2)))
        errs.append(abs(rd.r_p(p, 1.0) - p / (2 + p)))
    errs.append(abs(rd.r_1_closed(1.0) - 1 / 3))
    errs.append(abs(rd.r_p(1.0, 1.0) - 1 / 3))
    errs.append(abs(rd.C_p(1.0) - 0.5))
    worst = max(errs)
    assert acceptance("1  closed-form radii", worst <= 1e-10, f"max abs err {worst:.2e}")


def test_02_r4_ordering(acceptance):
    v = [rd.r_p(4.0, x) for x in (0.5, 1 / 3, 0.0, 1.0)]
    ok = v[0] > v[1] > v[2] > v[3] > 0.5 and v[3] == pytest.approx(2 / 3, abs=1e-15)
    assert acceptance("2  r_4 ordering", ok, " > ".join(f"{x:.6f}" for x in v) + " > 0.5")


def test_03_universal_root_closed_form(acceptance):
    errs = []
    for p in (0.5, 1.0, 1.5, 2.0):
        closed = p / (math.sqrt(4 * p + 1) + p + 1)
        errs.append(abs(rd.lambda_root(rd.RadiusParams(p, 0.0, 1)) - closed))
    assert acceptance("3  m=1,k=0 root closed form", max(errs) <= 1e-10, f"max abs err {max(errs):.2e}")


def test_04_head_sum_sharpness(acceptance):
    gaps = []
    for p in (0.5, 1.0, 2.0):
        for a in (rd.C_p(p), 0.7, 0.9):
            w = fam.disk_automorphism(a, N)
            cross = qs.sharpness_scan(lambda r: qs.bohr_head_sum(w, p, r), 1.0, 0.01, 0.99)
            target = rd.r_p(p, a)
            gaps.append(max(abs(cross.holds_at - target), abs(cross.fails_at - target)))
    zw = fam.monomial_extremal(1, 1.0, 1 / math.sqrt(2), N)
    for p in (0.5, 1.0, 2.0):
        cross = qs.sharpness_scan(lambda r: qs.bohr_head_sum(zw, p, r), 1.0, 0.01, 0.99)
        gaps.append(max(abs(cross.holds_at - 1 / math.sqrt(2)), abs(cross.fails_at - 1 / math.sqrt(2))))
    assert acceptance("4  head-sum crossover = r_p(a)", max(gaps) <= 1e-7, f"max gap {max(gaps):.2e}")


def test_05_head_sum_random_blaschke(acceptance):
    rng = np.random.default_rng(2024)
    seeds = rng.integers(0, 2**31, size=500)
    degrees = rng.integers(1, 9, size=500)
    violations, worst = 0, -math.inf
    for s, d in zip(seeds, degrees):
        f = fam.random_blaschke(int(d), int(s), N)
        a0 = abs(f.coeffs[0])
        for p in (0.5, 1.0, 2.0, 3.0):
            hi = qs.bohr_head_sum(f, p, rd.r_p(p, a0)).hi
            worst = max(worst, hi - 1)
            violations += hi > 1 + 1e-9
    assert acceptance("5  head sum <= 1 (500 samples)", violations == 0,
                      f"{violations} violations, max excess {worst:.2e}")


def test_06_quasi_subordination_suite(acceptance):
    seeds = np.random.default_rng(77).integers(0, 2**31, size=200)
    violations = 0
    for s in seeds:
        Phi, g, w = props.random_triple(int(s), N)
        radius = qs.theorem2_radius(abs(Phi.coeffs[0]), abs(w.coeffs[1]))
        rep = qs.majorant_compare(qs.quasi_compose(Phi, g, w), g, radius - 1e-6)
        violations += rep.verdict is not Verdict.HOLDS
    assert acceptance("6  quasi-subordination (200)", violations == 0, f"{violations} violations")


AS_7 = (0.75, 0.8, 0.9, 0.95, 0.99)


def test_07a_squared_automorphism_bracket(acceptance):
    bad = []
    for a in AS_7:
        lo, hi = qs.corollary2_crossover(a, N).bracket
        if not (rd.r_1_closed(a * a) - 1e-7 <= lo and hi <= rd.alpha_plus(a) + 1e-7):
            bad.append(a)
    assert acceptance("7a crossover in [r_1(a^2), alpha_+]", not bad, f"outside for a={bad}")


@pytest.mark.xfail(strict=True, reason="the crossover at a=0.99 is bounded below by "
                   "1/(1+2a^2) = 0.33782 > 0.3345; see the decisions ledger")
def test_07b_squared_automorphism_near_one(acceptance):
    cross = qs.corollary2_crossover(0.99, N)
    ok = cross.fails_at <= 0.3345
    acceptance("7b crossover(0.99) <= 0.3345", ok,
               f"crossover {cross.estimate:.10f}; lower bound 1/(1+2a^2) = {1 / (1 + 2 * 0.99**2):.10f}")
    assert ok


def test_08_extremal_harmonic_equality(acceptance):
    worst = 0.0
    count = 0
    for a in (0.0, 0.3, 0.5, 0.7, 0.9):
        for k in (0.0, 0.25, 0.5, 0.75, 1.0):
            pair = fam.extremal_harmonic(a, k, N)
            for r in (0.2, 0.6):
                enc = hm.E_f(pair, k, r)
                closed = (1 - a * a) * (1 + k) * r / (1 - r)
                worst = max(worst, abs(enc.lo - closed), abs(enc.hi - closed))
                count += 1
    assert count == 50
    assert acceptance("8  extremal E_f equality (50)", worst <= 1e-9, f"max abs err {worst:.2e}")


def test_09_harmonic_sharpness(acceptance):
    gaps, bound_ok = [], True
    for m in (1, 2):
        for p in (1.0, 2.0):
            for k in (0.0, 1.0):
                for a in (0.3, 0.6, 0.9):
                    P = rd.RadiusParams(p, k, m, a)
                    root = rd.lambda_root_a(P)
                    cross = hm.extremal_crossover(P, N)
                    gaps.append(max(abs(cross.holds_at - root), abs(cross.fails_at - root)))
                univ = rd.lambda_root(rd.RadiusParams(p, k, m))
                bound_ok &= univ <= p / (2 * (1 + k) + p) <= 1 / (2 + k)
                bound_ok &= abs(rd.lambda_univ(rd.RadiusParams(p, k, m), univ)) <= 1e-10
    ok = max(gaps) <= 1e-7 and bound_ok
    assert acceptance("9  extremal pair crossover", ok,
                      f"max gap {max(gaps):.2e}; universal-root bounds {'ok' if bound_ok else 'broken'}")


def test_10_z_plus_conj_z(acceptance):
    errs = []
    for r in (0.1, 0.2, 0.3, 0.4, 0.5):
        q, closed = hm.remark_identity(r)
        errs.append(max(abs(q.lo - 2 * r / (1 - r)), abs(q.hi - 2 * r / (1 - r))))
    cross = qs.sharpness_scan(lambda r: hm.remark_identity(r)[0], 1.0, 0.1, 0.5)
    gap = max(abs(cross.holds_at - 1 / 3), abs(cross.fails_at - 1 / 3))
    ok = max(errs) <= 1e-10 and gap <= 1e-9
    assert acceptance("10 z + conj(z) identity", ok,
                      f"max identity err {max(errs):.2e}; crossover gap {gap:.2e}")


def test_11_oracle_equivalence(acceptance):
    worst, bad = 0.0, []
    members = props.family_members(seed=11, order=N)
    for name, series, ev in members:
        dft = oracle.dft_coefficients(ev, 0.7, 64)
        gap = float(np.abs(dft.coeffs - series.coeffs[:65]).max())
        worst = max(worst, gap)
        if gap > 1e-9:
            bad.append(name)
    assert acceptance("11 oracle equivalence", not bad,
                      f"{len(members)} members, max gap {worst:.2e}, violations {bad}")


def test_12_lemma4_monotonicity(acceptance):
    x = np.linspace(0.0, 1.0, 10_000)
    violations = 0
    for p in (0.5, 1.0, 1.5, 2.0, 3.0, 4.0):
        t = rd.t_p(p, x)
        d = np.diff(t)
        if p < 2:
            violations += int(np.sum(d <= 0))
            violations += int(np.sum(t < 1 - 1e-10) + np.sum(t[:-1] >= 2 / p + 1e-10))
        elif p > 2:
            violations += int(np.sum(d >= 0))
            violations += int(np.sum(t > 1 + 1e-10) + np.sum(t[:-1] <= 2 / p - 1e-10))
        else:
            violations += int(np.sum(np.abs(t - 1) > 1e-10))
    for p in (0.5, 1.0, 1.5, 2.0):
        r = rd.r_p(p, x)
        violations += int(np.sum(np.diff(r) >= 0))
        violations += abs(r[0] - 1 / math.sqrt(2)) > 1e-10
        violations += abs(r[-1] - p / (2 + p)) > 1e-10
    assert acceptance("12 t_p / r_p monotonicity", violations == 0, f"{violations} violations")
