import math

import numpy as np
import pytest

from bohr_lab import families as fam
from bohr_lab import oracle
from bohr_lab import powerseries as ps
from bohr_lab import quasisub as qs
from bohr_lab import radii as rd
from bohr_lab.errors import BadBracket, NonVanishingInnerConstant, RadiusOutOfRange
from bohr_lab.powerseries import TruncatedSeries
from bohr_lab.report import Verdict


def test_quasi_compose_trivial():
    g = fam.random_blaschke(3, 2)
    out = qs.quasi_compose(TruncatedSeries.constant(1.0), g, TruncatedSeries.monomial(1.0, 1))
    np.testing.assert_allclose(out.coeffs, g.coeffs, atol=1e-15)


def test_quasi_compose_corollary3_extremal():
    b1, a = 0.6, 0.4
    out = qs.quasi_compose(fam.disk_automorphism(a), TruncatedSeries.monomial(b1, 1),
                           TruncatedSeries.monomial(1.0, 1))
    np.testing.assert_allclose(out.coeffs, fam.monomial_extremal(1, b1, a).coeffs, atol=1e-15)


def test_quasi_compose_rejects_inner_constant():
    with pytest.raises(NonVanishingInnerConstant):
        qs.quasi_compose(TruncatedSeries.constant(1.0), fam.disk_automorphism(0.2),
                         fam.disk_automorphism(0.3))


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_quasi_compose_against_dft(seed):
    Phi, g, w = (fam.random_polynomial(5, seed), fam.random_polynomial(6, seed + 100),
                 fam.random_polynomial(4, seed + 200, vanish_at_zero=True))
    out = qs.quasi_compose(Phi, g, w)
    dft = oracle.dft_coefficients(lambda z: Phi(z) * g(w(z)), 0.7, 64)
    assert oracle.max_coefficient_gap(out, dft, 64) <= 1e-9


def test_majorant_compare_equal_series():
    g = fam.random_blaschke(4, 8)
    for r in (0.0, 0.3, 0.6, 0.8):
        assert qs.majorant_compare(g, g, r).verdict is Verdict.HOLDS


def test_majorant_compare_radius_check():
    g = fam.disk_automorphism(0.1)
    with pytest.raises(RadiusOutOfRange):
        qs.majorant_compare(g, g, 1.0)


@pytest.mark.parametrize("a", [0.5, 0.7, 0.9])
def test_corollary3_extremal_threshold(a):
    b1 = 0.8
    f = fam.monomial_extremal(1, b1, a)
    g = TruncatedSeries.monomial(b1, 1)
    edge = 1 / (1 + 2 * a)
    assert qs.majorant_compare(f, g, edge - 1e-6).verdict is Verdict.HOLDS
    assert qs.majorant_compare(f, g, edge + 1e-6).verdict is Verdict.FAILS
    cross = qs.sharpness_scan(f, g, 0.05, 0.95)
    assert abs(cross.estimate - edge) <= 1e-9


def test_corollary3_small_a_threshold():
    b = 1 / math.sqrt(2)
    f = fam.monomial_extremal(2, 0.5, b)
    g = TruncatedSeries.monomial(0.5, 1)
    cross = qs.sharpness_scan(f, g, 0.1, 0.95)
    assert abs(cross.estimate - b) <= 1e-9


def test_corollary2_holds_below_alpha_plus():
    a = 0.9
    f = fam.corollary2_function(a)
    g = TruncatedSeries.monomial(1.0, 2)
    cross = qs.corollary2_crossover(a)
    assert cross.fails_at <= rd.alpha_plus(a) + 1e-7
    assert qs.majorant_compare(f, g, cross.holds_at).verdict is Verdict.HOLDS
    assert qs.majorant_compare(f, g, rd.alpha_plus(a) + 1e-3).verdict is Verdict.FAILS


def test_theorem2_radius_reexport():
    assert qs.theorem2_radius(0.3, 0.7) == rd.theorem2_radius(0.3, 0.7)


def test_S_a_closed_values():
    for a in (0.75, 0.9, 0.99):
        assert qs.S_a_closed(a, rd.alpha_plus(a)) == pytest.approx(1.0, abs=1e-12)
        assert qs.S_a_closed(a, 0.0) == pytest.approx(a * a, abs=1e-14)


def test_S_a_matches_unfactored_form():
    for a in (0.75, 0.9):
        for r in np.linspace(0, 0.95, 11):
            direct = 2 * a * a - ((r - a) / (1 - a * r)) ** 2
            assert qs.S_a_closed(a, r) == pytest.approx(direct, abs=1e-13)


def test_S_aN_two_ways():
    a, r = 0.9, 0.3
    maj = ps.majorant_sum(fam.corollary2_function(a), r)
    from_series = maj.mid / r**2
    assert qs.S_aN_truncated(a, r, 198) == pytest.approx(from_series, abs=1e-9)
    assert qs.S_aN_closed(a, r) == pytest.approx(from_series, abs=1e-9)
    assert qs.S_aN_closed(a, r) >= qs.S_a_closed(a, r)


def test_S_a_iff_grid():
    for a in (0.75, 0.8, 0.9, 0.95):
        ap, am = rd.alpha_plus(a), rd.alpha_minus(a)
        for r in np.linspace(0, 0.999, 1000):
            s = qs.S_a_closed(a, r)
            if abs(r - ap) > 1e-9 and abs(r - am) > 1e-9:
                assert (s <= 1) == (r <= ap or r >= am)


def test_sharpness_scan_requires_bracket():
    f = fam.disk_automorphism(0.5)
    with pytest.raises(BadBracket):
        qs.sharpness_scan(lambda r: qs.bohr_head_sum(f, 1.0, r), 1.0, 0.6, 0.9)


def test_sharpness_scan_automorphism():
    for p in (0.5, 1.0, 2.0):
        for a in (rd.C_p(p), 0.8):
            f = fam.disk_automorphism(a)
            cross = qs.sharpness_scan(lambda r: qs.bohr_head_sum(f, p, r), 1.0, 0.01, 0.99)
            assert cross.holds_at <= cross.fails_at
            assert abs(cross.estimate - rd.r_p(p, a)) <= 1e-9


def test_bohr_head_sum_closed_form():
    a = 0.6
    for p in (0.5, 1.0, 3.0):
        for r in (0.2, 0.5, 0.8):
            enc = qs.bohr_head_sum(fam.disk_automorphism(a), p, r)
            assert enc.contains(a**p + (1 - a * a) * r / (1 - a * r), tol=1e-14)


def test_bohr_head_sum_constant():
    c = TruncatedSeries.constant(0.4 + 0.3j)
    for r in (0.1, 0.9):
        assert qs.bohr_head_sum(c, 2.0, r).hi == pytest.approx(0.25)


@pytest.mark.parametrize("seed", range(10))
def test_classical_bohr(seed):
    f = fam.random_blaschke(1 + seed % 5, seed)
    assert qs.bohr_head_sum(f, 1.0, 1 / 3).hi <= 1 + 1e-12


def test_theorem1_report_on_extremal():
    rep = qs.theorem1_report(fam.disk_automorphism(0.8), 1.0)
    assert rep.verdict is Verdict.HOLDS
    assert rep.predicted_radius == pytest.approx(1 / 2.6)
    assert set(rep.to_dict()) >= {"params", "verdict", "lhs", "rhs", "crossover_bracket"}


def test_theorem2_and_majorization_reports():
    Phi, g, w = (fam.random_blaschke(2, 4), fam.random_blaschke(3, 5),
                 fam.random_polynomial(3, 6, vanish_at_zero=True))
    assert qs.theorem2_report(Phi, g, w).holds
    assert qs.majorization_report(Phi, g).holds


def test_sign_change_index_matches_definition():
    for a in np.linspace(0.05, 0.995, 60):
        n = qs.sign_change_index(a)
        assert (n - 1) / (n + 1) <= a * a + 1e-15
        assert a * a < n / (n + 2)
