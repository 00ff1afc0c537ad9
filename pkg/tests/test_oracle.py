import numpy as np
import pytest

from bohr_lab import families as fam
from bohr_lab import oracle
from bohr_lab import powerseries as ps
from bohr_lab import props
from bohr_lab import quasisub as qs
from bohr_lab.errors import ParamOutOfRange, RadiusOutOfRange


def test_dft_constant():
    c = oracle.dft_coefficients(lambda z: np.ones_like(z), 0.5, 10)
    assert abs(c.coeffs[0] - 1) <= 1e-15
    assert np.abs(c.coeffs[1:]).max() <= 1e-12


def test_dft_automorphism():
    a = 0.5
    c = oracle.dft_coefficients(lambda z: (z + a) / (1 + a * z), 0.5, 20)
    assert oracle.max_coefficient_gap(c, fam.disk_automorphism(a), 20) <= 1e-10


def test_dft_quasi_compose():
    Phi, g, w = props.random_triple(5)
    c = oracle.dft_coefficients(lambda z: Phi(z) * g(w(z)), 0.7, 64)
    assert oracle.max_coefficient_gap(c, qs.quasi_compose(Phi, g, w), 64) <= 1e-9


def test_dft_rejects_bad_arguments():
    f = np.exp
    with pytest.raises(ParamOutOfRange):
        oracle.dft_coefficients(f, 1.0, 4)
    with pytest.raises(ParamOutOfRange):
        oracle.dft_coefficients(f, 0.5, -1)
    with pytest.raises(ParamOutOfRange):
        oracle.dft_coefficients(f, 0.5, 100, samples=300)


def test_dft_reevaluation():
    ev = fam.blaschke_evaluator(5, 42)
    c = oracle.dft_coefficients(ev, 0.7, 64)
    z = oracle.circle_points(0.3, 50)
    np.testing.assert_allclose(c(z), ev(z), atol=1e-9)


def test_grid_modulus_blaschke():
    assert oracle.grid_modulus_check(fam.blaschke_evaluator(4, 3), 0.99) <= 1 + 1e-12


def test_grid_modulus_detects_non_member():
    r = 0.95
    assert oracle.grid_modulus_check(lambda z: 1.1 * z, r) == pytest.approx(1.1 * r)
    assert oracle.grid_modulus_check(lambda z: 1.1 * z, r) > 1


def test_grid_modulus_automorphism():
    a = 0.6
    for r in (0.2, 0.8):
        m = oracle.grid_modulus_check(lambda z: (z + a) / (1 + a * z), r)
        assert m == pytest.approx((r + a) / (1 + a * r), abs=1e-10)


def test_grid_modulus_radius_check():
    with pytest.raises(RadiusOutOfRange):
        oracle.grid_modulus_check(np.exp, 1.0)


def test_dilatation_extremal_and_zero():
    for a, k in ((0.2, 0.4), (0.9, 1.0)):
        res = oracle.dilatation_check(fam.extremal_harmonic(a, k), k, 0.5)
        assert abs(res.max_ratio - k) <= 1e-10
        assert res.skipped == 0 and res.n_points == 256
    assert oracle.dilatation_check(fam.extremal_harmonic(0.3, 0.0), 0.0, 0.5).max_ratio == 0.0


def test_dilatation_constructed_pair():
    for seed in range(5):
        k = 0.8
        res = oracle.dilatation_check(fam.random_hk_pair(k, seed), k, 0.9)
        assert res.max_ratio <= k + 1e-10


def test_dilatation_reports_critical_points():
    h = ps.TruncatedSeries.monomial(1.0, 2, 10)
    pair = fam.HarmonicPair(h, ps.TruncatedSeries.zero(10), 0.0)
    res = oracle.dilatation_check(pair, 0.0, 0.0, n_points=16)
    assert res.skipped == 16


def test_analytic_derivative():
    df = oracle.analytic_derivative(np.exp)
    z = np.array([0.1 + 0.2j, -0.5])
    np.testing.assert_allclose(np.asarray(df(z), dtype=complex), np.exp(z), atol=1e-13)


def test_family_members_agree():
    res = props.oracle_equivalence(seed=3)
    assert res.passed, res.detail
