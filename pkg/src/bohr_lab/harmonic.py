r"""Bohr-type sums for harmonic mappings ``f = h + conj(g)`` with ``|g'| <= k |h'|``.

The central quantity is

.. math::

    E_f(k, r) = \sum_{n\ge1} |a_n| r^n + \sum_{n\ge1} |b_n| r^n
        + \frac{1 + |a_0| r}{(1 + |a_0|)(1 - r)}
          \left(\|h_0\|_r^2 + c(k) \|g\|_r^2\right)

assembled from certified majorant and weighted-norm enclosures.  The checks
below compare it (plus a head term) with 1 at the predicted radii and locate
the crossover of the extremal pair ``omega_a + k conj(omega_a - a)``.
"""
from __future__ import annotations

import math

import numpy as np

from . import powerseries as ps
from .errors import BadBracket, ParamOutOfRange, PreconditionViolated, RadiusOutOfRange
from .families import HarmonicPair, extremal_harmonic
from .powerseries import Interval
from .quasisub import Crossover, sharpness_scan
from .radii import (Lambda, RadiusParams, corollary6_radius, lambda_a, lambda_root,
                    lambda_root_a, r_1_closed, r_k_p_closed)
from .report import VerificationReport, Verdict, compare

DEFAULT_MARGIN = 1e-9
ONE = Interval.point(1.0)


def _check_r(r: float) -> None:
    if not 0.0 <= r < 1.0:
        raise RadiusOutOfRange(f"radius {r} outside [0, 1)")


def c_of_k(k: float) -> float:
    """0 at ``k = 0`` and ``1/k`` on ``(0, 1]``."""
    if not 0.0 <= k <= 1.0:
        raise ParamOutOfRange(f"k={k} outside [0, 1]")
    return 0.0 if k == 0 else 1.0 / k


def E_f(pair: HarmonicPair, k: float, r: float) -> Interval:
    """Certified enclosure of ``E_f(k, r)``."""
    _check_r(r)
    a0 = pair.a0
    sums = ps.majorant_sum(pair.h, r, 1) + ps.majorant_sum(pair.g, r, 1)
    g_norm = ps.weighted_norm_sq(pair.g, r)
    # 1/k can overflow for subnormal k while ||g||^2 underflows to zero
    g_term = g_norm * c_of_k(k) if g_norm.hi > 0 else Interval.point(0.0)
    norms = ps.weighted_norm_sq(pair.h, r) + g_term
    weight = (1 + a0 * r) / ((1 + a0) * (1 - r))
    return sums + norms * weight


def lemma5_rhs(a0: float, k: float, r: float) -> float:
    """``(1 - a0^2)(1 + k) r / (1 - r)``."""
    return (1 - a0) * (1 + a0) * (1 + k) * r / (1 - r)


def validity_radius(pair: HarmonicPair, k: float) -> float:
    """``r_1(|b_q| / (k |a_q|))``, or 1 when ``k = 0``.

    A ratio above one contradicts ``|g'| <= k |h'|`` near the origin.
    """
    if k == 0:
        return 1.0
    ratio = abs(pair.b_q) / (k * abs(pair.a_q))
    if ratio > 1.0 + 1e-12:
        raise PreconditionViolated(f"|b_q|/(k|a_q|) = {ratio:.6g} > 1: pair is not in H_k")
    return float(r_1_closed(min(ratio, 1.0)))


def _precondition(pair: HarmonicPair, k: float, r: float, strict: bool) -> dict:
    limit = validity_radius(pair, k)
    ok = r <= limit if k else r < 1.0
    if not ok and strict:
        raise PreconditionViolated(f"r={r} exceeds the validity radius {limit:.12g}")
    return {"validity_radius": limit, "precondition": "met" if ok else "violated"}


def lemma5_bound_check(pair: HarmonicPair, k: float, r: float,
                       strict: bool = True) -> VerificationReport:
    """``E_f(k, r) <= (1 - a0^2)(1 + k) r / (1 - r)``.

    Raises :class:`PreconditionViolated` when ``r`` exceeds the validity radius
    unless ``strict`` is false, in which case the violation is only recorded.
    """
    _check_r(r)
    notes = _precondition(pair, k, r, strict)
    lhs = E_f(pair, k, r)
    rhs = Interval.point(lemma5_rhs(pair.a0, k, r))
    return VerificationReport(compare(lhs, rhs), lhs, rhs, radius=r,
                              params={"a": pair.a0, "k": k}, notes=notes)


def eq4_check(pair: HarmonicPair, k: float, r: float, strict: bool = True) -> VerificationReport:
    """``sum_{n>=q} |b_n| r^n <= k sum_{n>=q} |a_n| r^n``."""
    _check_r(r)
    q = pair.q
    notes = _precondition(pair, k, r, strict)
    lhs = ps.majorant_sum(pair.g, r, q)
    rhs = ps.majorant_sum(pair.h, r, q) * k
    return VerificationReport(compare(lhs, rhs), lhs, rhs, radius=r,
                              params={"k": k, "q": q}, notes=notes)


def eq5_check(pair: HarmonicPair, k: float, r: float) -> VerificationReport:
    """``||g||_r^2 <= k^2 ||h_0||_r^2``."""
    _check_r(r)
    lhs = ps.weighted_norm_sq(pair.g, r)
    rhs = ps.weighted_norm_sq(pair.h, r) * (k * k)
    return VerificationReport(compare(lhs, rhs), lhs, rhs, radius=r, params={"k": k})


# head term and the bounds built on it


def schwarz_pick_bound(a0: float, rho: float) -> float:
    """``(rho + a0) / (1 + a0 rho)``: bound on ``|f|`` at ``|z| = rho`` for class B."""
    return (rho + a0) / (1 + a0 * rho)


def _head(params: RadiusParams, r: float) -> float:
    return schwarz_pick_bound(params.a, r**params.m) ** params.p


def F_upper(params: RadiusParams, pair: HarmonicPair, r: float) -> Interval:
    """``((r^m + a)/(1 + a r^m))^p + E_f(k, r)``, dominating ``F`` on ``|z| = r``."""
    _check_r(r)
    return E_f(pair, params.k, r) + _head(params, r)


def F_at(params: RadiusParams, pair: HarmonicPair, z: complex) -> Interval:
    """``|h(z^m)|^p + E_f(k, |z|)`` at one point (diagnostic)."""
    r = abs(z)
    _check_r(r)
    hv = abs(complex(pair.h(complex(z) ** params.m)))
    return E_f(pair, params.k, r) + hv**params.p


def eq9_bound(params: RadiusParams, r: float) -> float:
    """Closed form ``((r^m + a)/(1 + a r^m))^p + (1 + k) r (1 - a^2)/(1 - r)``."""
    _check_r(r)
    return _head(params, r) + lemma5_rhs(params.a, params.k, r)


def eq9_identity_residual(params: RadiusParams, r: float) -> float:
    """``|bound - 1 - lambda / ((1 + a r^m)^p (1 - r))|``."""
    denom = (1 + params.a * r**params.m) ** params.p * (1 - r)
    return abs(eq9_bound(params, r) - 1.0 - lambda_a(params, r) / denom)


def factorization_residual(params: RadiusParams, r: float) -> float:
    """``|lambda(a, r) - (1 + a r^m)^p (1 - r) Lambda(a, r)|``."""
    fac = (1 + params.a * r**params.m) ** params.p * (1 - r)
    return abs(lambda_a(params, r) - fac * Lambda(params, r))


def psi(params: RadiusParams, r: float) -> float:
    """The bracketed quantity whose sign decides ``F >= 1`` for the extremal pair."""
    _check_r(r)
    a, k, m, p = params.a, params.k, params.m, params.p
    if not a < 1.0:
        raise ParamOutOfRange(f"a={a} must be < 1")
    rm = r**m
    head = ((rm + a) / (1 + a * rm)) ** p
    return (1 - r) * (1 + a * rm) ** p * ((1 + a) * (1 + k) * r / (1 - r) - (1 - head) / (1 - a))


def psi_limit(params: RadiusParams, r: float) -> float:
    """``a -> 1`` limit: ``(1-r)(1+r^m)^p [2(1+k) r/(1-r) - p (1-r^m)/(1+r^m)]``."""
    _check_r(r)
    k, m, p = params.k, params.m, params.p
    rm = r**m
    return (1 - r) * (1 + rm) ** p * (2 * (1 + k) * r / (1 - r) - p * (1 - rm) / (1 + rm))


def psi_identity_check(params: RadiusParams, r: float, order: int = ps.DEFAULT_ORDER) -> float:
    """Residual of ``F(r) = 1 + (1-a) Psi / ((1 + a r^m)^p (1 - r))`` for the extremal pair.

    ``F`` is evaluated independently from the series of the extremal pair at
    ``z = r``.
    """
    pair = extremal_harmonic(params.a, params.k, order)
    direct = F_at(params, pair, r).mid
    denom = (1 + params.a * r**params.m) ** params.p * (1 - r)
    return abs(direct - 1.0 - (1 - params.a) * psi(params, r) / denom)


# sampled lemmas for class B


def lemma_c_bound(a0: float, r: float) -> float:
    """``A(r) = r (1 - a0^2)/(1 - r a0)`` if ``a0 >= r``, else ``B(r) = r sqrt(1 - a0^2)/sqrt(1 - r^2)``."""
    _check_r(r)
    if a0 >= r:
        return r * (1 - a0) * (1 + a0) / (1 - r * a0)
    return r * math.sqrt((1 - a0) * (1 + a0)) / math.sqrt(1 - r * r)


def lemma_c_check(f: ps.TruncatedSeries, r: float) -> VerificationReport:
    lhs = ps.majorant_sum(f, r, 1)
    rhs = Interval.point(lemma_c_bound(min(abs(f.coeffs[0]), 1.0), r))
    return VerificationReport(compare(lhs, rhs), lhs, rhs, radius=r)


def lemma_d_check(f: ps.TruncatedSeries, r: float) -> VerificationReport:
    """Refined majorant bound for class B, i.e. :func:`lemma5_bound_check` with ``g = 0``."""
    pair = HarmonicPair(f, ps.TruncatedSeries.zero(f.order), 0.0)
    return lemma5_bound_check(pair, 0.0, r)


# verification at the predicted radii


def side_condition(which: str, params: RadiusParams, pair: HarmonicPair,
                   predicted: float) -> dict:
    """Evaluate ``|b_q| <= 1/(2k|a_q|)`` and the escapes that make it unnecessary."""
    k, p, a = params.k, params.p, params.a
    if k == 0:
        value = True
    else:
        value = abs(pair.b_q) <= 1.0 / (2 * k * abs(pair.a_q))
    if value:
        status = "holds"
    elif k in (0.0, 1.0):
        status = "removed: k in {0,1}"
    elif which in ("c4", "c5", "c6") and p <= 1:
        status = "removed: p in (0,1]"
    elif which in ("3", "c4") and predicted <= 1.0 / 3.0:
        status = "removed: radius <= 1/3"
    elif which == "c5" and p < 2 and k >= (1 + a * a - 2 * a**p) / ((1 - a) * (1 + a)):
        status = "replaced: k >= (1+a^2-2a^p)/(1-a^2)"
    elif which == "c6" and p < 2 and k >= p - 1:
        status = "replaced: k >= p-1"
    else:
        status = "unmet"
    return {"side_condition_value": bool(value), "side_condition": status}


def _scan_upper(fn, predicted: float) -> Crossover:
    r_lo = 0.5 * predicted
    r_hi = predicted + 0.05 * (1 - predicted)
    try:
        return sharpness_scan(fn, ONE, r_lo, r_hi)
    except BadBracket:
        return sharpness_scan(fn, ONE, r_lo, predicted + 0.5 * (1 - predicted))


def extremal_crossover(params: RadiusParams, order: int = ps.DEFAULT_ORDER) -> Crossover:
    """Where ``F_upper`` of ``omega_a + k conj(omega_a - a)`` first exceeds 1."""
    pair = extremal_harmonic(params.a, params.k, order)
    return _scan_upper(lambda r: F_upper(params, pair, r), lambda_root_a(params))


def theorem3_verify(params: RadiusParams, pair: HarmonicPair, margin: float = DEFAULT_MARGIN,
                    scan: bool = True) -> VerificationReport:
    """``F_upper <= 1`` at ``lambda_root_a`` minus ``margin``; ``a`` is taken from the pair."""
    params = params.with_a(min(pair.a0, 1.0))
    predicted = lambda_root_a(params)
    r = max(0.0, predicted - margin)
    lhs = F_upper(params, pair, r)
    notes = side_condition("3", params, pair, predicted)
    if params.p > 2:
        notes["sharpness"] = "not claimed for p > 2"
    bracket = extremal_crossover(params, pair.h.order).bracket if scan else None
    return VerificationReport(compare(lhs, ONE), lhs, ONE, radius=r, predicted_radius=predicted,
                              params=params.as_dict(), crossover_bracket=bracket, notes=notes)


def _limit_crossover(which: str, params: RadiusParams, predicted: float) -> Crossover:
    """Crossover of the ``a -> 1`` limit of ``(quantity - 1)/(1 - a)`` for the extremal pair."""
    if which == "c4":
        return sharpness_scan(lambda r: psi_limit(params, r), 0.0, 0.5 * predicted,
                              predicted + 0.05 * (1 - predicted))
    k, p = params.k, params.p
    return sharpness_scan(lambda r: 2 * (1 + k) * r / (1 - r), p, 0.5 * predicted,
                          predicted + 0.05 * (1 - predicted))


def corollary456_verify(which: str, params: RadiusParams, pair: HarmonicPair,
                        margin: float = DEFAULT_MARGIN, scan: bool = True) -> VerificationReport:
    """Checks at the radii of the ``m``-uniform, ``m -> inf`` and ``a``-uniform variants.

    ``which`` is ``"c4"`` (``F_upper`` at the root of ``lambda_univ``), ``"c5"``
    (``a^p + E_f`` at ``r_k^p(a)``) or ``"c6"`` (``a^p + E_f`` at
    ``p/(2(1+k)+p)``).  Crossovers for ``c4``/``c6`` are those of the
    ``a -> 1`` limit of the extremal pair; for ``c5`` of the pair at ``a``.
    """
    params = params.with_a(min(pair.a0, 1.0))
    if which == "c4":
        predicted = lambda_root(params)
    elif which == "c5":
        predicted = r_k_p_closed(params)
    elif which == "c6":
        predicted = corollary6_radius(params.p, params.k)
    else:
        raise ValueError(f"unknown variant {which!r}; expected c4, c5 or c6")
    r = max(0.0, predicted - margin)
    if which == "c4":
        lhs = F_upper(params, pair, r)
    else:
        lhs = E_f(pair, params.k, r) + params.a**params.p
    notes = side_condition(which, params, pair, predicted)
    bracket = None
    if scan:
        if which == "c5":
            ext = extremal_harmonic(params.a, params.k, pair.h.order)
            cross = _scan_upper(lambda s: E_f(ext, params.k, s) + params.a**params.p, predicted)
        else:
            cross = _limit_crossover(which, params, predicted)
        bracket = cross.bracket
    return VerificationReport(compare(lhs, ONE), lhs, ONE, radius=r, predicted_radius=predicted,
                              params=params.as_dict(), crossover_bracket=bracket, notes=notes)


def remark_identity(r: float, p: float = 1.0, order: int = ps.DEFAULT_ORDER) -> tuple[Interval, float]:
    """``|h(0)|^p + E_f(1, r)`` for ``f = z + conj(z)`` and the closed form ``2r/(1-r)``."""
    from .families import z_plus_conj_z
    pair = z_plus_conj_z(order)
    return E_f(pair, 1.0, r) + pair.a0**p, 2 * r / (1 - r)


def crossover_check(predicted: float, cross: Crossover, tol: float) -> bool:
    """Whether the certified bracket lies within ``tol`` of ``predicted``."""
    lo, hi = cross.bracket
    return predicted - tol <= lo and hi <= predicted + tol


def lambda_a_monotone_in_a(params: RadiusParams, r: float, grid: np.ndarray) -> bool:
    """``Lambda(a, r)`` nondecreasing along ``grid`` of ``a`` values (``a = 1`` allowed)."""
    vals = []
    for a in grid:
        q = params.with_a(float(a))
        rm = r**q.m
        vals.append(schwarz_pick_bound(q.a, rm) ** q.p + (1 + q.k) * (1 - q.a) * (1 + q.a) * r / (1 - r) - 1.0)
    return bool(np.all(np.diff(vals) >= -1e-15))


__all__ = [
    "DEFAULT_MARGIN", "E_f", "F_at", "F_upper", "Lambda", "c_of_k", "corollary456_verify",
    "crossover_check", "eq4_check", "eq5_check", "eq9_bound", "eq9_identity_residual",
    "extremal_crossover", "factorization_residual", "lambda_a", "lambda_a_monotone_in_a",
    "lemma5_bound_check", "lemma5_rhs", "lemma_c_bound", "lemma_c_check", "lemma_d_check",
    "psi", "psi_identity_check", "psi_limit", "remark_identity", "schwarz_pick_bound",
    "side_condition", "theorem3_verify", "validity_radius", "Verdict",
]
