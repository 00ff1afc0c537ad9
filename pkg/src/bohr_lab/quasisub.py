"""Majorant comparison under quasi-subordination and crossover scans.

``f = Phi * (g o w)`` with ``Phi`` in class B and ``w(0) = 0`` has its
majorant series dominated by that of ``g`` on a computable disk.  This module
builds ``f`` from its three ingredients, compares majorants with certified
enclosures and bisects for the radius where a comparison flips.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

from . import powerseries as ps
from .errors import BadBracket, ParamOutOfRange, RadiusOutOfRange
from .families import corollary2_coefficient
from .powerseries import Interval, TruncatedSeries
from .radii import RadiusParams, alpha_minus, alpha_plus, r_1_closed, theorem2_radius
from .report import VerificationReport, Verdict, compare

__all__ = [
    "Crossover", "bohr_head_sum", "corollary2_crossover", "majorant_compare",
    "quasi_compose", "S_aN_closed", "S_aN_truncated", "S_a_closed",
    "sharpness_scan", "sign_change_index", "theorem2_radius",
]

SCAN_TOL = 1e-12

Side = Union[TruncatedSeries, Callable[[float], "Interval | float"], float]


def quasi_compose(Phi: TruncatedSeries, g: TruncatedSeries, w: TruncatedSeries) -> TruncatedSeries:
    """Series of ``Phi(z) * g(w(z))``."""
    return ps.cauchy_product(Phi, ps.compose(g, w))


def bohr_head_sum(f: TruncatedSeries, p: float, r: float) -> Interval:
    """Enclosure of ``|c_0|**p + sum_{k >= 1} |c_k| r**k``."""
    if not p > 0:
        raise ParamOutOfRange(f"p={p} must be positive")
    return ps.majorant_sum(f, r, from_index=1) + abs(f.coeffs[0]) ** p


def _as_interval(side: Side, r: float) -> Interval:
    if isinstance(side, TruncatedSeries):
        return ps.majorant_sum(side, r)
    val = side(r) if callable(side) else side
    return val if isinstance(val, Interval) else Interval.point(float(val))


def majorant_compare(f: TruncatedSeries, g: TruncatedSeries, r: float) -> VerificationReport:
    """Check ``sum |a_k| r**k <= sum |b_k| r**k`` for ``f = sum a_k z**k``, ``g = sum b_k z**k``."""
    if not 0.0 <= r < 1.0:
        raise RadiusOutOfRange(f"radius {r} outside [0, 1)")
    lhs, rhs = ps.majorant_sum(f, r), ps.majorant_sum(g, r)
    return VerificationReport(compare(lhs, rhs), lhs, rhs, radius=r)


@dataclass(frozen=True)
class Crossover:
    """Certified location of the flip from HOLDS to FAILS.

    ``holds_at`` is the largest probed radius with verdict HOLDS and
    ``fails_at`` the smallest with FAILS.  ``inconclusive`` is the width of
    the zone in between that interval arithmetic could not decide.
    """

    holds_at: float
    fails_at: float
    inconclusive: float

    def __post_init__(self) -> None:
        for name in ("holds_at", "fails_at", "inconclusive"):
            object.__setattr__(self, name, float(getattr(self, name)))

    @property
    def bracket(self) -> tuple[float, float]:
        return (self.holds_at, self.fails_at)

    @property
    def estimate(self) -> float:
        return 0.5 * (self.holds_at + self.fails_at)

    def __float__(self) -> float:
        return self.estimate


def sharpness_scan(lhs: Side, rhs: Side, r_lo: float, r_hi: float,
                   tol: float = SCAN_TOL) -> Crossover:
    """Bisect for the radius where ``lhs <= rhs`` stops holding.

    Each side is a series (compared through its majorant sum), a callable
    returning an :class:`Interval` or a float, or a constant.  The verdict must
    be HOLDS at ``r_lo`` and FAILS at ``r_hi``; the two boundaries of any
    undecided zone are located separately.
    """
    def verdict(r: float) -> Verdict:
        return compare(_as_interval(lhs, r), _as_interval(rhs, r))

    v_lo, v_hi = verdict(r_lo), verdict(r_hi)
    if v_lo is not Verdict.HOLDS or v_hi is not Verdict.FAILS:
        raise BadBracket(f"need HOLDS at {r_lo} and FAILS at {r_hi}, got {v_lo.value}, {v_hi.value}")

    # last HOLDS
    lo, hi = r_lo, r_hi
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if verdict(mid) is Verdict.HOLDS:
            lo = mid
        else:
            hi = mid
    holds_at, first_not = lo, hi
    # first FAILS, searched above the HOLDS boundary
    lo, hi = holds_at, r_hi
    if verdict(first_not) is Verdict.FAILS:
        hi = first_not
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if verdict(mid) is Verdict.FAILS:
            hi = mid
        else:
            lo = mid
    return Crossover(holds_at, hi, max(0.0, lo - first_not))


# z**2 times a squared disk automorphism: the sign pattern of its coefficients


def sign_change_index(a: float) -> int:
    """``N`` with ``(N-1)/(N+1) <= a**2 < N/(N+2)``; ``A_k <= 0`` exactly for ``1 <= k <= N``."""
    if not 0.0 < a < 1.0:
        raise ParamOutOfRange(f"a={a} outside (0, 1)")
    return int(math.floor((1 + a * a) / ((1 - a) * (1 + a))))


def _check_alpha_range(a: float) -> None:
    if not 1 / math.sqrt(2) <= a < 1.0:
        raise ParamOutOfRange(f"a={a} outside [1/sqrt(2), 1)")


def S_a_closed(a: float, r: float) -> float:
    """Lower envelope ``1 - (1-a^2)(1+2a^2)(r - alpha_+)(r - alpha_-)/(1 - a r)^2``."""
    _check_alpha_range(a)
    if not 0.0 <= r < 1.0:
        raise RadiusOutOfRange(f"radius {r} outside [0, 1)")
    ap, am = alpha_plus(a), alpha_minus(a)
    return 1.0 - (1 - a) * (1 + a) * (1 + 2 * a * a) * (r - ap) * (r - am) / (1 - a * r) ** 2


def S_aN_truncated(a: float, r: float, terms: int) -> float:
    """``sum_{k=0}^{terms} |A_k| r**k`` by direct summation."""
    if not 0.0 < a < 1.0:
        raise ParamOutOfRange(f"a={a} outside (0, 1)")
    if not 0.0 <= r < 1.0:
        raise RadiusOutOfRange(f"radius {r} outside [0, 1)")
    k = np.arange(terms + 1)
    return float(np.sum(np.abs(corollary2_coefficient(a, k)) * r**k))


def S_aN_closed(a: float, r: float) -> float:
    """Full majorant ``sum_k |A_k| r**k`` from the sign pattern.

    ``sum_k A_k r**k = ((r - a)/(1 - a r))**2`` and only ``A_1..A_N`` are
    negative, so flipping them costs ``-2 sum_{k=1}^N A_k r**k``.
    """
    if not 0.0 <= r < 1.0:
        raise RadiusOutOfRange(f"radius {r} outside [0, 1)")
    n = sign_change_index(a)
    k = np.arange(1, n + 1)
    neg = float(np.sum(corollary2_coefficient(a, k) * r**k))
    return ((r - a) / (1 - a * r)) ** 2 - 2.0 * neg


def corollary2_crossover(a: float, order: int = ps.DEFAULT_ORDER,
                         tol: float = SCAN_TOL) -> Crossover:
    """Crossover of ``z**2 ((z-a)/(1-az))**2`` against ``z**2`` in majorant."""
    from .families import corollary2_function
    f = corollary2_function(a, order)
    g = TruncatedSeries.monomial(1.0, 2, order)
    r_lo = 0.5 * r_1_closed(a * a)
    return sharpness_scan(f, g, r_lo, 0.9, tol)


def theorem2_report(Phi: TruncatedSeries, g: TruncatedSeries, w: TruncatedSeries,
                    margin: float = 1e-6) -> VerificationReport:
    """Majorant comparison at the quasi-subordination radius minus ``margin``."""
    phi0, wp0 = abs(Phi.coeffs[0]), abs(w.coeffs[1])
    radius = theorem2_radius(min(phi0, 1.0), min(wp0, 1.0))
    r = max(0.0, radius - margin)
    rep = majorant_compare(quasi_compose(Phi, g, w), g, r)
    return VerificationReport(rep.verdict, rep.lhs, rep.rhs, radius=r, predicted_radius=radius,
                              params={"phi0": phi0, "wprime0": wp0})


def majorization_report(Phi: TruncatedSeries, g: TruncatedSeries,
                        margin: float = 1e-6) -> VerificationReport:
    """``f = Phi g`` against ``g`` at ``r_1(|a_q / b_q|)`` minus ``margin``."""
    f = ps.cauchy_product(Phi, g)
    gc = np.abs(g.coeffs)
    q = int(np.flatnonzero(gc > ps.ZERO_TOL * max(1.0, gc.max()))[0])
    ratio = min(1.0, abs(f.coeffs[q]) / gc[q])
    radius = float(r_1_closed(ratio))
    r = max(0.0, radius - margin)
    rep = majorant_compare(f, g, r)
    return VerificationReport(rep.verdict, rep.lhs, rep.rhs, radius=r, predicted_radius=radius,
                              params={"q": q, "ratio": ratio})


def theorem1_report(f: TruncatedSeries, p: float, margin: float = 0.0) -> VerificationReport:
    """``|c_0|**p + sum_{k>=1} |c_k| r**k <= 1`` at ``r = r_p(|c_0|) - margin``."""
    from .radii import r_p
    a0 = min(abs(f.coeffs[0]), 1.0)
    radius = float(r_p(p, a0))
    r = max(0.0, radius - margin)
    lhs = bohr_head_sum(f, p, r)
    return VerificationReport(compare(lhs, Interval.point(1.0), slack=1e-9), lhs,
                              Interval.point(1.0), radius=r, predicted_radius=radius,
                              params=RadiusParams(p, a=a0).as_dict())
