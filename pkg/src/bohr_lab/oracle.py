"""Brute-force cross-checks that share no code path with the series engine.

Coefficients come from the discrete Cauchy integral on a circle, computed in
extended precision.  The aliasing error of that rule is

``c_n^dft - c_n = sum_{j >= 1} c_{n + jS} rho**(jS)``

which for ``|c_n| <= 1``, ``S >= 256`` and ``rho <= 0.7`` is below ``1e-39``;
the remaining error is the floating-point one, amplified by ``rho**-n``.
"""
from __future__ import annotations

from typing import Callable, NamedTuple

import numpy as np
import scipy.fft

from .errors import ParamOutOfRange, RadiusOutOfRange
from .families import HarmonicPair
from .powerseries import TruncatedSeries

Evaluator = Callable[[np.ndarray], np.ndarray]

# pi in extended precision; np.pi alone limits the phases to double accuracy
_PI = 4 * np.arctan(np.longdouble(1))


def circle_points(rho: float, n_points: int, extended: bool = False) -> np.ndarray:
    """``rho * exp(2 pi i j / n_points)`` for ``j = 0 .. n_points - 1``."""
    if extended:
        theta = 2 * _PI * np.arange(n_points, dtype=np.longdouble) / n_points
        return np.longdouble(rho) * (np.cos(theta) + 1j * np.sin(theta)).astype(np.clongdouble)
    theta = 2 * np.pi * np.arange(n_points) / n_points
    return rho * np.exp(1j * theta)


def dft_coefficients(evaluator: Evaluator, rho: float, n_max: int,
                     samples: int | None = None) -> TruncatedSeries:
    """Taylor coefficients ``c_0 .. c_{n_max}`` from samples on ``|z| = rho``.

    ``samples`` defaults to ``max(256, 8 n_max)``.  The tail cap is the Cauchy
    estimate ``max|f| / rho**n`` with ``max|f|`` taken over the samples, so it
    is indicative rather than certified.
    """
    if not 0.0 < rho < 1.0:
        raise ParamOutOfRange(f"rho={rho} outside (0, 1)")
    if n_max < 0:
        raise ParamOutOfRange(f"n_max={n_max} must be >= 0")
    s = samples if samples is not None else max(256, 8 * n_max)
    if s < 4 * n_max or s < 1:
        raise ParamOutOfRange(f"{s} samples is fewer than 4 * n_max = {4 * n_max}")
    z = circle_points(rho, s, extended=True)
    vals = np.asarray(evaluator(z), dtype=np.clongdouble)
    spectrum = scipy.fft.fft(vals)[: n_max + 1] / s
    scale = np.longdouble(rho) ** np.arange(n_max + 1, dtype=np.longdouble)
    coeffs = (spectrum / scale).astype(complex)
    fmax = float(np.abs(vals).max())
    cap = fmax / rho ** (n_max + 1) if fmax else 0.0
    return TruncatedSeries(coeffs, cap, 1.0 / rho)


def series_evaluator(f: TruncatedSeries) -> Evaluator:
    """Pointwise evaluation of the stored polynomial part of ``f``."""
    return f.evaluate


def analytic_derivative(evaluator: Evaluator, delta: float = 0.05, points: int = 64) -> Evaluator:
    """``f'`` from the trapezoidal Cauchy integral on small circles ``|zeta - z| = delta``.

    Only pointwise values of ``f`` are used.  For ``f`` analytic on a disk of
    radius ``R`` around each ``z`` the error decays like ``(delta/R)**points``.
    """
    offs = circle_points(delta, points, extended=True)
    inv = np.conj(offs) / np.longdouble(delta) ** 2

    def df(z):
        z = np.asarray(z, dtype=np.clongdouble)
        vals = evaluator(z[..., None] + offs)
        return np.mean(np.asarray(vals, dtype=np.clongdouble) * inv, axis=-1)

    return df


def grid_modulus_check(evaluator: Evaluator, r: float, n_points: int = 512) -> float:
    """``max |f|`` over ``n_points`` equally spaced points of ``|z| = r``."""
    if not 0.0 <= r < 1.0:
        raise RadiusOutOfRange(f"radius {r} outside [0, 1)")
    return float(np.abs(evaluator(circle_points(r, n_points))).max())


class DilatationResult(NamedTuple):
    """Largest ``|g'/h'|`` on the grid and how many points were too close to a critical point."""

    max_ratio: float
    skipped: int
    n_points: int

    def __float__(self) -> float:
        return self.max_ratio


def dilatation_check(pair: HarmonicPair, k: float, r: float, n_points: int = 256,
                     critical_tol: float = 1e-14) -> DilatationResult:
    """Sampled ``|g'| / |h'|`` on ``|z| = r``; compare the result with ``k``.

    Uses the stored polynomial parts of ``h'`` and ``g'`` only, so it is a
    heuristic membership test.  Points with ``|h'| < critical_tol`` are skipped
    and counted.
    """
    from .powerseries import derivative
    if not 0.0 <= r < 1.0:
        raise RadiusOutOfRange(f"radius {r} outside [0, 1)")
    z = circle_points(r, n_points)
    dh = np.abs(derivative(pair.h)(z))
    dg = np.abs(derivative(pair.g)(z)) if pair.g.order >= 1 else np.zeros(n_points)
    keep = dh >= critical_tol
    ratio = float((dg[keep] / dh[keep]).max()) if keep.any() else 0.0
    return DilatationResult(ratio, int((~keep).sum()), n_points)


def hk_membership(pair: HarmonicPair, k: float, radii=(0.3, 0.6, 0.9), n_points: int = 256,
                  slack: float = 1e-10) -> bool:
    """Non-certified ``H_k`` test: dilatation bound on three circles and ``|h| <= 1`` on the outer one."""
    ok = all(dilatation_check(pair, k, r, n_points).max_ratio <= k + slack for r in radii)
    return ok and grid_modulus_check(pair.h.evaluate, max(radii), n_points) <= 1 + slack


def max_coefficient_gap(a: TruncatedSeries, b: TruncatedSeries, n_max: int) -> float:
    """``max_{n <= n_max} |a_n - b_n|``."""
    n = min(n_max, a.order, b.order)
    return float(np.abs(a.coeffs[: n + 1] - b.coeffs[: n + 1]).max())
