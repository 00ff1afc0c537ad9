r"""Closed-form Bohr-type radii and root-finders for the radius equations.

Functions of a single abscissa ``x`` accept scalars or numpy arrays and
return the same shape.  Endpoints where a formula degenerates to ``0/0`` are
filled in with their limits.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.optimize import bisect

from .errors import BadBracket, ParamOutOfRange

ROOT_XTOL = 1e-15
RESIDUAL_TOL = 1e-10


@dataclass(frozen=True)
class RadiusParams:
    """Scalar parameters entering the radius formulas.

    ``p`` is the exponent on ``|h(0)|``, ``k`` the dilatation bound, ``m`` the
    power in ``h(z**m)`` and ``a = |h(0)|``.
    """

    p: float
    k: float = 0.0
    m: int = 1
    a: float = 0.0

    def __post_init__(self) -> None:
        if not self.p > 0:
            raise ParamOutOfRange(f"p={self.p} must be positive")
        if not 0.0 <= self.k <= 1.0:
            raise ParamOutOfRange(f"k={self.k} outside [0, 1]")
        if int(self.m) != self.m or self.m < 1:
            raise ParamOutOfRange(f"m={self.m} must be a positive integer")
        if not 0.0 <= self.a <= 1.0:
            raise ParamOutOfRange(f"a={self.a} outside [0, 1]")
        object.__setattr__(self, "m", int(self.m))

    def with_a(self, a: float) -> "RadiusParams":
        return RadiusParams(self.p, self.k, self.m, a)

    def as_dict(self) -> dict:
        return {"p": self.p, "k": self.k, "m": self.m, "a": self.a}


def _scalar_or_array(x, out):
    return float(out) if np.ndim(x) == 0 else out


def _check_x(p: float, x) -> np.ndarray:
    if not p > 0:
        raise ParamOutOfRange(f"p={p} must be positive")
    xa = np.asarray(x, dtype=float)
    if np.any((xa < 0) | (xa > 1)) or np.any(np.isnan(xa)):
        raise ParamOutOfRange(f"x outside [0, 1]: {x}")
    return xa


def _one_minus_pow(x: np.ndarray, p: float) -> np.ndarray:
    """``1 - x**p`` without cancellation near ``x = 1``."""
    with np.errstate(divide="ignore"):
        lx = np.log(x)
    return np.where(x == 0, 1.0, -np.expm1(p * lx))


def t_p(p: float, x):
    """``(1 - x**2) / (1 - x**p)``; ``2/p`` at ``x = 1``."""
    xa = _check_x(p, x)
    inner = np.where(xa < 1, xa, 0.5)
    val = _one_minus_pow(inner, 2.0) / _one_minus_pow(inner, p)
    return _scalar_or_array(x, np.where(xa < 1, val, 2.0 / p))


def _bisect(fn, lo: float, hi: float) -> float:
    flo, fhi = fn(lo), fn(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise BadBracket(f"no sign change on [{lo}, {hi}]: f={flo:.3g}, {fhi:.3g}")
    return bisect(fn, lo, hi, xtol=ROOT_XTOL, rtol=4 * np.finfo(float).eps, maxiter=200)


@lru_cache(maxsize=256)
def C_p(p: float) -> float:
    """Unique root of ``1 - x - x**p`` in ``(0, 1)``."""
    if not p > 0:
        raise ParamOutOfRange(f"p={p} must be positive")
    return _bisect(lambda x: 1.0 - x - x**p, 0.0, 1.0)


def r_p(p: float, x):
    """Three-branch radius: the sharp Bohr radius for ``|a_0| = x`` when ``x >= C(p)``."""
    xa = _check_x(p, x)
    c = C_p(p)
    inner = np.where(xa < 1, xa, 0.5)
    one_xp = _one_minus_pow(inner, p)
    one_x2 = _one_minus_pow(inner, 2.0)
    low = one_xp / np.sqrt(one_x2 + one_xp**2)
    high = one_xp / (one_x2 + inner * one_xp)
    out = np.where(xa < c, low, high)
    out = np.where(xa < 1, out, p / (2.0 + p))
    return _scalar_or_array(x, out)


def r_1_closed(x):
    """``sqrt((1 - x)/2)`` on ``[0, 1/2)`` and ``1/(1 + 2x)`` on ``[1/2, 1]``."""
    xa = np.asarray(x, dtype=float)
    if np.any((xa < 0) | (xa > 1)):
        raise ParamOutOfRange(f"x outside [0, 1]: {x}")
    out = np.where(xa < 0.5, np.sqrt((1 - xa) / 2), 1 / (1 + 2 * xa))
    return _scalar_or_array(x, out)


# Theorem-3 family: head term from Schwarz-Pick plus the E_f majorant


def _head(params: RadiusParams, r: float) -> float:
    rm = r**params.m
    return ((rm + params.a) / (1 + params.a * rm)) ** params.p


def Lambda(params: RadiusParams, r: float) -> float:
    """``((r^m + a)/(1 + a r^m))^p + (1+k)(1-a^2) r/(1-r) - 1``; increasing in ``r``."""
    if not 0.0 <= r < 1.0:
        from .errors import RadiusOutOfRange
        raise RadiusOutOfRange(f"radius {r} outside [0, 1)")
    a, k = params.a, params.k
    return _head(params, r) + (1 + k) * (1 - a) * (1 + a) * r / (1 - r) - 1.0


def lambda_a(params: RadiusParams, r: float) -> float:
    """Polynomial-like form ``{[(1+k)(1-a^2)+1] r - 1}(1+a r^m)^p + (1-r)(r^m+a)^p``."""
    a, k, m, p = params.a, params.k, params.m, params.p
    rm = r**m
    return ((((1 + k) * (1 - a) * (1 + a) + 1) * r - 1) * (1 + a * rm) ** p
            + (1 - r) * (rm + a) ** p)


def lambda_univ(params: RadiusParams, r: float) -> float:
    """``2(1+k) r (1 + r^m) - p (1 - r)(1 - r^m)``; ``a`` plays no role."""
    k, m, p = params.k, params.m, params.p
    rm = r**m
    return 2 * (1 + k) * r * (1 + rm) - p * (1 - r) * (1 - rm)


def lambda_root_a(params: RadiusParams) -> float:
    """Unique root in ``(0, 1)`` of :func:`lambda_a`, via bisection on :func:`Lambda`.

    For ``p > 2`` the root is still well defined (``Lambda`` stays increasing in
    ``r``); no sharpness statement is attached to it.
    """
    if not params.a < 1.0:
        raise ParamOutOfRange(f"a={params.a} must be < 1")
    if lambda_a(params, 0.0) >= 0 or lambda_a(params, 1.0) <= 0:
        raise BadBracket("lambda(a, 0) < 0 < lambda(a, 1) fails")
    hi = 1.0 - 1e-15
    root = _bisect(lambda r: Lambda(params, r), 0.0, hi)
    if abs(lambda_a(params, root)) > RESIDUAL_TOL:
        raise ArithmeticError(f"root residual {lambda_a(params, root):.3g} too large")
    return root


def lambda_root(params: RadiusParams) -> float:
    """Unique root in ``(0, 1)`` of :func:`lambda_univ`; obeys ``r <= p/(2(1+k)+p)``."""
    root = _bisect(lambda r: lambda_univ(params, r), 0.0, 1.0)
    bound = params.p / (2 * (1 + params.k) + params.p)
    if root > bound + 1e-15:
        raise ArithmeticError(f"root {root} exceeds p/(2(1+k)+p) = {bound}")
    return root


def r_k_p_closed(params: RadiusParams) -> float:
    """``(1 - a^p) / (1 - a^p + (1+k)(1-a^2))``."""
    a, k, p = params.a, params.k, params.p
    if not a < 1.0:
        raise ParamOutOfRange(f"a={a} must be < 1")
    one_ap = float(_one_minus_pow(np.asarray(a), p))
    return one_ap / (one_ap + (1 + k) * (1 - a) * (1 + a))


def r_k_p_inf(p: float, k: float) -> float:
    """Infimum over ``a in [0, 1)`` of :func:`r_k_p_closed`.

    ``p/(2(1+k)+p)`` (approached as ``a -> 1``) for ``p <= 2``; for ``p > 2`` it
    is ``1/(2+k)``, attained at ``a = 0``.
    """
    if not p > 0:
        raise ParamOutOfRange(f"p={p} must be positive")
    return p / (2 * (1 + k) + p) if p <= 2 else 1.0 / (2 + k)


def corollary6_radius(p: float, k: float) -> float:
    """``p / (2(1+k) + p)``."""
    return p / (2 * (1 + k) + p)


def alpha_plus(a: float) -> float:
    """``1 / (2a + sqrt(2a^2 - 1))``."""
    return _alpha(a, +1)


def alpha_minus(a: float) -> float:
    """``1 / (2a - sqrt(2a^2 - 1))``."""
    return _alpha(a, -1)


def _alpha(a: float, sign: int) -> float:
    disc = 2 * a * a - 1
    if disc < -1e-15 or a > 1:
        raise ParamOutOfRange(f"a={a}: need 1/sqrt(2) <= a <= 1")
    s = math.sqrt(max(disc, 0.0))
    return 1.0 / (2 * a + sign * s)


def R_k_bound(a: float, k: float) -> float:
    """``1 / ((1+k)(1+a) + 1)``; strict upper bound for the ``p = 1`` root."""
    return 1.0 / ((1 + k) * (1 + a) + 1)


def theorem2_radius(phi0: float, wprime0: float) -> float:
    """``min(r_1(|Phi(0)|), r_1(|w'(0)|))``."""
    for v in (phi0, wprime0):
        if not 0.0 <= v <= 1.0:
            raise ParamOutOfRange(f"modulus {v} outside [0, 1]")
    return min(r_1_closed(phi0), r_1_closed(wprime0))
