r"""Truncated power series with certified tail bounds.

A :class:`TruncatedSeries` stores the coefficients :math:`c_0, \dots, c_N`
exactly (in double precision) together with a geometric envelope for the
coefficients it does not store::

    |c_n| <= tail_cap * tail_decay**(n - N - 1)        for every n > N

``tail_decay = 1`` is a plain uniform coefficient cap.  A decay below one
records the geometric decay of closed-form families (disk automorphisms,
Blaschke factors); a decay above one is what a Cauchy estimate
:math:`|c_n| \le M(R)/R^n` with :math:`R < 1` produces.  Every majorant
evaluation returns an :class:`Interval` whose lower end is the stored part
and whose upper end adds the tail envelope, so enlarging ``tail_cap`` can
only enlarge the returned upper bound.

Floating-point rounding of the stored part is *not* folded into the
intervals; comparisons absorb it through a small relative slack (see
:mod:`bohr_lab.report`).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import NonVanishingInnerConstant, RadiusOutOfRange

DEFAULT_ORDER = 200
ZERO_TOL = 1e-12
# tails are tuned to be smallest at this radius; acceptance work stays below it
REFERENCE_RADIUS = 0.8

_CAUCHY_RADII = np.geomspace(0.05, 4.0, 129)


@dataclass(frozen=True)
class Interval:
    """Closed real interval ``[lo, hi]``; ``hi`` may be ``inf``."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        lo, hi = float(self.lo), float(self.hi)
        if math.isnan(lo) or math.isnan(hi) or lo > hi:
            raise ValueError(f"invalid interval [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def point(cls, x: float) -> "Interval":
        return cls(x, x)

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    def contains(self, x: float, tol: float = 0.0) -> bool:
        return self.lo - tol <= x <= self.hi + tol

    def __add__(self, other: "Interval | float") -> "Interval":
        if isinstance(other, Interval):
            return Interval(self.lo + other.lo, self.hi + other.hi)
        return Interval(self.lo + other, self.hi + other)

    __radd__ = __add__

    def __sub__(self, other: "Interval | float") -> "Interval":
        if isinstance(other, Interval):
            return Interval(self.lo - other.hi, self.hi - other.lo)
        return Interval(self.lo - other, self.hi - other)

    def __mul__(self, c: float) -> "Interval":
        c = float(c)
        if c == 0.0:
            return Interval(0.0, 0.0)
        if c > 0:
            return Interval(c * self.lo, c * self.hi)
        return Interval(c * self.hi, c * self.lo)

    __rmul__ = __mul__

    def __pow__(self, p: float) -> "Interval":
        if self.lo < 0:
            raise ValueError("power of an interval reaching below zero")
        return Interval(self.lo**p, self.hi**p)

    def as_list(self) -> list[float]:
        return [self.lo, self.hi]


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    """Coefficients ``c_0..c_N`` plus a geometric envelope on the rest."""

    coeffs: np.ndarray
    tail_cap: float = 0.0
    tail_decay: float = 1.0

    def __post_init__(self) -> None:
        c = np.array(self.coeffs, dtype=complex).reshape(-1)
        if c.size == 0:
            raise ValueError("a series needs at least the constant coefficient")
        c.setflags(write=False)
        cap, decay = float(self.tail_cap), float(self.tail_decay)
        if not cap >= 0 or not decay >= 0:
            raise ValueError(f"tail_cap and tail_decay must be >= 0, got {cap}, {decay}")
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "tail_cap", cap)
        object.__setattr__(self, "tail_decay", decay)

    # construction helpers

    @classmethod
    def polynomial(cls, coeffs: Sequence[complex], order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        """Exact polynomial padded (or truncated, with an exact cap) to ``order``."""
        c = np.asarray(coeffs, dtype=complex)
        if c.size <= order + 1:
            return cls(np.pad(c, (0, order + 1 - c.size)))
        dropped = np.abs(c[order + 1:])
        return cls(c[: order + 1], float(dropped.max()), 1.0)

    @classmethod
    def constant(cls, value: complex, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls.polynomial([value], order)

    @classmethod
    def monomial(cls, coef: complex, degree: int, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        c = np.zeros(degree + 1, dtype=complex)
        c[degree] = coef
        return cls.polynomial(c, order)

    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls(np.zeros(order + 1))

    # basic properties

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    @property
    def is_polynomial(self) -> bool:
        return self.tail_cap == 0.0

    def __len__(self) -> int:
        return self.coeffs.size

    def __getitem__(self, n: int) -> complex:
        return complex(self.coeffs[n])

    def __repr__(self) -> str:
        head = ", ".join(f"{c:.4g}" for c in self.coeffs[:4])
        return (f"TruncatedSeries(order={self.order}, coeffs=[{head}, ...], "
                f"tail_cap={self.tail_cap:.3g}, tail_decay={self.tail_decay:.3g})")

    def tail_bound(self, r: float, start: int | None = None) -> float:
        """Upper bound on ``sum_{n >= start} |c_n| r**n`` over unstored ``n``.

        ``start`` defaults to ``N + 1``; indices at or below ``N`` are never
        included.  Returns ``inf`` where the envelope diverges.
        """
        n0 = self.order + 1 if start is None else max(start, self.order + 1)
        if self.tail_cap == 0.0 or r == 0.0:
            return 0.0
        q = self.tail_decay * r
        if q >= 1.0:
            return math.inf
        shift = n0 - self.order - 1
        if shift > 0 and self.tail_decay == 0.0:
            return 0.0
        log_b = (math.log(self.tail_cap) + n0 * math.log(r) - math.log1p(-q)
                 + (shift * math.log(self.tail_decay) if shift else 0.0))
        return math.exp(log_b) if log_b < 700 else math.inf

    def evaluate(self, z):
        """Value of the stored polynomial part at ``z`` (scalar or array).

        Long-double input is evaluated in long double.  The truncation error is
        at most ``self.tail_bound(abs(z))``.
        """
        z = np.asarray(z)
        dtype = np.clongdouble if z.dtype in (np.longdouble, np.clongdouble) else complex
        acc = np.zeros(z.shape, dtype=dtype)
        c = self.coeffs.astype(dtype)
        for coef in c[::-1]:
            acc = acc * z + coef
        return acc if acc.shape else acc[()]

    __call__ = evaluate

    # arithmetic

    def __add__(self, other: "TruncatedSeries | complex") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            c = self.coeffs.copy()
            c[0] += other
            return TruncatedSeries(c, self.tail_cap, self.tail_decay)
        return add(self, other)

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(-self.coeffs, self.tail_cap, self.tail_decay)

    def __sub__(self, other: "TruncatedSeries | complex") -> "TruncatedSeries":
        return self + (-other)

    def __rsub__(self, other: complex) -> "TruncatedSeries":
        return (-self) + other

    def __mul__(self, other: "TruncatedSeries | complex") -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return cauchy_product(self, other)
        other = complex(other)
        return TruncatedSeries(self.coeffs * other, self.tail_cap * abs(other), self.tail_decay)

    __rmul__ = __mul__

    def truncate(self, order: int) -> "TruncatedSeries":
        """Keep coefficients up to ``order``; dropped ones move into the tail."""
        if order >= self.order:
            return self
        if self.is_polynomial:
            return TruncatedSeries.polynomial(self.coeffs, order)
        dropped = np.abs(self.coeffs[order + 1:])
        # uniform-decay candidate: dropped coefficients and the old tail under one envelope
        d = max(self.tail_decay, 1.0) if dropped.any() else self.tail_decay
        if d == 0.0:
            d = 1.0
        k = np.arange(dropped.size)
        with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
            env = dropped / d**k
        cap = max(float(env.max()) if env.size else 0.0, self.tail_cap / d ** dropped.size)
        direct = (cap, d)
        cauchy = _cauchy_tail(lambda R: _majorant_hi(self, R), order)
        cap, decay = _tighter(order, direct, cauchy)
        return TruncatedSeries(self.coeffs[: order + 1], cap, decay)

    def shift(self, q: int) -> "TruncatedSeries":
        """Series of ``z**q * f(z)`` at the same order."""
        if q == 0:
            return self
        c = np.concatenate([np.zeros(q, dtype=complex), self.coeffs])
        moved = TruncatedSeries(c, self.tail_cap, self.tail_decay)
        return moved.truncate(self.order)

    # JSON wire format

    def to_json(self) -> dict:
        out = {
            "coeffs_re": self.coeffs.real.tolist(),
            "coeffs_im": self.coeffs.imag.tolist(),
            "tail_cap": self.tail_cap,
        }
        if self.tail_decay != 1.0:
            out["tail_decay"] = self.tail_decay
        return out

    @classmethod
    def from_json(cls, data: dict) -> "TruncatedSeries":
        re = np.asarray(data["coeffs_re"], dtype=float)
        im = np.asarray(data.get("coeffs_im", np.zeros_like(re)), dtype=float)
        if re.shape != im.shape:
            raise ValueError("coeffs_re and coeffs_im differ in length")
        return cls(re + 1j * im, data.get("tail_cap", 0.0), data.get("tail_decay", 1.0))


# tail machinery


def _majorant_hi(f: TruncatedSeries, x: float) -> float:
    """Upper bound of ``sum |c_n| x**n`` for any ``x >= 0`` (may be inf)."""
    with np.errstate(over="ignore", invalid="ignore"):
        known = float(np.sum(np.abs(f.coeffs) * x ** np.arange(f.coeffs.size)))
    if not math.isfinite(known):
        return math.inf
    return known + f.tail_bound(x)


def _tail_score(order: int, cap: float, decay: float, r: float = REFERENCE_RADIUS) -> float:
    """log of the tail bound at radius ``r`` (``-inf`` for a zero tail)."""
    if cap == 0.0:
        return -math.inf
    if not math.isfinite(cap) or decay * r >= 1.0:
        return math.inf
    return math.log(cap) + (order + 1) * math.log(r) - math.log1p(-decay * r)


def _tighter(order: int, *candidates: tuple[float, float]) -> tuple[float, float]:
    return min(candidates, key=lambda c: _tail_score(order, *c))


def _cauchy_tail(majorant: Callable[[float], float], order: int) -> tuple[float, float]:
    """Tail envelope from the Cauchy estimate ``|c_n| <= M(R) / R**n``.

    ``majorant(R)`` must bound ``sum |c_n| R**n`` for the full series.  Among a
    fixed grid of radii the one giving the smallest tail at the reference
    radius wins (or at half the largest admissible radius when no admissible
    radius exceeds the reference).
    """
    found = []
    for R in _CAUCHY_RADII:
        m = majorant(float(R))
        if m == 0.0:
            return 0.0, 1.0
        if math.isfinite(m):
            found.append((float(R), m))
    if not found:
        return math.inf, 1.0
    r_eval = min(REFERENCE_RADIUS, 0.5 * found[-1][0])
    best, best_score = (math.inf, 1.0), math.inf
    for R, m in found:
        if R <= r_eval:
            continue
        log_cap = math.log(m) - (order + 1) * math.log(R)
        score = log_cap + (order + 1) * math.log(r_eval) - math.log1p(-r_eval / R)
        if score < best_score:
            cap = math.exp(log_cap) if log_cap < 700 else math.inf
            best, best_score = (cap, 1.0 / R), score
    return best


def _sup_affine_geometric(alpha: float, beta: float, q: float) -> float:
    """``sup_{t = 0, 1, 2, ...} |alpha + beta t| q**t`` for ``0 <= q < 1``."""
    if q == 0.0:
        return abs(alpha)
    ts = {0}
    if beta != 0.0:
        # stationary point of (alpha + beta t) q**t
        t_star = -1.0 / math.log(q) - alpha / beta
        for t in (math.floor(t_star), math.ceil(t_star)):
            if t > 0:
                ts.add(t)
    return max(abs(alpha + beta * t) * q**t for t in ts)


# operations


def add(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Coefficient-wise sum at order ``min(f.order, g.order)``."""
    n = min(f.order, g.order)
    f, g = f.truncate(n), g.truncate(n)
    if f.tail_cap == 0.0:
        cap, decay = g.tail_cap, g.tail_decay
    elif g.tail_cap == 0.0:
        cap, decay = f.tail_cap, f.tail_decay
    else:
        cap, decay = f.tail_cap + g.tail_cap, max(f.tail_decay, g.tail_decay)
    return TruncatedSeries(f.coeffs + g.coeffs, cap, decay)


def cauchy_product(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    r"""Product series at order ``min(f.order, g.order)``.

    Stored coefficients are the exact convolution :math:`\sum_{i+j=k} f_i g_j`.
    The tail envelope is the tighter (at the reference radius) of

    * the direct split into known x known, known x tail and tail x tail
      terms: ``K + M_g S_f + M_f S_g + M_f M_g / (1 - min decay)`` as a
      uniform cap, where ``S`` is the sum of stored moduli and ``K`` the
      largest dropped known convolution coefficient (usable when both decays
      are at most one);
    * the Cauchy estimate built from ``Maj_f(R) * Maj_g(R)``.
    """
    n = min(f.order, g.order)
    full = np.convolve(f.coeffs, g.coeffs)
    coeffs = full[: n + 1]
    dropped = np.abs(full[n + 1:])
    k_max = float(dropped.max()) if dropped.size else 0.0
    if f.is_polynomial and g.is_polynomial:
        return TruncatedSeries(coeffs, k_max, 1.0)

    candidates = [_cauchy_tail(lambda R: _majorant_hi(f, R) * _majorant_hi(g, R), n)]
    if f.tail_decay <= 1.0 and g.tail_decay <= 1.0:
        s_f = float(np.abs(f.coeffs).sum())
        s_g = float(np.abs(g.coeffs).sum())
        both = f.tail_cap * g.tail_cap
        if both > 0.0:
            rho = min(f.tail_decay, g.tail_decay)
            both = both / (1.0 - rho) if rho < 1.0 else math.inf
        candidates.append((k_max + g.tail_cap * s_f + f.tail_cap * s_g + both, 1.0))
    cap, decay = _tighter(n, *candidates)
    return TruncatedSeries(coeffs, cap, decay)


def powers(w: TruncatedSeries, kmax: int) -> np.ndarray:
    r"""Stored coefficients of :math:`w^0, \dots, w^{kmax}`.

    Row ``k`` holds :math:`\alpha^{(k)}_0, \dots, \alpha^{(k)}_N` with
    :math:`w^k = \sum_n \alpha^{(k)}_n z^n`.  Only the stored part of ``w``
    enters, which determines every row exactly up to index ``N``.
    """
    n = w.order
    out = np.zeros((kmax + 1, n + 1), dtype=complex)
    out[0, 0] = 1.0
    for k in range(1, kmax + 1):
        out[k] = np.convolve(out[k - 1], w.coeffs)[: n + 1]
    return out


def compose(g: TruncatedSeries, w: TruncatedSeries) -> TruncatedSeries:
    r"""Series of :math:`g \circ w` for an inner series with ``w(0) = 0``.

    The stored part is :math:`\sum_n b_n w^n` built from iterated Cauchy
    products.  The tail comes from the Cauchy estimate with
    :math:`\mathrm{Maj}_{g\circ w}(R) \le \mathrm{Maj}_g(\mathrm{Maj}_w(R))`,
    or is exact when both inputs are polynomials of moderate degree.
    """
    if abs(w.coeffs[0]) > ZERO_TOL:
        raise NonVanishingInnerConstant(f"w(0) = {w.coeffs[0]:.3g} must vanish")
    n = min(g.order, w.order)
    b = g.coeffs[: n + 1]
    nz = np.flatnonzero(b)
    last = int(nz[-1]) if nz.size else 0

    if g.is_polynomial and w.is_polynomial:
        deg_g = int(np.flatnonzero(g.coeffs)[-1]) if np.any(g.coeffs) else 0
        deg_w = int(np.flatnonzero(w.coeffs)[-1]) if np.any(w.coeffs) else 0
        if deg_g * deg_w <= 8 * (n + 1):
            wp = w.coeffs[: deg_w + 1].copy()
            wp[0] = 0.0
            full = np.zeros(deg_g * deg_w + 1, dtype=complex)
            power = np.ones(1, dtype=complex)
            for k in range(deg_g + 1):
                if k:
                    power = np.convolve(power, wp)
                full[: power.size] += g.coeffs[k] * power
            return TruncatedSeries.polynomial(full, n)

    wn = w.truncate(n)
    wt = TruncatedSeries(np.concatenate([[0.0], wn.coeffs[1:]]), wn.tail_cap, wn.tail_decay)
    acc = np.zeros(n + 1, dtype=complex)
    power = np.zeros(n + 1, dtype=complex)
    power[0] = 1.0
    for k in range(last + 1):
        if k:
            power = np.convolve(power, wt.coeffs)[: n + 1]
        acc += b[k] * power
    cap, decay = _cauchy_tail(lambda R: _majorant_hi(g, _majorant_hi(wt, R)), n)
    return TruncatedSeries(acc, cap, decay)


def majorant_sum(f: TruncatedSeries, r: float, from_index: int = 0) -> Interval:
    """Enclosure of ``sum_{n >= from_index} |c_n| r**n``."""
    if not 0.0 <= r < 1.0:
        raise RadiusOutOfRange(f"radius {r} outside [0, 1)")
    n = np.arange(f.coeffs.size)
    sel = n >= from_index
    known = float(np.sum(np.abs(f.coeffs[sel]) * r ** n[sel]))
    return Interval(known, known + f.tail_bound(r, from_index))


def weighted_norm_sq(f: TruncatedSeries, r: float) -> Interval:
    """Enclosure of ``sum_{n >= 1} |c_n|**2 r**(2n)``."""
    if not 0.0 <= r < 1.0:
        raise RadiusOutOfRange(f"radius {r} outside [0, 1)")
    n = np.arange(1, f.coeffs.size)
    known = float(np.sum(np.abs(f.coeffs[1:]) ** 2 * r ** (2 * n)))
    tail = 0.0
    if f.tail_cap and r:
        q = (f.tail_decay * r) ** 2
        tail = math.inf if q >= 1.0 else f.tail_cap**2 * r ** (2 * (f.order + 1)) / (1.0 - q)
    return Interval(known, known + tail)


def derivative(f: TruncatedSeries) -> TruncatedSeries:
    """Term-wise derivative; the order drops by one."""
    if f.order < 1:
        raise ValueError("derivative needs a series of order >= 1")
    n = f.order
    c = f.coeffs[1:] * np.arange(1, n + 1)
    if f.tail_cap == 0.0:
        return TruncatedSeries(c)
    # new tail index j >= n carries (j + 1) c_{j+1} <= cap (j + 1) decay**(j - n)
    if f.tail_decay == 0.0:
        return TruncatedSeries(c, f.tail_cap * (n + 1), 0.0)
    s = 1.0 + 1.0 / (n + 1)
    cap = f.tail_cap * _sup_affine_geometric(n + 1.0, 1.0, 1.0 / s)
    return TruncatedSeries(c, cap, f.tail_decay * s)


def antiderivative(f: TruncatedSeries) -> TruncatedSeries:
    """Term-wise antiderivative with zero constant term; the order rises by one."""
    n = f.order
    c = np.concatenate([[0.0], f.coeffs / np.arange(1, n + 2)])
    return TruncatedSeries(c, f.tail_cap / (n + 2), f.tail_decay)
