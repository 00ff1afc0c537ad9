"""Named functions, extremal families and random samplers.

Closed-form families carry exact geometric tail envelopes.  Random class-B
members are either finite Blaschke products (expanded through repeated Cauchy
products of degree-one factors) or polynomials normalised by a certified
bound on their sup norm.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import powerseries as ps
from .errors import ConstantAnalyticPart, ParamOutOfRange
from .powerseries import DEFAULT_ORDER, ZERO_TOL, TruncatedSeries

# zeros of random Blaschke products stay inside this disk
BLASCHKE_ZERO_RADIUS = 0.9


@dataclass(frozen=True)
class HarmonicPair:
    """Harmonic mapping ``f = h + conj(g)`` with dilatation bound ``k``.

    Membership ``|g'| <= k |h'|`` is not checked here; see
    :func:`bohr_lab.oracle.dilatation_check`.
    """

    h: TruncatedSeries
    g: TruncatedSeries
    k: float

    def __post_init__(self) -> None:
        if abs(self.g.coeffs[0]) > ZERO_TOL:
            raise ValueError(f"g(0) = {self.g.coeffs[0]:.3g} must vanish")
        if not 0.0 <= self.k <= 1.0:
            raise ParamOutOfRange(f"dilatation bound k={self.k} outside [0, 1]")

    @property
    def a0(self) -> float:
        """``|h(0)|``."""
        return abs(self.h.coeffs[0])

    @property
    def q(self) -> int:
        """Order of the zero of ``h - h(0)`` at the origin."""
        c = np.abs(self.h.coeffs[1:])
        scale = max(1.0, float(c.max()) if c.size else 1.0)
        nz = np.flatnonzero(c > ZERO_TOL * scale)
        if not nz.size:
            raise ConstantAnalyticPart("h is constant up to the stored order")
        return int(nz[0]) + 1

    @property
    def a_q(self) -> complex:
        return self.h[self.q]

    @property
    def b_q(self) -> complex:
        return self.g[self.q]

    def evaluate(self, z):
        return self.h(z) + np.conj(self.g(z))


def _check_unit(a: float, name: str = "a", closed_right: bool = False) -> None:
    ok = 0.0 <= a <= 1.0 if closed_right else 0.0 <= a < 1.0
    if not ok:
        raise ParamOutOfRange(f"{name}={a} outside [0, 1{']' if closed_right else ')'}")


def blaschke_factor(zero: complex, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Series of ``(z - zero) / (1 - conj(zero) z)`` for ``|zero| < 1``."""
    zero = complex(zero)
    m = abs(zero)
    if m >= 1.0:
        raise ParamOutOfRange(f"zero {zero} must lie in the open unit disk")
    c = np.empty(order + 1, dtype=complex)
    c[0] = -zero
    c[1:] = (1 - m * m) * np.conj(zero) ** np.arange(order)
    return TruncatedSeries(c, (1 - m * m) * m**order, m)


def disk_automorphism(a: float, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """``omega_a(z) = (z + a) / (1 + a z)``, ``0 <= a < 1``."""
    _check_unit(a)
    return blaschke_factor(-a, order)


def extremal_harmonic(a: float, k: float, order: int = DEFAULT_ORDER) -> HarmonicPair:
    """``h = omega_a``, ``g = k (omega_a - a)``: equality case of the E_f bound."""
    _check_unit(a)
    _check_unit(k, "k", closed_right=True)
    h = disk_automorphism(a, order)
    return HarmonicPair(h, (h - a) * k, k)


def z_plus_conj_z(order: int = DEFAULT_ORDER) -> HarmonicPair:
    """``f(z) = z + conj(z)``, the ``a = 0, k = 1`` extremal pair."""
    z = TruncatedSeries.monomial(1.0, 1, order)
    return HarmonicPair(z, z, 1.0)


def corollary2_coefficient(a: float, k):
    """``A_k`` in ``z**2 ((z - a)/(1 - a z))**2 = z**2 sum A_k z**k``."""
    k = np.asarray(k, dtype=float)
    out = (1 - a) * (1 + a) * a ** (k - 2) * (k - 1 - (k + 1) * a * a)
    return np.where(k == 0, a * a, out)


def corollary2_function(a: float, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """``z**2 ((z - a) / (1 - a z))**2`` from the closed-form coefficients."""
    if not 0.0 < a < 1.0:
        raise ParamOutOfRange(f"a={a} outside (0, 1)")
    c = np.zeros(order + 1)
    c[2:] = corollary2_coefficient(a, np.arange(order - 1))
    # unstored index n = k + 2 > order: |A_k| = (1-a^2) a^(k-2) |(k-1) - (k+1) a^2|
    k0 = order - 1
    s = 0.5 * (1.0 + a)
    base = (1 - a) * (1 + a) * a ** (k0 - 2)
    # |(k0 - 1 + t)(1 - a^2) - 2 a^2| (a/s)^t, t = k - k0
    cap = base * ps._sup_affine_geometric((k0 - 1) - (k0 + 1) * a * a, (1 - a) * (1 + a), a / s)
    return TruncatedSeries(c, cap, s)


def monomial_extremal(q: int, b: complex, a: float, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """``b z**q omega_a(z)``."""
    if q < 0 or abs(b) > 1.0:
        raise ParamOutOfRange(f"need q >= 0 and |b| <= 1, got q={q}, b={b}")
    _check_unit(a)
    if q > order:
        raise ParamOutOfRange(f"q={q} exceeds the order {order}")
    w = disk_automorphism(a, order)
    c = np.zeros(order + 1, dtype=complex)
    c[q:] = b * w.coeffs[: order + 1 - q]
    # unstored n = q + j with j >= order - q + 1 >= 1: |b| (1-a^2) a^(j-1)
    cap = abs(b) * (1 - a) * (1 + a) * a ** (order - q)
    return TruncatedSeries(c, cap, a)


def random_blaschke(degree: int, seed: int, order: int = DEFAULT_ORDER,
                    zero_radius: float = BLASCHKE_ZERO_RADIUS) -> TruncatedSeries:
    """Finite Blaschke product ``c prod (z - z_j)/(1 - conj(z_j) z)``.

    Zeros are uniform in the disk of radius ``zero_radius``; ``|c| = 1``.
    """
    if degree < 0:
        raise ParamOutOfRange(f"degree={degree} must be >= 0")
    zeros, unimodular = blaschke_zeros(degree, seed, zero_radius)
    f = TruncatedSeries.constant(unimodular, order)
    for zj in zeros:
        f = ps.cauchy_product(f, blaschke_factor(zj, order))
    # class B: |c_n| <= 1 - |c_0|^2 is an alternative uniform cap
    cap, decay = ps._tighter(order, (f.tail_cap, f.tail_decay),
                             (max(0.0, 1.0 - abs(f.coeffs[0]) ** 2), 1.0))
    return TruncatedSeries(f.coeffs, cap, decay)


def blaschke_zeros(degree: int, seed: int, zero_radius: float = BLASCHKE_ZERO_RADIUS):
    """Zeros and unimodular constant used by :func:`random_blaschke`."""
    rng = np.random.default_rng(seed)
    rad = zero_radius * np.sqrt(rng.uniform(size=degree))
    ang = rng.uniform(0.0, 2 * np.pi, size=degree)
    zeros = rad * np.exp(1j * ang)
    unimodular = np.exp(1j * rng.uniform(0.0, 2 * np.pi))
    return zeros, unimodular


def blaschke_evaluator(degree: int, seed: int, zero_radius: float = BLASCHKE_ZERO_RADIUS):
    """Pointwise closed form of :func:`random_blaschke` (for the DFT oracle)."""
    zeros, c = blaschke_zeros(degree, seed, zero_radius)

    def f(z):
        out = c * np.ones_like(z)
        for zj in zeros:
            out = out * (z - zj) / (1 - np.conj(zj) * z)
        return out

    return f


def sup_norm_bound(coeffs) -> float:
    """Certified upper bound on ``max_{|z|=1} |p(z)|`` for a polynomial.

    Samples ``M`` equally spaced points and uses Bernstein's inequality:
    between samples ``|p|`` changes by at most ``(pi/M) d ||p||``, so
    ``||p|| <= max_sampled / (1 - pi d / M)``.
    """
    c = np.trim_zeros(np.asarray(coeffs, dtype=complex), "b")
    d = max(c.size - 1, 1)
    m = max(64, 64 * d)
    sampled = float(np.abs(np.fft.fft(c, n=m)).max())
    return sampled / (1.0 - math.pi * d / m)


def random_polynomial(degree: int, seed: int, order: int = DEFAULT_ORDER,
                      vanish_at_zero: bool = False) -> TruncatedSeries:
    """Random polynomial of class B (certified ``|p| <= 1`` on the disk).

    With ``vanish_at_zero`` the constant term is zero, giving an admissible
    inner function for subordination.
    """
    rng = np.random.default_rng(seed)
    c = rng.normal(size=degree + 1) + 1j * rng.normal(size=degree + 1)
    c *= rng.uniform(0.2, 1.0) ** np.arange(degree + 1)
    if vanish_at_zero:
        c[0] = 0.0
    bound = sup_norm_bound(c)
    c = c / (bound * (1 + 1e-12)) * rng.uniform(0.5, 1.0)
    return TruncatedSeries.polynomial(c, order)


def random_hk_pair(k: float, seed: int, order: int = DEFAULT_ORDER,
                   h: TruncatedSeries | None = None) -> HarmonicPair:
    """Member of H_k built as ``g' = k w h'`` with ``w`` a random Blaschke product.

    ``|w| <= 1`` gives ``|g'| <= k |h'|``; ``h`` defaults to a random Blaschke
    product of degree 1..3.
    """
    _check_unit(k, "k", closed_right=True)
    rng = np.random.default_rng(seed)
    if h is None:
        h = random_blaschke(int(rng.integers(1, 4)), int(rng.integers(2**31)), order)
    w = random_blaschke(int(rng.integers(0, 3)), int(rng.integers(2**31)), order)
    dh = ps.derivative(h)
    g = ps.antiderivative(ps.cauchy_product(w.truncate(dh.order), dh) * k)
    return HarmonicPair(h, g, k)


def from_description(desc: dict, order: int = DEFAULT_ORDER):
    """Build a family member from a JSON-style description.

    ``{"family": "omega_a", "a": 0.5}`` and friends; harmonic families return a
    :class:`HarmonicPair`.
    """
    desc = dict(desc)
    name = desc.pop("family")
    builders = {
        "omega_a": lambda a: disk_automorphism(a, order),
        "corollary2": lambda a: corollary2_function(a, order),
        "monomial": lambda q, b, a: monomial_extremal(int(q), b, a, order),
        "z_omega": lambda a=1 / math.sqrt(2): monomial_extremal(1, 1.0, a, order),
        "random_blaschke": lambda degree, seed: random_blaschke(int(degree), int(seed), order),
        "random_polynomial": lambda degree, seed: random_polynomial(int(degree), int(seed), order),
        "extremal_harmonic": lambda a, k: extremal_harmonic(a, k, order),
        "z_plus_conj_z": lambda: z_plus_conj_z(order),
        "random_hk": lambda k, seed: random_hk_pair(k, int(seed), order),
    }
    if name not in builders:
        raise ValueError(f"unknown family {name!r}; known: {sorted(builders)}")
    return builders[name](**desc)
