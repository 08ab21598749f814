"""Harmonic mappings built by shearing, their convolution and dilatation.

A harmonic mapping ``f = h + conj(g)`` is stored as two truncated Taylor
series.  ``f_beta`` shears the vertical strip map with ``omega = e^{i theta} z^n``
and ``F_a`` shears ``z / (1 - z)`` with the Mobius dilatation
``(a - z) / (1 - a z)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np
from scipy.signal import lfilter

from .cpoly import (
    Polynomial,
    TruncatedSeries,
    poly_eval,
    reciprocal_conjugate,
    series_log_ratio_strip,
)
from .errors import BranchMismatch, DegenerateShear

DEFAULT_ORDER = 64


# ---------------------------------------------------------------------------
# parameter and dilatation types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MonomialRotation:
    theta: float
    n: int


@dataclass(frozen=True)
class Mobius:
    a: float


@dataclass(frozen=True)
class Explicit:
    pass


@dataclass(frozen=True)
class DilatationParams:
    n: int
    theta: float
    a: float
    beta: float = np.pi / 2

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n}")
        if not -1.0 < self.a < 1.0:
            raise ValueError(f"a must lie in (-1, 1), got {self.a}")
        if not 0.0 < self.beta < np.pi:
            raise ValueError(f"beta must lie in (0, pi), got {self.beta}")


@dataclass(frozen=True)
class RationalDilatation:
    """``omega(z) = e^{i phase} z**power * numerator(z) / denominator(z)``."""

    numerator: Polynomial
    denominator: Polynomial
    power: int = 0
    phase: float = 0.0

    def __post_init__(self):
        if self.denominator.coeff(0) == 0:
            raise ValueError("denominator must not vanish at 0")

    @property
    def prefactor(self) -> complex:
        return complex(np.exp(1j * self.phase))

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        val = self.prefactor * z**self.power * poly_eval(self.numerator, z) / poly_eval(self.denominator, z)
        return complex(val) if np.ndim(val) == 0 else val

    def expanded_numerator(self) -> Polynomial:
        """``e^{i phase} z**power * numerator`` as a single polynomial."""
        return (self.prefactor * self.numerator).shift(self.power)

    def series(self, order: int) -> TruncatedSeries:
        num = self.expanded_numerator().coeffs
        x = np.zeros(order + 1, dtype=complex)
        m = min(len(num), order + 1)
        x[:m] = num[:m]
        return TruncatedSeries(lfilter([1.0], self.denominator.coeffs, x))


def monomial_dilatation(n: int, theta: float) -> RationalDilatation:
    return RationalDilatation(Polynomial([1.0]), Polynomial([1.0]), power=n, phase=theta)


def mobius_dilatation(a: float) -> RationalDilatation:
    return RationalDilatation(Polynomial([a, -1.0]), Polynomial([1.0, -a]))


@dataclass(frozen=True)
class HarmonicMapping:
    """``f = h + conj(g)`` with ``h(0) = g(0) = 0`` and ``h'(0) != 0``."""

    analytic: TruncatedSeries
    coanalytic: TruncatedSeries
    kind: MonomialRotation | Mobius | Explicit = field(default_factory=Explicit)

    def __post_init__(self):
        if self.analytic.order != self.coanalytic.order:
            raise ValueError("analytic and co-analytic parts need equal truncation order")
        h, g = self.analytic.coeffs, self.coanalytic.coeffs
        if abs(h[0]) > 1e-12 or abs(g[0]) > 1e-12 or abs(h[1]) < 1e-12:
            raise ValueError("mapping is not normalized: need h(0) = g(0) = 0 and h'(0) != 0")

    @property
    def order(self) -> int:
        return self.analytic.order

    @property
    def b1(self) -> complex:
        return complex(self.coanalytic.coeffs[1])

    @property
    def in_SH0_normalization(self) -> bool:
        return abs(self.b1) < 1e-12

    def __call__(self, z):
        return self.analytic(z) + np.conj(self.coanalytic(z))

    def analytic_difference(self) -> TruncatedSeries:
        """``h - g``, the function whose shape decides convexity in the real direction."""
        return self.analytic - self.coanalytic


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------


def shear(F: TruncatedSeries, omega: RationalDilatation, kind=None) -> HarmonicMapping:
    """Split ``F = h + g`` with ``g' = omega h'``.

    Uses ``h' = F' / (1 + omega)`` computed as one rational series, then
    integrates both parts with zero constant term.
    """
    if abs(F.coeffs[0]) > 1e-14 or abs(F.coeffs[1] - 1) > 1e-14:
        raise ValueError("F must satisfy F(0) = 0 and F'(0) = 1")
    w0 = omega(0.0)
    if abs(1 + w0) < 1e-14:
        raise DegenerateShear("1 + omega(0) = 0")
    dF = F.derivative()
    den = omega.denominator
    # 1 + omega = (den + e^{i phase} z^power num) / den
    total = den + omega.expanded_numerator()
    hprime = TruncatedSeries(lfilter(den.coeffs, total.coeffs, dF.coeffs))
    gprime = dF - hprime
    return HarmonicMapping(hprime.integral(), gprime.integral(), kind or Explicit())


def make_f_beta(beta: float, theta: float, n: int, order: int = DEFAULT_ORDER) -> HarmonicMapping:
    """Shear of the vertical strip map with dilatation ``e^{i theta} z^n``."""
    F = series_log_ratio_strip(beta, order)
    return shear(F, monomial_dilatation(n, theta), MonomialRotation(theta, n))


def half_plane_series(order: int) -> TruncatedSeries:
    """Taylor series of ``z / (1 - z)``."""
    c = np.ones(order + 1, dtype=complex)
    c[0] = 0.0
    return TruncatedSeries(c)


def make_F_a(a: float, order: int = DEFAULT_ORDER) -> HarmonicMapping:
    """Right half-plane mapping: shear of ``z / (1 - z)`` by ``(a - z) / (1 - a z)``."""
    if not -1.0 < a < 1.0:
        raise ValueError(f"a must lie in (-1, 1), got {a}")
    return shear(half_plane_series(order), mobius_dilatation(a), Mobius(a))


def F_a_closed_form(a: float, z):
    """Closed-form ``(H_a(z), G_a(z))``.

    ``H_a = z / (2 (1 - z)) + c z / (1 - z)**2`` with ``c = (1 - a) / (2 (1 + a))``.
    """
    z = np.asarray(z, dtype=complex)
    c = (1 - a) / (2 * (1 + a))
    H = 0.5 * z / (1 - z) + c * z / (1 - z) ** 2
    return H, z / (1 - z) - H


def analytic_difference_closed_form(n: int, a: float, theta: float, z):
    """``H_a * h - G_a * g`` for ``beta = pi/2`` by partial fractions.

    ``(h - g)' = (2 / (1 + e^{i theta} z^n) - 1) / (1 + z^2)`` has simple poles
    at the ``n``-th roots of ``-e^{-i theta}`` and at ``+-i`` off the excluded
    angles, and ``H * h - G * g = (h - g)/2 + c z / (1 + z^2)``.
    """
    if degenerate_theta_class(n, theta, 1e-9) is not None:
        raise BranchMismatch("poles collide at an excluded theta")
    z = np.asarray(z, dtype=complex)
    c = (1 - a) / (2 * (1 + a))
    e = np.exp(1j * theta)
    zeta = np.exp(1j * (np.pi - theta + 2 * np.pi * np.arange(n)) / n)
    poles = np.concatenate([zeta, [1j, -1j]])
    res = np.concatenate([-2 * zeta / (n * (1 + zeta**2)),
                          [1 / ((1 + e * 1j**n) * 1j), -1 / ((1 + e * (-1j) ** n) * 1j)]])
    hg = sum(r * np.log(1 - z / q) for r, q in zip(res, poles)) - np.arctan(z)
    return 0.5 * hg + c * z / (1 + z**2)


def convolve(F: HarmonicMapping, f: HarmonicMapping) -> HarmonicMapping:
    """Harmonic (Hadamard) convolution ``(H * h) + conj(G * g)``."""
    if F.order != f.order:
        raise ValueError("truncation orders differ")
    return HarmonicMapping(F.analytic.hadamard(f.analytic), F.coanalytic.hadamard(f.coanalytic))


# ---------------------------------------------------------------------------
# the convolution dilatation and the critical polynomial
# ---------------------------------------------------------------------------


def dilatation_general(params: DilatationParams) -> RationalDilatation:
    """Dilatation of ``F_a * f_beta`` for ``omega = e^{i theta} z^n``.

    Numerator ``2 w (1 + w)(a + a z cb + z cb + z^2) - z w' (1 - a)(1 + 2 z cb + z^2)``
    and denominator ``2 (1 + z cb + a z cb + a z^2)(1 + w) - z w' (1 - a)(1 + 2 z cb + z^2)``
    with ``cb = cos(beta)``, expanded as polynomials in ``z``.
    """
    n, a, cb = params.n, params.a, np.cos(params.beta)
    w = Polynomial.monomial(params.n, np.exp(1j * params.theta))
    zw1 = n * w  # z * w'(z)
    one_w = 1 + w
    quad_num = Polynomial([a, a * cb + cb, 1.0])
    quad_den = Polynomial([1.0, cb + a * cb, a])
    common = (1 - a) * Polynomial([1.0, 2 * cb, 1.0])
    num = 2 * w * one_w * quad_num - zw1 * common
    den = 2 * quad_den * one_w - zw1 * common
    return RationalDilatation(num, den)


def build_p(n: int, a: float, theta: float) -> Polynomial:
    """``z^{n+2} + a z^n + (2 + a n - n) e^{-i theta} z^2 / 2 + (2a + a n - n) e^{-i theta} / 2``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    e = np.exp(-1j * theta)
    c = np.zeros(n + 3, dtype=complex)
    c[n + 2] += 1.0
    c[n] += a
    c[2] += 0.5 * (2 + a * n - n) * e
    c[0] += 0.5 * (2 * a + a * n - n) * e
    return Polynomial(c)


def dilatation_pi2(n: int, a: float, theta: float) -> RationalDilatation:
    """``z^n e^{2 i theta} p(z) / p*(z)`` for ``beta = pi / 2``."""
    p = build_p(n, a, theta)
    return RationalDilatation(p, reciprocal_conjugate(p, n + 2), power=n, phase=2 * theta)


def a_par_beta(n: int, theta: float) -> Polynomial:
    """``(n + 2) z^n + n z^{n-2} + 2 e^{-i theta}``, the reduced numerator at ``a = n/(n+2)``."""
    if n < 2:
        raise ValueError("the a = n/(n+2) reduction needs n >= 2")
    c = np.zeros(n + 1, dtype=complex)
    c[n] += n + 2
    c[n - 2] += n
    c[0] += 2 * np.exp(-1j * theta)
    return Polynomial(c)


def endpoint_a(n: int) -> float:
    return (n - 2) / (n + 2)


def a_par(n: int) -> float:
    return n / (n + 2)


# ---------------------------------------------------------------------------
# degenerate branches
# ---------------------------------------------------------------------------


class ThetaClass(enum.Enum):
    ODD_PI = "OddPi"                      # theta = (2m+1) pi, n and n/2 even
    EVEN_PI_HALF_ODD_N = "EvenPiHalfOddN"  # theta = 2m pi, n even, n/2 odd
    HALF_PI_ODD_N = "HalfPiOddN"          # theta = (2m+1) pi/2, n odd
    A_PAR = "APar"                        # a = n/(n+2)


def _near_multiple(x: float, period: float, offset: float, tol: float) -> bool:
    r = (x - offset) / period
    return abs(r - round(r)) * period <= tol


def degenerate_theta_class(n: int, theta: float, tol: float = 1e-9) -> ThetaClass | None:
    """The excluded-theta branch ``(n, theta)`` falls into, if any.

    These are the angles where the last one or two Schur-Cohn minors of ``p``
    vanish because ``p`` acquires a unimodular factor.
    """
    if n % 2:
        return ThetaClass.HALF_PI_ODD_N if _near_multiple(theta, np.pi, np.pi / 2, tol) else None
    if (n // 2) % 2:
        return ThetaClass.EVEN_PI_HALF_ODD_N if _near_multiple(theta, 2 * np.pi, 0.0, tol) else None
    return ThetaClass.ODD_PI if _near_multiple(theta, 2 * np.pi, np.pi, tol) else None


def unimodular_root(n: int, theta: float) -> complex:
    """The root ``rho`` in ``{i, -i}`` of ``p`` for odd ``n`` at ``theta = (2m+1) pi/2``.

    ``p(rho) = (a - 1)(rho^n + e^{-i theta})`` whenever ``rho^2 = -1``, so the
    root is the one with ``rho^n = -e^{-i theta}``.
    """
    target = -np.exp(-1j * theta)
    return 1j if abs(1j**n - target) < abs((-1j) ** n - target) else -1j


def rule_half_pi_factor(n: int) -> Polynomial:
    """The ``4s +- 1`` assignment of the unimodular factor: ``z + i`` for ``n = 4s+1``, ``z - i`` for ``n = 4s-1``.

    It holds at ``theta = 3 pi/2`` and is reversed at ``theta = pi/2``; see :func:`unimodular_root`.
    """
    if n % 2 == 0:
        raise BranchMismatch("the 4s +- 1 rule needs odd n")
    return Polynomial([1j, 1.0]) if n % 4 == 1 else Polynomial([-1j, 1.0])


def special_case_polys(n: int, a: float, theta: float, theta_class: ThetaClass,
                       tol: float = 1e-9, check: float = 1e-12) -> list[Polynomial]:
    """Factor list for a degenerate branch.

    Returns ``[unimodular_factor, cofactor]`` whose product is ``build_p``; for
    ``A_PAR`` returns ``[z^2 / (n + 2), beta]`` with ``beta`` from
    :func:`a_par_beta`.  The product is checked coefficient-wise to ``check``.
    """
    tc = ThetaClass(theta_class)
    if tc is ThetaClass.A_PAR:
        if n < 2 or abs(a * (n + 2) - n) > tol:
            raise BranchMismatch(f"a = {a} is not n/(n+2) for n = {n}")
        factors = [Polynomial.monomial(2, 1.0 / (n + 2)), a_par_beta(n, theta)]
        p = build_p(n, a_par(n), theta)
    else:
        if degenerate_theta_class(n, theta, tol) is not tc:
            raise BranchMismatch(f"(n={n}, theta={theta}) is not in branch {tc.value}")
        p = build_p(n, a, theta)
        if tc is ThetaClass.HALF_PI_ODD_N:
            factor = Polynomial([-unimodular_root(n, theta), 1.0])
        else:
            factor = Polynomial([1.0, 0.0, 1.0])
        q, rem = p.divmod(factor)
        if float(np.max(np.abs(rem.coeffs))) > check:
            raise BranchMismatch(f"{factor} does not divide p (remainder {np.max(np.abs(rem.coeffs)):.3g})")
        factors = [factor, q]
    prod = factors[0] * factors[1]
    if prod.max_abs_diff(p) > check:
        raise BranchMismatch("factor product does not reproduce p")
    return factors
