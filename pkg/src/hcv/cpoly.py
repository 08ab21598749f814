"""Dense complex polynomials, truncated power series and a root oracle.

Coefficients are stored lowest power first: ``coeffs[j]`` multiplies ``z**j``.
Every object here is immutable once built; all functions are pure.

No scaling or balancing pass is applied anywhere.  The polynomials handled by
this package have O(1) coefficients and degree at most a few dozen, which is
the regime where plain double precision is adequate.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.signal import lfilter

from .errors import DegenerateParameter, NonConvergence, ZeroConstantTerm

_EPS = np.finfo(float).eps


def _frozen(arr):
    arr = np.array(arr, dtype=complex)
    arr.flags.writeable = False
    return arr


class Polynomial:
    """Polynomial with complex coefficients, trailing zeros trimmed.

    The zero polynomial keeps the single coefficient ``[0]``, reports
    ``is_zero == True`` and has degree ``-1`` so that degree queries are total.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs):
        c = np.atleast_1d(np.asarray(coeffs, dtype=complex))
        if c.ndim != 1:
            raise ValueError("coefficients must be one-dimensional")
        if not np.all(np.isfinite(c)):
            raise ValueError("polynomial coefficients must be finite")
        nz = np.flatnonzero(c)
        c = c[: nz[-1] + 1] if nz.size else np.zeros(1, dtype=complex)
        self._c = _frozen(c)

    # construction helpers -------------------------------------------------
    @classmethod
    def monomial(cls, power: int, coeff=1.0) -> Polynomial:
        c = np.zeros(power + 1, dtype=complex)
        c[power] = coeff
        return cls(c)

    @classmethod
    def from_roots(cls, roots, lead=1.0) -> Polynomial:
        c = np.array([lead], dtype=complex)
        for r in roots:
            c = np.convolve(c, [-r, 1.0])
        return cls(c)

    # basic queries ---------------------------------------------------------
    @property
    def coeffs(self) -> np.ndarray:
        return self._c

    @property
    def is_zero(self) -> bool:
        return not np.any(self._c)

    @property
    def degree(self) -> int:
        return -1 if self.is_zero else len(self._c) - 1

    @property
    def lead(self) -> complex:
        return complex(self._c[-1])

    def coeff(self, j: int) -> complex:
        return complex(self._c[j]) if 0 <= j < len(self._c) else 0j

    def __call__(self, z):
        return poly_eval(self, z)

    def __repr__(self):
        terms = ", ".join(f"{c:.6g}" for c in self._c)
        return f"Polynomial([{terms}])"

    # arithmetic ------------------------------------------------------------
    def __add__(self, other):
        other = _as_poly(other)
        m = max(len(self._c), len(other._c))
        out = np.zeros(m, dtype=complex)
        out[: len(self._c)] += self._c
        out[: len(other._c)] += other._c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-self._c)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        if np.isscalar(other):
            return Polynomial(self._c * other)
        return Polynomial(np.convolve(self._c, _as_poly(other)._c))

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return Polynomial(self._c / scalar)

    def conj(self) -> Polynomial:
        return Polynomial(np.conj(self._c))

    def derivative(self) -> Polynomial:
        if self.degree <= 0:
            return Polynomial([0.0])
        return Polynomial(self._c[1:] * np.arange(1, len(self._c)))

    def shift(self, k: int) -> Polynomial:
        """Multiply by ``z**k`` (``k >= 0``)."""
        return Polynomial(np.concatenate([np.zeros(k, dtype=complex), self._c]))

    def divmod(self, divisor: Polynomial):
        """Long division; returns ``(quotient, remainder)``."""
        divisor = _as_poly(divisor)
        if divisor.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        num = self._c.copy()
        d = divisor.degree
        if self.degree < d:
            return Polynomial([0.0]), Polynomial(num)
        q = np.zeros(self.degree - d + 1, dtype=complex)
        for j in range(len(q) - 1, -1, -1):
            q[j] = num[j + d] / divisor.lead
            num[j : j + d + 1] -= q[j] * divisor._c
        return Polynomial(q), Polynomial(num[:d] if d > 0 else [0.0])

    def strip_zero_roots(self, rel_tol: float = 0.0):
        """Remove factors of ``z``.

        Low-order coefficients with modulus ``<= rel_tol * max|coeff|`` are
        treated as zero.  Returns ``(count, reduced_polynomial)``.
        """
        if self.is_zero:
            return 0, self
        cutoff = rel_tol * np.max(np.abs(self._c))
        k = 0
        while k < self.degree and abs(self._c[k]) <= cutoff:
            k += 1
        return k, Polynomial(self._c[k:])

    def max_abs_diff(self, other: Polynomial) -> float:
        return float(np.max(np.abs((self - other)._c)))


def _as_poly(x) -> Polynomial:
    return x if isinstance(x, Polynomial) else Polynomial([x])


def poly_eval(p: Polynomial, z):
    """Horner evaluation of ``p`` at a scalar or array ``z``."""
    z = np.asarray(z, dtype=complex)
    acc = np.zeros_like(z)
    for c in p.coeffs[::-1]:
        acc = acc * z + c
    return complex(acc) if acc.ndim == 0 else acc


def reciprocal_conjugate(p: Polynomial, n: int | None = None) -> Polynomial:
    """Return ``z**n * conj(p(1/conj(z)))``.

    The coefficient of ``z**j`` in the result is ``conj(coeffs[n - j])``.
    ``n`` defaults to the degree of ``p`` and must not be smaller than it.
    """
    if n is None:
        n = p.degree
    if n < p.degree:
        raise ValueError(f"formal degree {n} is below the degree {p.degree}")
    c = np.zeros(n + 1, dtype=complex)
    c[: len(p.coeffs)] = p.coeffs
    return Polynomial(np.conj(c[::-1]))


# ---------------------------------------------------------------------------
# root oracle
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RootSet:
    roots: np.ndarray
    residual: float
    iterations: int

    @property
    def max_modulus(self) -> float:
        return float(np.max(np.abs(self.roots))) if len(self.roots) else 0.0


def find_roots(p: Polynomial, max_iter: int = 500, step_tol: float = 1e-13) -> RootSet:
    """All roots of ``p`` by Aberth-Ehrlich simultaneous iteration.

    Exact zero roots are split off first.  The remaining seeds lie on the
    circle of radius ``1 + max|c_j| / |lead|`` at deterministic angles.  A root
    is frozen once its correction drops below ``step_tol * (1 + |z|)`` or its
    residual reaches the rounding level of Horner's scheme.

    Each root is accurate to the radius of its pseudozero set, so members of a
    tight cluster are only placed to about ``(eps * scale)^(1/m)`` for an
    ``m``-fold cluster.

    Raises
    ------
    NonConvergence
        If some root is still moving after ``max_iter`` sweeps.
    """
    if p.degree < 1:
        raise ValueError("find_roots needs a polynomial of degree >= 1")
    nzero, q = p.strip_zero_roots()
    zeros = np.zeros(nzero, dtype=complex)
    d = q.degree
    if d == 0:
        return RootSet(_frozen(zeros), 0.0, 0)

    c = q.coeffs / q.lead
    dc = c[1:] * np.arange(1, d + 1)
    absc = np.abs(c)
    radius = 1.0 + np.max(np.abs(c[:-1]))
    angles = 2 * np.pi * np.arange(d) / d + 0.4 / d + 0.25
    z = radius * np.exp(1j * angles)
    active = np.ones(d, dtype=bool)

    it = 0
    while active.any():
        if it >= max_iter:
            raise NonConvergence(f"Aberth iteration did not converge in {max_iter} sweeps")
        it += 1
        za = z[active]
        pv = np.polyval(c[::-1], za)
        dpv = np.polyval(dc[::-1], za)
        bound = np.polyval(absc[::-1], np.abs(za))
        small = np.abs(pv) <= 8 * d * _EPS * bound
        diff = za[:, None] - z[None, :]
        idx = np.flatnonzero(active)
        diff[np.arange(len(idx)), idx] = 1.0
        recip = 1.0 / diff
        recip[np.arange(len(idx)), idx] = 0.0
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = pv / dpv
            w = ratio / (1.0 - ratio * recip.sum(axis=1))
        w = np.where(np.isfinite(w), w, 0.0)
        w[small] = 0.0
        z[idx] = za - w
        done = small | (np.abs(w) < step_tol * (1.0 + np.abs(za)))
        active[idx[done]] = False

    roots = np.concatenate([zeros, z])
    residual = float(np.max(np.abs(poly_eval(p, roots))))
    return RootSet(_frozen(roots), residual, it)


def quadratic_roots(p: Polynomial) -> np.ndarray:
    """Roots of a polynomial of degree 1 or 2 from the closed-form formula."""
    if p.degree == 1:
        return np.array([-p.coeff(0) / p.coeff(1)])
    if p.degree != 2:
        raise ValueError("quadratic_roots needs degree 1 or 2")
    c0, b, a = p.coeff(0), p.coeff(1), p.coeff(2)
    disc = np.sqrt(complex(b * b - 4 * a * c0))
    # pick the sign that avoids cancellation
    if abs(-b + disc) < abs(-b - disc):
        disc = -disc
    r1 = (-b + disc) / (2 * a)
    r2 = c0 / (a * r1) if r1 != 0 else -b / a
    return np.array([r1, r2])


# ---------------------------------------------------------------------------
# truncated power series
# ---------------------------------------------------------------------------


class TruncatedSeries:
    """Taylor coefficients of an analytic function up to ``z**order``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs, order: int | None = None):
        c = np.asarray(coeffs, dtype=complex).ravel()
        if order is not None:
            out = np.zeros(order + 1, dtype=complex)
            m = min(len(c), order + 1)
            out[:m] = c[:m]
            c = out
        if len(c) == 0:
            raise ValueError("a truncated series needs at least one coefficient")
        self._c = _frozen(c)

    @classmethod
    def from_polynomial(cls, p: Polynomial, order: int) -> TruncatedSeries:
        return cls(p.coeffs, order)

    @property
    def coeffs(self) -> np.ndarray:
        return self._c

    @property
    def order(self) -> int:
        return len(self._c) - 1

    def __getitem__(self, k):
        return self._c[k]

    def __repr__(self):
        return f"TruncatedSeries(order={self.order}, head={np.round(self._c[:6], 6)})"

    def _check(self, other):
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries(np.atleast_1d(other), self.order)
        if other.order != self.order:
            raise ValueError(f"truncation orders differ: {self.order} vs {other.order}")
        return other

    def __add__(self, other):
        return TruncatedSeries(self._c + self._check(other)._c)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(-self._c)

    def __sub__(self, other):
        return TruncatedSeries(self._c - self._check(other)._c)

    def __mul__(self, other):
        if np.isscalar(other):
            return TruncatedSeries(self._c * other)
        other = self._check(other)
        return TruncatedSeries(np.convolve(self._c, other._c)[: self.order + 1])

    __rmul__ = __mul__

    def hadamard(self, other: TruncatedSeries) -> TruncatedSeries:
        return TruncatedSeries(self._c * self._check(other)._c)

    def derivative(self) -> TruncatedSeries:
        """Derivative, known to one order less."""
        if self.order == 0:
            return TruncatedSeries([0.0])
        return TruncatedSeries(self._c[1:] * np.arange(1, self.order + 1))

    def integral(self, constant=0.0) -> TruncatedSeries:
        """Antiderivative with the given constant term, one order more."""
        out = np.empty(self.order + 2, dtype=complex)
        out[0] = constant
        out[1:] = self._c / np.arange(1, self.order + 2)
        return TruncatedSeries(out)

    def truncate(self, order: int) -> TruncatedSeries:
        return TruncatedSeries(self._c, order)

    def __call__(self, z):
        return poly_eval(Polynomial(self._c), z)


def series_divide(num: TruncatedSeries, den: TruncatedSeries) -> TruncatedSeries:
    """Quotient ``q`` with ``num = den * q`` to the common truncation order."""
    if num.order != den.order:
        raise ValueError(f"truncation orders differ: {num.order} vs {den.order}")
    if den.coeffs[0] == 0:
        raise ZeroConstantTerm("denominator series has zero constant term")
    # the IIR recurrence den * y = num is exactly series long division;
    # trailing zeros of den are dropped so polynomial denominators stay cheap
    d = den.coeffs
    nz = np.flatnonzero(d)
    return TruncatedSeries(lfilter([1.0], d[: nz[-1] + 1], num.coeffs))


def series_log(s: TruncatedSeries) -> TruncatedSeries:
    """``log s`` for a series with ``s(0) = 1`` via ``integral(s' / s)``."""
    if abs(s.coeffs[0] - 1.0) > 1e-15:
        raise ValueError("series_log expects constant term 1")
    ds = s.derivative()
    q = series_divide(ds, s.truncate(ds.order))
    return q.integral(0.0)


def series_log_ratio_strip(beta: float, order: int) -> TruncatedSeries:
    """Taylor series of ``log((1 + z e^{i beta}) / (1 + z e^{-i beta})) / (2i sin beta)``.

    This is the analytic vertical strip map, normalized so that its linear
    coefficient is 1.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    s = np.sin(beta)
    if not 0.0 < beta < np.pi or abs(s) < 1e-14:
        raise DegenerateParameter(f"beta={beta} must lie strictly inside (0, pi)")
    up = series_log(TruncatedSeries([1.0, np.exp(1j * beta)], order))
    down = series_log(TruncatedSeries([1.0, np.exp(-1j * beta)], order))
    return (up - down) * (1.0 / (2j * s))
