"""Zero location relative to the unit circle.

Two classical procedures live here: Cohn's single-step degree reduction and
the Schur-Cohn determinant test.  :func:`zeros_in_closed_disk` combines the
Schur-Cohn certificate with the root oracle of :mod:`hcv.cpoly` for the cases
the determinant test cannot decide (zeros on or near the circle).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import solve_triangular, toeplitz

from .cpoly import Polynomial, find_roots, quadratic_roots, reciprocal_conjugate
from .errors import FormMismatch, HypothesisViolated, NonConvergence

DEFAULT_ROOT_TOL = 1e-9
DEFAULT_COHN_MARGIN = 1e-12
DEFAULT_POSITIVITY = 1e-10


class DiskClass(enum.Enum):
    ALL_STRICTLY_INSIDE = "AllStrictlyInside"
    ALL_INSIDE_OR_ON = "AllInsideOrOn"
    SOME_OUTSIDE = "SomeOutside"
    UNDECIDED = "Undecided"

    @property
    def in_closed_disk(self) -> bool:
        return self in (DiskClass.ALL_STRICTLY_INSIDE, DiskClass.ALL_INSIDE_OR_ON)


@dataclass(frozen=True)
class DiskVerdict:
    verdict: DiskClass
    witness: complex | None = None
    counts: tuple[int, int, int] | None = None  # (inside, on, outside)
    max_modulus: float | None = None
    path: str = ""
    chain: tuple[Polynomial, ...] = ()
    report: SchurCohnReport | None = None

    def __post_init__(self):
        if (self.witness is not None) != (self.verdict is DiskClass.SOME_OUTSIDE):
            raise ValueError("a witness is carried exactly when some zero lies outside")


@dataclass(frozen=True)
class CohnStep:
    reduced: Polynomial
    degree_drop: int = 1
    inside_count_delta: int = -1


@dataclass(frozen=True)
class SchurCohnReport:
    """Schur-Cohn minors ``M_1 .. M_m`` of a degree-``m`` polynomial.

    ``status[k-1]`` is ``"positive"``, ``"negative"`` or ``"marginal"``.  A
    minor is marginal when the smallest singular value of its Schur
    complement is within ``positivity`` of the magnitude its entries were
    computed from (``margins``), so rounding could flip its sign.  ``scales``
    holds the Hadamard bound of each minor.
    """

    minors: np.ndarray         # Schur-complement form
    block_minors: np.ndarray   # direct 2k x 2k block determinant
    scales: np.ndarray
    margins: np.ndarray
    status: tuple[str, ...]
    max_imag: float
    max_form_discrepancy: float
    all_positive: bool = field(init=False)
    first_nonpositive_index: int | None = field(init=False)

    def __post_init__(self):
        bad = [k + 1 for k, s in enumerate(self.status) if s != "positive"]
        object.__setattr__(self, "all_positive", not bad)
        object.__setattr__(self, "first_nonpositive_index", bad[0] if bad else None)

    @property
    def marginal(self) -> bool:
        return "marginal" in self.status

    @property
    def definitely_negative(self) -> bool:
        return "negative" in self.status

    @property
    def normalized(self) -> np.ndarray:
        """Minors divided by their scales; comparable across indices."""
        return self.minors / self.scales


# ---------------------------------------------------------------------------
# Cohn's rule
# ---------------------------------------------------------------------------


def cohn_reduce(t: Polynomial, margin: float = DEFAULT_COHN_MARGIN) -> CohnStep:
    """One application of Cohn's rule.

    For ``|a_0| < |a_n|`` the polynomial
    ``t_1 = (conj(a_n) t - a_0 t*) / z`` has degree ``n - 1``, one zero fewer
    inside the unit circle and the same number on it.
    """
    if t.degree < 1:
        raise ValueError("cohn_reduce needs degree >= 1")
    a0, an = t.coeff(0), t.lead
    if abs(an) - abs(a0) <= margin * (abs(a0) + abs(an)):
        raise HypothesisViolated(f"|a_0| = {abs(a0):.3g} is not below |a_n| = {abs(an):.3g}")
    full = np.conj(an) * t - a0 * reciprocal_conjugate(t, t.degree)
    c0 = full.coeff(0)
    assert abs(c0) <= 1e-12 * abs(a0) * abs(an), "constant term failed to cancel"
    return CohnStep(Polynomial(full.coeffs[1:]))


class _Undecided(Exception):
    pass


def _classify(roots, tol):
    mod = np.abs(roots)
    inside = int(np.sum(mod < 1 - tol))
    outside = int(np.sum(mod > 1 + tol))
    return inside, len(roots) - inside - outside, outside


def _self_inversive(t: Polynomial, rtol: float = 1e-9) -> bool:
    ts = reciprocal_conjugate(t)
    lam = ts.lead / t.lead
    return ts.max_abs_diff(lam * t) <= rtol * float(np.max(np.abs(t.coeffs)))


def _cohn_counts(t, tol, margin, trace, depth=0):
    if depth > 4 * 128:
        raise _Undecided("Cohn chain too long")
    # rescaling keeps coefficients from growing along the chain
    t = t / float(np.max(np.abs(t.coeffs)))
    k, t = t.strip_zero_roots(1e-12)
    trace.append(t)
    if t.degree <= 0:
        return k, 0, 0
    if t.degree <= 2:
        i, o, x = _classify(quadratic_roots(t), tol)
        return k + i, o, x
    a0, an = abs(t.coeff(0)), abs(t.lead)
    if abs(an - a0) <= margin * (a0 + an):
        # |a_0| = |a_n| up to rounding.  A self-inversive t has all its zeros on
        # the circle iff t' has all its zeros in the closed disk.
        if _self_inversive(t):
            di, do, dx = _cohn_counts(t.derivative(), tol, margin, trace, depth + 1)
            if dx == 0:
                return k, t.degree, 0
        raise _Undecided("|a_0| and |a_n| coincide within the margin")
    if an > a0:
        i, o, x = _cohn_counts(cohn_reduce(t, margin).reduced, tol, margin, trace, depth + 1)
        return k + i + 1, o, x
    # t* swaps interior and exterior zeros and satisfies the hypothesis
    i, o, x = _cohn_counts(reciprocal_conjugate(t), tol, margin, trace, depth + 1)
    return k + x, o, i


def cohn_chain(t: Polynomial, tol: float = DEFAULT_ROOT_TOL,
               margin: float = DEFAULT_COHN_MARGIN) -> DiskVerdict:
    """Count zeros inside/on/outside the circle by repeated Cohn reduction.

    Factors of ``z`` are stripped between steps.  Degree one and two
    remainders are finished with the explicit formula.  When ``|a_0| > |a_n|``
    the chain continues on ``t*``, whose interior and exterior zero sets are
    swapped.  A step with ``|a_0|`` and ``|a_n|`` equal within ``margin`` leaves
    the verdict undecided unless the remainder is self-inversive.
    """
    if t.degree < 1:
        raise ValueError("cohn_chain needs degree >= 1")
    trace: list[Polynomial] = []
    try:
        counts = _cohn_counts(t, tol, margin, trace)
    except _Undecided:
        return DiskVerdict(DiskClass.UNDECIDED, path="cohn", chain=tuple(trace))
    inside, on, outside = counts
    if outside:
        try:
            roots = find_roots(t).roots
        except NonConvergence:
            return DiskVerdict(DiskClass.UNDECIDED, counts=counts, path="cohn", chain=tuple(trace))
        w = complex(roots[np.argmax(np.abs(roots))])
        return DiskVerdict(DiskClass.SOME_OUTSIDE, witness=w, counts=counts,
                           max_modulus=abs(w), path="cohn", chain=tuple(trace))
    cls = DiskClass.ALL_INSIDE_OR_ON if on else DiskClass.ALL_STRICTLY_INSIDE
    return DiskVerdict(cls, counts=counts, path="cohn", chain=tuple(trace))


# ---------------------------------------------------------------------------
# Schur-Cohn minors
# ---------------------------------------------------------------------------


def schur_cohn_blocks(r: Polynomial, k: int):
    """The triangular Toeplitz matrices ``A_k`` and ``B_k`` of the minor ``M_k``."""
    m = r.degree
    c = np.zeros(m + 1, dtype=complex)
    c[:] = r.coeffs
    zeros = np.zeros(k, dtype=complex)
    A = toeplitz(np.concatenate([[c[0]], zeros[1:]]), c[:k])
    b = np.conj(c[::-1][:k])
    B = toeplitz(np.concatenate([[b[0]], zeros[1:]]), b)
    return A, B


def schur_complement(r: Polynomial, k: int) -> np.ndarray:
    """``conj(B_k)^T - A_k B_k^{-1} conj(A_k)^T``."""
    A, B = schur_cohn_blocks(r, k)
    X = solve_triangular(B, A.conj().T, lower=False)
    return B.conj().T - A @ X


def block_matrix(r: Polynomial, k: int) -> np.ndarray:
    A, B = schur_cohn_blocks(r, k)
    return np.block([[B.conj().T, A], [A.conj().T, B]])


def schur_cohn_minors(r: Polynomial, positivity: float = DEFAULT_POSITIVITY,
                      imag_tol: float = 1e-9, form_rtol: float = 1e-8) -> SchurCohnReport:
    """Evaluate every Schur-Cohn minor of ``r`` two ways.

    The reported minor is ``det(B_k) det(S_k)`` with ``det(B_k) = conj(a_m)**k``
    (so non-monic inputs are handled) and ``S_k`` the Schur complement.  The
    block determinant, by LU with partial pivoting, must agree to
    ``form_rtol`` plus its own rounding level whenever the minor is not
    marginal.
    """
    m = r.degree
    if m < 1:
        raise ValueError("schur_cohn_minors needs degree >= 1")
    lead_conj = np.conj(r.lead)
    minors = np.empty(m)
    block = np.empty(m)
    scales = np.empty(m)
    margins = np.empty(m)
    status = []
    max_imag = 0.0
    max_disc = 0.0
    for k in range(1, m + 1):
        big = block_matrix(r, k)
        mb = complex(np.linalg.det(big))
        block_floor = 1e-13 * float(np.prod(np.linalg.norm(big, axis=1)))
        A, B = schur_cohn_blocks(r, k)
        X = solve_triangular(B, A.conj().T, lower=False)
        S = B.conj().T - A @ X
        detb = lead_conj ** k
        ms = complex(detb * np.linalg.det(S))
        scale = abs(detb) * float(np.prod(np.linalg.norm(S, axis=1)))
        scale = max(scale, np.finfo(float).tiny)
        # entry magnitudes before cancellation set the rounding level of S
        mag = np.linalg.norm(np.abs(B) + np.abs(A) @ np.abs(X), 2)
        smin = float(np.linalg.svd(S, compute_uv=False)[-1])
        margin = smin / mag if mag > 0 else 0.0
        st = "marginal" if margin <= positivity else ("positive" if ms.real > 0 else "negative")
        imag = max(abs(ms.imag), abs(mb.imag) - block_floor, 0.0)
        max_imag = max(max_imag, imag)
        disc = abs(mb.real - ms.real)
        if st != "marginal":
            # relative accuracy of det(S) degrades like eps / margin
            rel = 10 * k * np.finfo(float).eps / margin
            if imag > (imag_tol + rel) * abs(ms.real):
                raise FormMismatch(f"M_{k} has imaginary part {imag:.3g}")
            if disc > (form_rtol + rel) * abs(ms.real) + block_floor:
                raise FormMismatch(f"block and Schur forms of M_{k} disagree: {mb.real} vs {ms.real}")
        if ms.real != 0 and abs(ms.real) > block_floor:
            max_disc = max(max_disc, disc / abs(ms.real))
        minors[k - 1] = ms.real
        block[k - 1] = mb.real
        scales[k - 1] = scale
        margins[k - 1] = margin
        status.append(st)
    for arr in (minors, block, scales, margins):
        arr.flags.writeable = False
    return SchurCohnReport(minors, block, scales, margins, tuple(status), max_imag, max_disc)


# ---------------------------------------------------------------------------
# combined decision
# ---------------------------------------------------------------------------


def classify_by_roots(p: Polynomial, tol: float = DEFAULT_ROOT_TOL) -> DiskVerdict:
    """Decide zero location from the Aberth root oracle alone."""
    try:
        rs = find_roots(p)
    except NonConvergence:
        return DiskVerdict(DiskClass.UNDECIDED, path="roots")
    counts = _classify(rs.roots, tol)
    mods = np.abs(rs.roots)
    mx = float(mods.max())
    if counts[2]:
        w = complex(rs.roots[np.argmax(mods)])
        return DiskVerdict(DiskClass.SOME_OUTSIDE, witness=w, counts=counts, max_modulus=mx, path="roots")
    cls = DiskClass.ALL_INSIDE_OR_ON if counts[1] else DiskClass.ALL_STRICTLY_INSIDE
    return DiskVerdict(cls, counts=counts, max_modulus=mx, path="roots")


def zeros_in_closed_disk(p: Polynomial, tol: float = DEFAULT_ROOT_TOL,
                         positivity: float = DEFAULT_POSITIVITY) -> DiskVerdict:
    """Are all zeros of ``p`` in ``|z| <= 1``?

    Positive Schur-Cohn minors certify the open disk.  Otherwise the roots
    oracle classifies every zero against ``1 +- tol``; if the minors say some
    zero is definitely not inside while the roots say all are strictly
    inside, the two certificates conflict and the result is undecided.
    """
    if p.degree < 1:
        raise ValueError("zeros_in_closed_disk needs degree >= 1")
    nzero, q = p.strip_zero_roots()
    if q.degree == 0:
        return DiskVerdict(DiskClass.ALL_STRICTLY_INSIDE, counts=(nzero, 0, 0),
                           max_modulus=0.0, path="trivial")
    rep = schur_cohn_minors(q, positivity=positivity)
    if rep.all_positive:
        return DiskVerdict(DiskClass.ALL_STRICTLY_INSIDE, counts=(p.degree, 0, 0),
                           path="schur-cohn", report=rep)
    fallback = classify_by_roots(p, tol)
    if fallback.verdict is DiskClass.ALL_STRICTLY_INSIDE and rep.definitely_negative:
        return DiskVerdict(DiskClass.UNDECIDED, path="conflict", report=rep,
                           max_modulus=fallback.max_modulus)
    return DiskVerdict(fallback.verdict, witness=fallback.witness, counts=fallback.counts,
                       max_modulus=fallback.max_modulus, path="schur-cohn+roots", report=rep)
