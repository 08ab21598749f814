"""Verification of the zero-location argument for the critical polynomial.

For ``beta = pi/2`` the dilatation of ``F_a * f_beta`` is
``z^n e^{2 i theta} p(z) / p*(z)``, bounded by one in the disk exactly when
every zero of ``p`` lies in the closed unit disk.  Each parameter point is
checked by two independent routes (Schur-Cohn minors or Cohn reduction on
one side, Aberth roots on the other) plus closed-form minors where those
apply, sampled dilatation moduli and a horizontal-line crossing count.
"""

from __future__ import annotations

import enum
import itertools
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np

from . import tables as _tables
from .cpoly import Polynomial, poly_eval, reciprocal_conjugate
from .errors import BranchMismatch, HCVError, NonConvergence, SplitInconsistent
from .harmonic import (
    ThetaClass,
    a_par,
    a_par_beta,
    build_p,
    convolve,
    degenerate_theta_class,
    endpoint_a,
    make_F_a,
    make_f_beta,
    special_case_polys,
)
from .zerolocation import (
    DiskClass,
    classify_by_roots,
    cohn_chain,
    schur_complement,
    schur_cohn_minors,
    zeros_in_closed_disk,
)

ENV_MINOR_TOL = "HCV_TOLERANCE_MINOR"


@dataclass(frozen=True)
class Tolerances:
    minor_rel: float = 1e-8       # closed form vs numeric minor
    root_tol: float = 1e-9        # |z| within 1 +- root_tol counts as on the circle
    positivity: float = 1e-10     # minors within positivity * Hadamard scale are marginal
    branch_window: float = 1e-9   # distance to the endpoint and excluded thetas
    a_par_window: float = 1e-12   # |a(n+2) - n| for the a = n/(n+2) branch
    table_rel: float = 1e-8
    table_zero: float = 1e-10     # split determinants below this (relative to L_K) count as zero
    split_abs: float = 1e-12

    @classmethod
    def from_env(cls, **kw) -> Tolerances:
        t = cls(**kw)
        val = os.environ.get(ENV_MINOR_TOL)
        if val:
            t = replace(t, minor_rel=float(val))
        return t


@dataclass(frozen=True)
class SamplingConfig:
    radial: int = 64
    angular: int = 256
    r_max: float = 0.999
    chd_radius: float = 0.99
    chd_samples: int = 4096
    chd_lines: int = 64
    series_order: int = 4096
    check_chd: bool = True


# ---------------------------------------------------------------------------
# scalar closed forms
# ---------------------------------------------------------------------------


def L(n: int, a: float, r: int) -> float:
    """``(1/4)^r n^{r-2} (2 - n + 2a + an)^r (1 - a)^r``."""
    return 0.25**r * float(n) ** (r - 2) * (2 - n + 2 * a + a * n) ** r * (1 - a) ** r


def _low_coeffs(n, a, theta):
    p = build_p(n, a, theta)
    a0 = p.coeff(0)
    a2 = p.coeff(2) if n != 2 else 0.5 * (2 + a * n - n) * np.exp(-1j * theta)
    return a0, a2


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    lhs: complex
    rhs: float
    abs_error: float


def scalar_identities(n: int, a: float, theta: float) -> list[IdentityCheck]:
    """The five scalar quantities of the Schur complement and their factored forms."""
    a0, a2 = _low_coeffs(n, a, theta)
    ca0, ca2 = np.conj(a0), np.conj(a2)
    P = -a * a0 + a2
    q = 2 - n + 2 * a + a * n
    pairs = [
        ("X", 1 - a0 * ca0 - ca2 * P, 0.25 * n * q * (1 - a) * (2 - a)),
        ("Y", -ca0 * P + a * ca2 * P, 0.25 * n * q * (1 - a) ** 3),
        ("C", -ca0 * P, 0.25 * (n - 2 * a - a * n) * q * (1 - a)),
        ("D", a - a0 * ca2, 0.25 * n * q * (1 - a)),
        ("E", 1 - a0 * ca0, 0.25 * (n + 2) * q * (1 - a)),
    ]
    return [IdentityCheck(nm, complex(lhs), float(rhs), float(abs(lhs - rhs))) for nm, lhs, rhs in pairs]


# ---------------------------------------------------------------------------
# closed-form minors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CaseId:
    case: int
    k: int


def case_for(n: int, k: int) -> CaseId:
    """The closed-form case covering ``M_k`` of ``p`` for ``n >= 5``."""
    if n < 5:
        raise BranchMismatch("closed-form minors are derived for n >= 5")
    if not 1 <= k <= n + 2:
        raise BranchMismatch(f"k = {k} outside 1..{n + 2}")
    odd = n % 2 == 1
    if k <= n:
        return CaseId(1 if odd else 2, k)
    if k == n + 1:
        return CaseId(3 if odd else 4, k)
    return CaseId(5 if odd else 6, k)


def closed_form_minor(case: CaseId, n: int, a: float, theta: float) -> float:
    """Closed forms keyed by the parity of ``n``.

    Cases 1 and 2 are accurate only for ``k`` odd and ``k`` even
    respectively; see :func:`interior_minor` for the form valid for all ``k``.
    """
    c, k = case.case, case.k
    if n < 5:
        raise BranchMismatch("closed-form minors are derived for n >= 5")
    odd = n % 2 == 1
    if c in (1, 3, 5) and not odd or c in (2, 4, 6) and odd:
        raise BranchMismatch(f"case {c} does not cover n = {n}")
    expected_k = {1: None, 2: None, 3: n + 1, 4: n + 1, 5: n + 2, 6: n + 2}[c]
    if expected_k is None and not 1 <= k <= n or expected_k is not None and k != expected_k:
        raise BranchMismatch(f"case {c} does not cover k = {k} for n = {n}")
    Lk = L(n, a, k)
    sgn = -1.0 if (n // 2) % 2 else 1.0   # only used for even n
    if c == 1:
        return Lk * (n + k - 1) * (n + k + 1)
    if c == 2:
        return Lk * (n + k) ** 2
    if c == 3:
        return Lk * 8 * n
    if c == 4:
        return Lk * 8 * n * (1 + sgn * math.cos(theta))
    if c == 5:
        return Lk * 8 * (1 + math.cos(2 * theta))
    return Lk * 16 * (1 + sgn * math.cos(theta)) ** 2


def interior_minor(n: int, k: int, a: float) -> float:
    """``M_k`` for ``1 <= k <= n`` as a function of the parity of ``k``.

    The triangular reduction of the Schur complement ends in diagonal
    entries whose product is ``(n+k-1)(n+k+1)`` when ``k`` is odd and
    ``(n+k)^2`` when ``k`` is even, whatever the parity of ``n``.
    """
    if n < 5 or not 1 <= k <= n:
        raise BranchMismatch(f"k = {k} is not an interior index for n = {n}")
    Lk = L(n, a, k)
    return Lk * ((n + k - 1) * (n + k + 1) if k % 2 else (n + k) ** 2)


def expected_minor(n: int, k: int, a: float, theta: float) -> float:
    """Closed form used for verification: :func:`interior_minor` for ``k <= n``, Cases 3-6 beyond."""
    if k <= n:
        return interior_minor(n, k, a)
    return closed_form_minor(case_for(n, k), n, a, theta)


def numeric_minor(n: int, a: float, theta: float, k: int) -> float:
    """``M_k`` of ``p`` through its Schur-complement form (``p`` is monic)."""
    S = schur_complement(build_p(n, a, theta), k)
    return float(np.linalg.det(S).real)


# ---------------------------------------------------------------------------
# split determinants
# ---------------------------------------------------------------------------


def _base_complement(p: Polynomial, n: int, K: int) -> np.ndarray:
    """Schur complement with every Toeplitz entry of offset ``>= n`` removed."""
    from .zerolocation import schur_cohn_blocks

    A, B = schur_cohn_blocks(p, K)
    i, j = np.indices((K, K))
    far = (j - i) >= n
    A[far] = 0
    B[far] = 0
    return B.conj().T - A @ np.linalg.solve(B, A.conj().T)


def split_columns(n: int, a: float, theta: float, K: int, check: float = 1e-12):
    """Split the columns ``1, 2, n-1, n, n+1, n+2`` of ``S_K`` into parts.

    ``F`` is the column of the Schur complement with the far Toeplitz
    entries removed; ``G`` and ``H`` carry what those entries contribute.
    Returns ``(S_K, {column: {label: vector}})``.
    """
    if K not in (n + 1, n + 2):
        raise ValueError("splits exist for K = n+1 and K = n+2")
    p = build_p(n, a, theta)
    a0, a2 = _low_coeffs(n, a, theta)
    P = -a * a0 + a2
    D = a - a0 * np.conj(a2)
    full = schur_complement(p, K)
    base = _base_complement(p, n, K)
    parts: dict[int, dict[str, np.ndarray]] = {}
    for j in ([1] if K == n + 1 else [1, 2]):
        G = np.zeros(K, dtype=complex)
        for i in range(1, K + 1):
            e = n + j - i
            if e >= 0 and e % 2 == 0:
                G[i - 1] = (-a) ** (e // 2) * P
        H = np.zeros(K, dtype=complex)
        H[j - 1] = -a * D
        parts[j] = {"F": base[:, j - 1], "G": G, "H": H}
    tail = [(n - 1, 0, -np.conj(a2) * D), (n + 1, 0, -np.conj(a0) * D)]
    if K == n + 2:
        tail += [(n, 1, -np.conj(a2) * D), (n + 2, 1, -np.conj(a0) * D)]
    for j, row, val in tail:
        G = np.zeros(K, dtype=complex)
        G[row] = val
        parts[j] = {"F": base[:, j - 1], "G": G}
    for j, d in parts.items():
        err = float(np.max(np.abs(sum(d.values()) - full[:, j - 1])))
        if err > check:
            raise SplitInconsistent(f"column {j}: parts miss the column by {err:.3g}")
    return full, dict(sorted(parts.items()))


def split_determinants(n: int, a: float, theta: float, K: int, check: float = 1e-12):
    """Every determinant obtained by picking one part per split column."""
    full, parts = split_columns(n, a, theta, K, check)
    keys = tuple(parts)
    out = {}
    for combo in itertools.product(*[sorted(parts[j]) for j in keys]):
        M = full.copy()
        for j, lab in zip(keys, combo):
            M[:, j - 1] = parts[j][lab]
        out["".join(combo)] = complex(np.linalg.det(M))
    return keys, out, complex(np.linalg.det(full))


@dataclass(frozen=True)
class TableEntry:
    table: str
    pattern: str
    label: str
    formula_value: complex
    numeric_value: complex
    rel_error: float
    passed: bool
    alternatives: dict = field(default_factory=dict)   # reading -> rel error
    matched_reading: str | None = None


@dataclass(frozen=True)
class TableReport:
    table: str
    n: int
    a: float
    theta: float
    entries: tuple[TableEntry, ...]
    nonzero_count: int
    expected_count: int
    unlisted_nonzero: tuple[str, ...]
    listed_zero: tuple[str, ...]
    max_unlisted: float                # largest |det| / L_K among unlisted splits
    minor: complex
    split_sum: complex
    multilinear_rel_error: float
    vanishing_count: int = 0           # listed entries whose formula is zero at this point

    @property
    def count_matches(self) -> bool:
        return (self.nonzero_count + self.vanishing_count == self.expected_count
                and not self.unlisted_nonzero and not self.listed_zero)

    @property
    def passed(self) -> bool:
        return self.count_matches and all(e.passed for e in self.entries) and self.multilinear_rel_error < 1e-10


def _label(keys, n, pattern):
    names = []
    for j, lab in zip(keys, pattern):
        off = j - n
        idx = str(j) if j <= 2 else ("n" if off == 0 else f"n{off:+d}")
        names.append(f"{lab}{idx}")
    return " ".join(names)


def table_verify(name: str, n: int, a: float, theta: float, tol: Tolerances = Tolerances()) -> TableReport:
    """Compare one table against numerically computed split determinants."""
    table = _tables.TABLES[str(name)]
    if (n % 2 == 1) != (table.parity == "odd"):
        raise BranchMismatch(f"table {table.name} needs {table.parity} n")
    if n < 5:
        raise BranchMismatch("tables are derived for n >= 5")
    K = n + table.size_offset
    Lk = L(n, a, K)
    scale = abs(Lk)
    if scale == 0:
        raise BranchMismatch("L_K vanishes at the interval endpoint")
    keys, dets, minor = split_determinants(n, a, theta, K, tol.split_abs)
    e = complex(np.exp(1j * theta))
    listed = {r.pattern for r in table.rows}
    entries = []
    for row in table.rows:
        num = dets[row.pattern]
        val = _tables.row_value(row, n, a, e) * Lk
        if abs(val) <= tol.table_zero * scale:
            rel = abs(num - val) / scale
            ok = rel <= tol.table_zero
        else:
            rel = abs(num - val) / abs(val)
            ok = rel < tol.table_rel
        alts = {}
        matched = None
        for k, v in _tables.alternative_values(row, n, a, e).items():
            v = v * Lk
            alts[k] = abs(num - v) / max(abs(v), np.finfo(float).tiny)
        if alts:
            matched = min(alts, key=alts.get)
        entries.append(TableEntry(table.name, row.pattern, _label(keys, n, row.pattern), val, num,
                                  float(rel), bool(ok), alts, matched))
    nonzero = {k for k, v in dets.items() if abs(v) / scale > tol.table_zero}
    unlisted = sorted(nonzero - listed)
    # a listed entry may vanish at isolated points where its formula does (v = 0, say)
    vanishing = {en.pattern for en in entries if abs(en.formula_value) / scale <= tol.table_zero}
    listed_zero = sorted(listed - nonzero - vanishing)
    max_unlisted = max((abs(v) / scale for k, v in dets.items() if k not in listed), default=0.0)
    total = sum(dets.values())
    ml = abs(total - minor) / max(abs(minor), scale)
    return TableReport(table.name, n, a, theta, tuple(entries), len(nonzero), table.expected_count,
                       tuple(unlisted), tuple(listed_zero), float(max_unlisted), minor, total, float(ml),
                       len(vanishing - nonzero))


# ---------------------------------------------------------------------------
# sampling checks
# ---------------------------------------------------------------------------


def max_dilatation_sample(n: int, a: float, theta: float, cfg: SamplingConfig = SamplingConfig()) -> float:
    """Largest ``|z^n p(z) / p*(z)|`` on a polar grid inside ``|z| <= r_max``."""
    p = build_p(n, a, theta)
    ps = reciprocal_conjugate(p, n + 2)
    r = cfg.r_max * np.arange(1, cfg.radial + 1) / cfg.radial
    t = 2 * np.pi * np.arange(cfg.angular) / cfg.angular
    z = r[:, None] * np.exp(1j * t)[None, :]
    w = np.abs(z) ** n * np.abs(poly_eval(p, z)) / np.abs(poly_eval(ps, z))
    return float(np.max(w))


def boundary_curve(coeffs: np.ndarray, radius: float, samples: int) -> np.ndarray:
    """Values of ``sum c_k z^k`` at ``samples`` equally spaced points of ``|z| = radius``."""
    c = np.asarray(coeffs, dtype=complex) * radius ** np.arange(len(coeffs))
    folded = np.zeros(samples, dtype=complex)
    np.add.at(folded, np.arange(len(c)) % samples, c)
    return samples * np.fft.ifft(folded)


def horizontal_crossings(curve: np.ndarray, lines: int):
    """Crossings of the closed polyline with ``lines`` evenly spaced horizontal lines.

    Returns ``(counts, levels)``.
    """
    y = curve.imag
    lo, hi = float(y.min()), float(y.max())
    if not hi > lo:
        return np.zeros(0, dtype=int), np.zeros(0)
    levels = lo + (np.arange(lines) + 0.5) / lines * (hi - lo)
    s = np.sign(y[:, None] - levels[None, :])
    return np.sum(s != np.roll(s, 1, axis=0), axis=0), levels


def max_horizontal_crossings(curve: np.ndarray, lines: int) -> int:
    counts, _ = horizontal_crossings(curve, lines)
    return int(counts.max()) if counts.size else 0


def chd_curve(n: int, a: float, theta: float, cfg: SamplingConfig = SamplingConfig()) -> np.ndarray:
    """Image of ``|z| = chd_radius`` under ``H * h - G * g`` from the truncated series."""
    conv = convolve(make_F_a(a, cfg.series_order), make_f_beta(np.pi / 2, theta, n, cfg.series_order))
    curve = boundary_curve(conv.analytic_difference().coeffs, cfg.chd_radius, cfg.chd_samples)
    if not np.all(np.isfinite(curve)):
        raise HCVError("non-finite boundary sample")
    return curve


def chd_crossings(n: int, a: float, theta: float, cfg: SamplingConfig = SamplingConfig()):
    """Worst crossing count of the traced curve and the line level where it occurs.

    The analytic difference ``H * h - G * g`` must be convex in the
    horizontal direction, so at most two crossings per line are expected.
    """
    counts, levels = horizontal_crossings(chd_curve(n, a, theta, cfg), cfg.chd_lines)
    if not counts.size:
        return 0, None
    i = int(np.argmax(counts))
    return int(counts[i]), float(levels[i])


def chd_radius_profile(n: int, a: float, theta: float, radii, samples: int = 1 << 16,
                       lines: int = 64) -> dict[float, int]:
    """Worst crossing count of ``|z| = r`` for each ``r``, from the closed form.

    Convexity in one direction is not inherited by the images of smaller
    disks, so counts may exceed two at intermediate radii even when they are
    two close to the boundary.
    """
    from .harmonic import analytic_difference_closed_form

    t = 2 * np.pi * np.arange(samples) / samples
    return {float(r): max_horizontal_crossings(analytic_difference_closed_form(n, a, theta, r * np.exp(1j * t)), lines)
            for r in radii}


# ---------------------------------------------------------------------------
# per-point verification
# ---------------------------------------------------------------------------


class Branch(enum.Enum):
    GENERIC = "generic"
    ENDPOINT = "endpoint"
    A_PAR = "a_par"
    ODD_PI = "OddPi"
    EVEN_PI_HALF_ODD_N = "EvenPiHalfOddN"
    HALF_PI_ODD_N = "HalfPiOddN"


def classify_branch(n: int, a: float, theta: float, tol: Tolerances = Tolerances()) -> Branch:
    if abs(a - endpoint_a(n)) <= tol.branch_window:
        return Branch.ENDPOINT
    if n >= 2 and abs(a * (n + 2) - n) <= tol.a_par_window:
        return Branch.A_PAR
    tc = degenerate_theta_class(n, theta, tol.branch_window)
    if tc is not None:
        return Branch(tc.value)
    return Branch.GENERIC


@dataclass(frozen=True)
class CaseVerdict:
    n: int
    a: float
    theta: float
    branch: Branch
    exploratory: bool
    verdict: str                         # "pass", "fail" or "undecided"
    certificate: DiskClass
    oracle: DiskClass
    minors: tuple[float, ...]
    min_minor: float
    max_root_modulus: float
    max_dilatation_sample: float
    chd_max_crossings: int | None
    chd_line: float | None = None
    closed_form_rel_error: float | None = None
    worst_k: int | None = None
    identity_error: float | None = None
    notes: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def row(self) -> dict:
        return {
            "n": self.n,
            "a": self.a,
            "theta": self.theta,
            "case_branch": self.branch.value,
            "min_minor": self.min_minor,
            "max_root_modulus": self.max_root_modulus,
            "max_dilatation_sample": self.max_dilatation_sample,
            "chd_max_crossings": self.chd_max_crossings,
            "verdict": self.verdict,
        }


def verify_point(n: int, a: float, theta: float, tol: Tolerances = Tolerances(),
                 sampling: SamplingConfig = SamplingConfig()) -> CaseVerdict:
    """Check that the dilatation at ``(n, a, theta)`` is bounded by one.

    Points with ``a`` below the endpoint ``(n-2)/(n+2)`` are evaluated the
    same way but flagged as exploratory.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not -1.0 < a < 1.0:
        raise ValueError("a must lie in (-1, 1)")
    branch = classify_branch(n, a, theta, tol)
    exploratory = a < endpoint_a(n) - tol.branch_window
    p = build_p(n, a, theta)
    notes = []
    identity_error = None
    rel_err = None
    worst_k = None

    sc = schur_cohn_minors(p, positivity=tol.positivity)
    minors = tuple(float(m) for m in sc.minors)
    try:
        oracle = classify_by_roots(p, tol.root_tol)
        max_mod = float(oracle.max_modulus) if oracle.max_modulus is not None else math.nan
    except NonConvergence:  # pragma: no cover - classify_by_roots already maps this
        oracle, max_mod = None, math.nan

    if branch is Branch.ENDPOINT:
        ps = reciprocal_conjugate(p, n + 2)
        identity_error = p.max_abs_diff(-np.exp(-1j * theta) * ps)
        # p = -e^{-i theta} p* makes the dilatation a pure rotation of z^n
        if identity_error < 1e-12:
            cert = DiskClass.ALL_INSIDE_OR_ON
        else:
            cert = zeros_in_closed_disk(p, tol.root_tol, tol.positivity).verdict
            notes.append("endpoint identity not exact; fell back to zero location")
    elif branch is Branch.A_PAR:
        _, beta = special_case_polys(n, a, theta, ThetaClass.A_PAR, tol.a_par_window)
        cert = cohn_chain(beta, tol.root_tol).verdict
        chk = zeros_in_closed_disk(beta, tol.root_tol, tol.positivity).verdict
        if chk.in_closed_disk != cert.in_closed_disk:
            notes.append(f"reduced numerator: cohn chain {cert.value}, zero location {chk.value}")
            cert = DiskClass.UNDECIDED
    elif branch is Branch.GENERIC:
        if sc.all_positive:
            cert = DiskClass.ALL_STRICTLY_INSIDE
        elif sc.definitely_negative:
            cert = cohn_chain(p, tol.root_tol).verdict
            notes.append(f"minor M_{sc.first_nonpositive_index} is negative")
        else:
            cert = DiskClass.UNDECIDED
            notes.append(f"minor M_{sc.first_nonpositive_index} is marginal")
    else:
        factor, cof = special_case_polys(n, a, theta, ThetaClass(branch.value), tol.branch_window)
        seg = cohn_chain(cof, tol.root_tol).verdict
        cert = DiskClass.ALL_INSIDE_OR_ON if seg.in_closed_disk else seg

    if branch is Branch.GENERIC and n >= 5:
        worst = 0.0
        for k in range(1, n + 3):
            cf = expected_minor(n, k, a, theta)
            err = abs(minors[k - 1] - cf) / max(abs(cf), np.finfo(float).tiny)
            if err >= worst:
                worst, worst_k = err, k
        rel_err = float(worst)

    max_dil = max_dilatation_sample(n, a, theta, sampling)
    chd, chd_level = chd_crossings(n, a, theta, sampling) if sampling.check_chd else (None, None)
    if chd is not None and chd > 2:
        notes.append(f"{chd} crossings with the line y = {chd_level:.17g}")

    ora = oracle.verdict if oracle is not None else DiskClass.UNDECIDED
    if cert is DiskClass.UNDECIDED or ora is DiskClass.UNDECIDED:
        verdict = "undecided"
    elif cert.in_closed_disk != ora.in_closed_disk:
        notes.append(f"certificate {cert.value} disagrees with root oracle {ora.value}")
        verdict = "undecided"
    else:
        ok = cert.in_closed_disk and max_mod <= 1 + tol.root_tol and max_dil < 1.0
        if chd is not None:
            ok = ok and chd <= 2
        if rel_err is not None and not exploratory:
            ok = ok and rel_err < tol.minor_rel
        verdict = "pass" if ok else "fail"
    return CaseVerdict(n, float(a), float(theta), branch, exploratory, verdict, cert, ora, minors,
                       float(min(minors)), max_mod, max_dil, chd, chd_level, rel_err, worst_k,
                       identity_error, tuple(notes))


# ---------------------------------------------------------------------------
# sweeps
# ---------------------------------------------------------------------------


def _verify_star(args):
    return verify_point(*args)


def sweep(points, tol: Tolerances = Tolerances(), sampling: SamplingConfig = SamplingConfig(),
          workers: int = 1):
    """Yield :class:`CaseVerdict` for each ``(n, a, theta)`` in the given order.

    With ``workers > 1`` points run in a process pool; results are still
    yielded in input order.
    """
    pts = [(int(n), float(a), float(t)) for n, a, t in points]
    if workers <= 1:
        for n, a, t in pts:
            yield verify_point(n, a, t, tol, sampling)
        return
    with ProcessPoolExecutor(max_workers=workers) as ex:
        yield from ex.map(_verify_star, [(n, a, t, tol, sampling) for n, a, t in pts], chunksize=4)


def grid(ns, a_count: int, theta_count: int, a_margin: float = 1e-3):
    """Deterministic grid: ``a`` evenly inside ``[(n-2)/(n+2) + m, 1 - m]``, ``theta`` in ``[0, 2 pi)``."""
    out = []
    thetas = 2 * np.pi * np.arange(theta_count) / theta_count
    for n in ns:
        lo, hi = endpoint_a(n) + a_margin, 1 - a_margin
        avals = np.linspace(lo, hi, a_count) if a_count > 1 else np.array([0.5 * (lo + hi)])[:a_count]
        for a in avals:
            for t in thetas:
                out.append((int(n), float(a), float(t)))
    return out


__all__ = [
    "Branch", "CaseId", "CaseVerdict", "IdentityCheck", "L", "SamplingConfig", "TableEntry",
    "TableReport", "Tolerances", "a_par", "a_par_beta", "case_for", "chd_crossings", "chd_curve", "chd_radius_profile", "horizontal_crossings", "expected_minor", "interior_minor",
    "classify_branch", "closed_form_minor", "grid", "max_dilatation_sample",
    "max_horizontal_crossings", "numeric_minor", "scalar_identities", "split_columns",
    "split_determinants", "sweep", "table_verify", "verify_point",
]
