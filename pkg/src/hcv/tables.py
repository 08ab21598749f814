"""Closed-form split determinants for the last two Schur-Cohn minors.

The columns with index ``1, 2, n-1, n, n+1, n+2`` of the Schur complement
``S_K`` (``K = n+1`` or ``n+2``) are split as ``F + G (+ H)``, and ``det S_K``
becomes a sum of determinants, one per choice of part in each split column.
Each entry below gives one non-vanishing determinant divided by ``L_K``.

Formulas are functions of ``(n, a, e, u, v, w)`` with ``e = e^{i theta}``,
``u = n - 2a - an``, ``v = n - 2 - an`` and ``w = 2a + an - n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

Formula = Callable[[int, float, complex, float, float, float], complex]


@dataclass(frozen=True)
class TableRow:
    pattern: str                     # one letter per split column, in key order
    odd: Formula                     # n odd, or n/2 odd for even n
    even: Formula | None = None      # n/2 even; None means same as ``odd``
    alternatives: dict | None = None  # competing readings of an ambiguous or erroneous entry
    alternatives_even_only: bool = False  # readings concern the n/2 even column only


@dataclass(frozen=True)
class Table:
    name: str
    size_offset: int   # K = n + size_offset
    parity: str        # "odd" or "even" n
    rows: tuple[TableRow, ...]

    def keys(self, n: int) -> tuple[int, ...]:
        return (1, n - 1, n + 1) if self.size_offset == 1 else (1, 2, n - 1, n, n + 1, n + 2)

    @property
    def expected_count(self) -> int:
        return len(self.rows)


def _neg(f: Formula) -> Formula:
    return lambda n, a, e, u, v, w: -f(n, a, e, u, v, w)


def _rows(entries) -> tuple[TableRow, ...]:
    out = []
    for item in entries:
        pattern, odd, *rest = item
        even = None
        alternatives = None
        even_only = False
        if rest:
            flag = rest[0]
            if flag == "-":
                even = _neg(odd)
            elif callable(flag):
                even = flag
            if len(rest) > 1:
                alternatives = rest[1]
            if len(rest) > 2:
                even_only = rest[2]
        out.append(TableRow(pattern, odd, even, alternatives, even_only))
    return tuple(out)


TABLE_1 = Table("1", 1, "odd", _rows([
    ("FFF", lambda n, a, e, u, v, w: (2 * n + 1) ** 2),
    ("HFF", lambda n, a, e, u, v, w: -a * (2 * n + 1) * (2 * n - 1)),
    ("GFG", lambda n, a, e, u, v, w: 0.5 * (2 * n - 1) * (n + 1) * w),
    ("GGF", lambda n, a, e, u, v, w: 0.5 * (2 * n - 1) * (n - 1) * v),
]))

TABLE_2 = Table("2", 1, "even", _rows([
    ("FFF", lambda n, a, e, u, v, w: 2 * n * (2 * n + 2)),
    ("FFG", lambda n, a, e, u, v, w: e * w * n**2, "-"),
    ("FGF", lambda n, a, e, u, v, w: e * v * n * (n + 2), "-"),
    ("GFF", lambda n, a, e, u, v, w: -4 * n / e, "-"),
    ("GGF", lambda n, a, e, u, v, w: n * (n - 2) * v),
    ("GFG", lambda n, a, e, u, v, w: w * n**2),
    ("HFF", lambda n, a, e, u, v, w: -a * (2 * n) ** 2),
]))

TABLE_3 = Table("3", 2, "odd", _rows([
    ("FFFFFF", lambda n, a, e, u, v, w: (2 * n + 1) * (2 * n + 3)),
    ("FFFFGG", lambda n, a, e, u, v, w: e**2 / 4 * n**2 * u**2),
    ("FFFGGF", lambda n, a, e, u, v, w: -e**2 / 4 * n * (n + 2) * u * v),
    ("FFGFFG", lambda n, a, e, u, v, w: -e**2 / 4 * n * (n + 2) * u * v),
    ("FFGGFF", lambda n, a, e, u, v, w: e**2 / 4 * (n + 2) ** 2 * v**2),
    ("FGFFFG", lambda n, a, e, u, v, w: -0.5 * u * (2 * n - 1) * (n + 3)),
    ("FGFGFF", lambda n, a, e, u, v, w: 0.5 * v * (2 * n - 1) * (n + 1)),
    ("FHFFFF", lambda n, a, e, u, v, w: -a * (2 * n - 1) * (2 * n + 3)),
    ("GFFFGF", lambda n, a, e, u, v, w: -0.5 * u * (2 * n + 1) * (n + 1)),
    ("GFGFFF", lambda n, a, e, u, v, w: 0.5 * v * (2 * n + 1) * (n - 1)),
    ("GGFFFF", lambda n, a, e, u, v, w: 4 / e**2),
    ("GGFFGG", lambda n, a, e, u, v, w: 0.25 * u**2 * (n**2 - 1)),
    ("GGFGGF", lambda n, a, e, u, v, w: -0.25 * u * v * (n - 1) ** 2),
    ("GGGFFG", lambda n, a, e, u, v, w: -0.25 * u * v * (n - 3) * (n + 1)),
    ("GGGGFF", lambda n, a, e, u, v, w: 0.25 * v**2 * (n - 3) * (n - 1)),
    ("GHFFGF", lambda n, a, e, u, v, w: 0.5 * a * u * (n - 1) * (2 * n + 1)),
    ("GHGFFF", lambda n, a, e, u, v, w: -0.5 * a * v * (n - 3) * (2 * n + 1)),
    ("HFFFFF", lambda n, a, e, u, v, w: -a * (2 * n + 1) ** 2),
    ("HGFFFG", lambda n, a, e, u, v, w: 0.5 * a * u * (n + 1) * (2 * n - 1)),
    ("HGFGFF", lambda n, a, e, u, v, w: -0.5 * a * v * (n - 1) * (2 * n - 1)),
    ("HHFFFF", lambda n, a, e, u, v, w: a**2 * (2 * n + 1) * (2 * n - 1)),
]))

# For n/2 even two literal entries disagree with the determinants; the
# corrected forms are used and the literal ones kept as alternatives.
_FGFGGF_ODD = lambda n, a, e, u, v, w: -e / 4 * u * v * (n - 2) * n  # noqa: E731
_HFFFFF = lambda n, a, e, u, v, w: -2 * a * n * (2 * n + 2)  # noqa: E731
_GGGGFF_SQUARED = lambda n, a, e, u, v, w: 0.25 * v**2 * (n - 2) ** 2  # noqa: E731
_GGGGFF_LINEAR = lambda n, a, e, u, v, w: 0.25 * v * (n - 2) ** 2  # noqa: E731

TABLE_4 = Table("4", 2, "even", _rows([
    ("FFFFFF", lambda n, a, e, u, v, w: (2 * n + 2) ** 2),
    ("FFFFFG", lambda n, a, e, u, v, w: -e / 2 * u * n * (2 * n + 2), "-"),
    ("FFFFGF", lambda n, a, e, u, v, w: -e / 2 * u * n * (2 * n + 2), "-"),
    ("FFFFGG", lambda n, a, e, u, v, w: e**2 / 4 * u**2 * n**2),
    ("FFFGFF", lambda n, a, e, u, v, w: e / 2 * v * (2 * n + 2) * (n + 2), "-"),
    ("FFFGGF", lambda n, a, e, u, v, w: -e**2 / 4 * u * v * (n + 2) * n),
    ("FFGFFF", lambda n, a, e, u, v, w: e / 2 * v * (2 * n + 2) * (n + 2), "-"),
    ("FFGFFG", lambda n, a, e, u, v, w: -e**2 / 4 * u * v * (n + 2) * n),
    ("FFGGFF", lambda n, a, e, u, v, w: e**2 / 4 * v**2 * (n + 2) ** 2),
    ("FGFFFF", lambda n, a, e, u, v, w: -2 / e * (2 * n + 2), "-"),
    ("FGFFFG", lambda n, a, e, u, v, w: -u * n * (n + 1)),
    ("FGFFGF", lambda n, a, e, u, v, w: u * n),
    ("FGFFGG", lambda n, a, e, u, v, w: e / 4 * u**2 * n**2, "-"),
    ("FGFGFF", lambda n, a, e, u, v, w: v * (n - 2) * (n + 1)),
    ("FGFGGF", _FGFGGF_ODD, "-",
     {"literal": lambda n, a, e, u, v, w: e**2 / 4 * u * v * (n - 2) * n,
      "corrected": _neg(_FGFGGF_ODD)}, True),
    ("FGGFFF", lambda n, a, e, u, v, w: -v * (n + 2)),
    ("FGGFFG", lambda n, a, e, u, v, w: -e / 4 * u * v * (n + 2) * n, "-"),
    ("FGGGFF", lambda n, a, e, u, v, w: e / 4 * v**2 * (n - 2) * (n + 2), "-"),
    ("FHFFFF", lambda n, a, e, u, v, w: -4 * a * n * (n + 1)),
    ("FHFFGF", lambda n, a, e, u, v, w: e * a * u * n**2, "-"),
    ("FHGFFF", lambda n, a, e, u, v, w: -e * a * v * n * (n + 2), "-"),
    ("GFFFFF", lambda n, a, e, u, v, w: -4 / e * (n + 1), "-"),
    ("GFFFFG", lambda n, a, e, u, v, w: u * n),
    ("GFFFGF", lambda n, a, e, u, v, w: -u * n * (n + 1)),
    ("GFFFGG", lambda n, a, e, u, v, w: e / 4 * u**2 * n**2, "-"),
    ("GFFGFF", lambda n, a, e, u, v, w: -v * (n + 2)),
    ("GFFGGF", lambda n, a, e, u, v, w: -e / 4 * u * v * n * (n + 2), "-"),
    ("GFGFFF", lambda n, a, e, u, v, w: v * (n - 2) * (n + 1)),
    ("GFGFFG", lambda n, a, e, u, v, w: -e / 4 * u * v * n * (n - 2), "-"),
    ("GFGGFF", lambda n, a, e, u, v, w: e / 4 * v**2 * (n + 2) * (n - 2), "-"),
    ("GGFFFF", lambda n, a, e, u, v, w: 4 / e**2),
    ("GGFFFG", lambda n, a, e, u, v, w: u * n / e, "-"),
    ("GGFFGF", lambda n, a, e, u, v, w: u * n / e, "-"),
    ("GGFFGG", lambda n, a, e, u, v, w: 0.25 * u**2 * n**2),
    ("GGFGFF", lambda n, a, e, u, v, w: -v * (n - 2) / e, "-"),
    ("GGFGGF", lambda n, a, e, u, v, w: -0.25 * u * v * n * (n - 2)),
    ("GGGFFF", lambda n, a, e, u, v, w: -v * (n - 2) / e, "-"),
    ("GGGFFG", lambda n, a, e, u, v, w: -0.25 * u * v * n * (n - 2)),
    ("GGGGFF", _GGGGFF_SQUARED, _GGGGFF_SQUARED,
     {"squared": _GGGGFF_SQUARED, "linear": _GGGGFF_LINEAR}),
    ("GHFFFF", lambda n, a, e, u, v, w: 4 / e * a * n, "-"),
    ("GHFFGF", lambda n, a, e, u, v, w: a * u * n**2),
    ("GHGFFF", lambda n, a, e, u, v, w: -a * v * n * (n - 2)),
    ("HFFFFF", _HFFFFF, _HFFFFF,
     {"literal": lambda n, a, e, u, v, w: -2 * a * n * (n + 2), "corrected": _HFFFFF}, True),
    ("HFFFFG", lambda n, a, e, u, v, w: e * a * n**2 * u, "-"),
    ("HFFGFF", lambda n, a, e, u, v, w: -e * a * n * (n + 2) * v, "-"),
    ("HGFFFF", lambda n, a, e, u, v, w: 4 / e * a * n, "-"),
    ("HGFFFG", lambda n, a, e, u, v, w: a * n**2 * u),
    ("HGFGFF", lambda n, a, e, u, v, w: -a * n * (n - 2) * v),
    ("HHFFFF", lambda n, a, e, u, v, w: 4 * a**2 * n**2),
]))

TABLES = {t.name: t for t in (TABLE_1, TABLE_2, TABLE_3, TABLE_4)}


def table_for(n: int, size_offset: int) -> Table:
    parity = "odd" if n % 2 else "even"
    for t in TABLES.values():
        if t.size_offset == size_offset and t.parity == parity:
            return t
    raise KeyError((n, size_offset))


def row_value(row: TableRow, n: int, a: float, e: complex) -> complex:
    """Closed-form entry divided by ``L_K``, for the parity class of ``n``."""
    u, v, w = n - 2 * a - a * n, n - 2 - a * n, 2 * a + a * n - n
    f = row.odd
    if n % 2 == 0 and (n // 2) % 2 == 0 and row.even is not None:
        f = row.even
    return complex(f(n, a, e, u, v, w))


def alternative_values(row: TableRow, n: int, a: float, e: complex) -> dict[str, complex]:
    if not row.alternatives:
        return {}
    if row.alternatives_even_only and not (n % 2 == 0 and (n // 2) % 2 == 0):
        return {}
    u, v, w = n - 2 * a - a * n, n - 2 - a * n, 2 * a + a * n - n
    return {k: complex(f(n, a, e, u, v, w)) for k, f in row.alternatives.items()}
