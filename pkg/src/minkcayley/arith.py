"""Exact scalars, small dense matrices and binomial coefficients.

Rationals are :class:`fractions.Fraction`; every other module builds on the
helpers here so that no floating point value ever enters a computation.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, gcd, lcm
from typing import Iterable, Sequence

Rational = Fraction

__all__ = [
    "Rational",
    "Matrix",
    "parse_rational",
    "format_rational",
    "det",
    "rank",
    "int_det",
    "int_rank",
    "binom",
    "gbinom",
    "clear_denominators",
]


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; ints and Fractions pass through."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise TypeError(f"cannot read a rational from {text!r}")
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"malformed rational {text!r}") from None
    if sep and (den.strip().startswith(("-", "+"))):
        raise ValueError(f"sign belongs on the numerator: {text!r}")
    if q == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(p, q)


def format_rational(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class Matrix:
    """Dense row-major matrix of rationals."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(Fraction(e) for e in entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, (e for r in rows for e in r))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, (int(i == j) for i in range(n) for j in range(n)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for j in range(other.cols):
                out.append(sum(r[k] * other[k, j] for k in range(self.cols)))
        return Matrix(self.rows, other.cols, out)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Matrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"Matrix({self.rows}, {self.cols}, {[format_rational(e) for e in self.entries]})"


def clear_denominators(row: Sequence) -> tuple[list[int], int]:
    """Return ``(ints, scale)`` with ``ints[i] == row[i] * scale``."""
    scale = 1
    for e in row:
        scale = lcm(scale, Fraction(e).denominator)
    return [int(Fraction(e) * scale) for e in row], scale


def int_det(rows: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free determinant of a square integer matrix."""
    a = [list(r) for r in rows]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for p in range(k + 1, n):
                if a[p][k] != 0:
                    a[k], a[p] = a[p], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (akk * ri[j] - aik * rk[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def det(m: Matrix) -> Fraction:
    if m.rows != m.cols or m.rows < 1:
        raise ValueError(f"determinant needs a square matrix, got {m.rows}x{m.cols}")
    scale = 1
    rows = []
    for i in range(m.rows):
        ints, s = clear_denominators(m.row(i))
        rows.append(ints)
        scale *= s
    return Fraction(int_det(rows), scale)


def int_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free row reduction."""
    a = [list(r) for r in rows if any(r)]
    if not a:
        return 0
    ncols = len(a[0])
    rk = 0
    for c in range(ncols):
        piv = next((i for i in range(rk, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[rk], a[piv] = a[piv], a[rk]
        p = a[rk]
        for i in range(rk + 1, len(a)):
            f = a[i][c]
            if f:
                row = [p[c] * x - f * y for x, y in zip(a[i], p)]
                g = 0
                for x in row:
                    g = gcd(g, x)
                a[i] = [x // g for x in row] if g > 1 else row
        rk += 1
        if rk == len(a):
            break
    return rk


def rank(m: Matrix) -> int:
    return int_rank([clear_denominators(m.row(i))[0] for i in range(m.rows)])


def binom(top: int, bottom: int) -> int:
    """Binomial coefficient, 0 when ``bottom < 0`` or ``top < bottom``.

    Negative tops also give 0.  Use :func:`gbinom` for the polynomial
    extension in ``top``.
    """
    if bottom < 0 or top < bottom:
        return 0
    return comb(top, bottom)


def gbinom(top: int, bottom: int) -> int:
    """Generalized binomial ``top*(top-1)*...*(top-bottom+1)/bottom!``.

    Agrees with :func:`binom` for ``top >= 0``.  For negative ``top`` it
    follows the upper negation rule, which keeps alternating sums of
    binomials valid as polynomial identities in ``top``.
    """
    if bottom < 0:
        return 0
    if top >= 0:
        return comb(top, bottom) if top >= bottom else 0
    return (-1) ** bottom * comb(bottom - top - 1, bottom)
