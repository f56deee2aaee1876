"""Stirling and Eulerian numbers, chain-counting sets and the identities
linking them.

Every closed form here has an enumeration twin (the ``*_enum`` functions)
that shares no code with it, so the two can serve as oracles for each
other.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb, factorial
from typing import Iterable, Sequence

__all__ = [
    "IntPolynomial",
    "stirling2",
    "eulerian",
    "chain_count_A",
    "chain_count_B",
    "chain_count_A_enum",
    "chain_count_B_enum",
    "chain_count_D_sum",
    "chain_count_D_sum_enum",
    "we1_sides",
    "we2_sides",
    "verify_WE1",
    "verify_WE2",
]


class IntPolynomial:
    """Integer polynomial in ``t``; ``coefficients[i]`` multiplies ``t**i``."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[int] = ()):
        c = [int(x) for x in coefficients]
        while c and c[-1] == 0:
            c.pop()
        self.coefficients = tuple(c)

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "IntPolynomial":
        return cls([0] * power + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coeff(self, i: int) -> int:
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial(self.coeff(i) + other.coeff(i) for i in range(n))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coefficients)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coefficients)
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPolynomial":
        out = IntPolynomial([1])
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPolynomial) and self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    def __repr__(self):
        return f"IntPolynomial({list(self.coefficients)})"


T = IntPolynomial([0, 1])
T_MINUS_1 = IntPolynomial([-1, 1])


@lru_cache(maxsize=None)
def stirling2(m: int, k: int) -> int:
    """Stirling number of the second kind by the triangular recurrence."""
    if m < 0 or k < 0:
        return 0
    if m == 0 or k == 0:
        return int(m == k)
    if k > m:
        return 0
    return k * stirling2(m - 1, k) + stirling2(m - 1, k - 1)


def eulerian(m: int, k: int) -> int:
    """Eulerian number <m, k> from the alternating closed form."""
    if m < 1 or k < 0 or k > m - 1:
        return 0
    return sum((-1) ** i * comb(m + 1, i) * (k + 1 - i) ** m for i in range(k + 1))


def chain_count_B(m: int, k: int) -> int:
    """Chains ``{} = S_0 < S_1 < ... < S_{k-1} < [m]``: ``k! S(m, k)``."""
    if k < 0 or k > m:
        return 0
    return factorial(k) * stirling2(m, k)


def chain_count_A(m: int, k: int) -> int:
    """Chains ``{} <= S_1 < ... < S_k < [m]``: ``k! S(m+1, k+1)``."""
    if k < 0 or k > m:
        return 0
    return factorial(k) * stirling2(m + 1, k + 1)


# -- enumeration oracles ---------------------------------------------------

def _proper_supersets(base: frozenset, ground: frozenset):
    rest = sorted(ground - base)
    for size in range(1, len(rest) + 1):
        for extra in combinations(rest, size):
            yield base | frozenset(extra)


def _strict_chains(start: frozenset, ground: frozenset, length: int):
    """Chains ``start < X_1 < ... < X_length < ground`` (all strict)."""
    if length == 0:
        if start < ground:
            yield ()
        return
    for x in _proper_supersets(start, ground):
        if x == ground:
            continue
        for tail in _strict_chains(x, ground, length - 1):
            yield (x,) + tail


@lru_cache(maxsize=None)
def _count_chains(start: int, full: int, length: int) -> int:
    # chains start < X_1 < ... < X_length < full over bitmask subsets, counted not listed
    if length == 0:
        return int(start != full and start & full == start)
    rest = full & ~start
    total, sub = 0, rest
    while sub:
        x = start | sub
        if x != full:
            total += _count_chains(x, full, length - 1)
        sub = (sub - 1) & rest
    return total


def _subsets(ground: Sequence[int]):
    for size in range(len(ground) + 1):
        for c in combinations(ground, size):
            yield frozenset(c)


def chain_count_B_enum(m: int, k: int) -> int:
    if k == 0:
        # the chain collapses to {} = [m]
        return int(m == 0)
    return _count_chains(0, (1 << m) - 1, k - 1)


def chain_count_A_enum(m: int, k: int) -> int:
    if k == 0:
        return 1
    full = (1 << m) - 1
    return sum(_count_chains(s1, full, k - 1) for s1 in range(full))


def chain_count_D_sum(r_size: int, x_size: int, ell: int) -> int:
    """Sum over ``X <= T < R`` of the flagged chain counts D(R, T, X, ell)."""
    if not 0 <= x_size < r_size:
        raise ValueError("need 0 <= |X| < |R|")
    if ell < 1:
        return 0
    return ell * factorial(ell) * stirling2(r_size - x_size + 1, ell + 1)


def chain_count_D_sum_enum(r_size: int, x_size: int, ell: int) -> int:
    if not 0 <= x_size < r_size:
        raise ValueError("need 0 <= |X| < |R|")
    ground = frozenset(range(1, r_size + 1))
    x = frozenset(range(1, x_size + 1))
    chains = []
    for s1 in _subsets(sorted(ground)):
        if x <= s1 and s1 != ground:
            chains.extend((s1,) + tail for tail in _strict_chains(s1, ground, ell - 1))
    total = 0
    for t in _subsets(sorted(ground)):
        if x <= t and t != ground:
            total += sum(1 for ch in chains if t in ch)
    return total


# -- polynomial identities -------------------------------------------------

def we1_sides(m: int) -> tuple[IntPolynomial, IntPolynomial]:
    lhs = IntPolynomial()
    for i in range(m + 1):
        lhs = lhs + factorial(i) * stirling2(m + 1, i + 1) * T_MINUS_1 ** (m - i)
    rhs = IntPolynomial()
    for j in range(m):
        rhs = rhs + IntPolynomial.monomial(m - j, eulerian(m, j))
    return lhs, rhs


def we2_sides(m: int) -> tuple[IntPolynomial, IntPolynomial]:
    lhs = IntPolynomial()
    for i in range(m):
        lhs = lhs + factorial(i + 1) * stirling2(m, i + 1) * T_MINUS_1 ** (m - i - 1)
    rhs = IntPolynomial()
    for j in range(m):
        rhs = rhs + IntPolynomial.monomial(m - 1 - j, eulerian(m, j))
    return lhs, rhs


def verify_WE1(m: int) -> bool:
    lhs, rhs = we1_sides(m)
    return lhs == rhs


def verify_WE2(m: int) -> bool:
    lhs, rhs = we2_sides(m)
    return lhs == rhs
