"""f-, h- and g-vector calculus.

An :class:`FVector` keeps ``f_{-1}`` at index 0, so ``entries[i]`` is
``f_{i-1}``.  Mixed-face slices carry ``f_{-1} = (-1)^{|S|-1}``, which is why
entries are signed.  Subsets of summand labels are frozensets of ints.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping

from .arith import binom

__all__ = [
    "FVector",
    "HVector",
    "GTable",
    "nonempty_subsets",
    "f_to_h",
    "h_to_f",
    "g_entry",
    "g_table",
    "f_K_from_F",
    "f_F_from_K",
    "h_relations_KF",
    "vector_to_json",
    "vector_from_json",
]


def nonempty_subsets(R: Iterable[int], proper: bool = False) -> list[frozenset]:
    """Non-empty subsets of ``R`` ordered by size, then lexicographically."""
    items = sorted(R)
    top = len(items) - 1 if proper else len(items)
    return [frozenset(c) for size in range(1, top + 1) for c in combinations(items, size)]


@dataclass(frozen=True)
class FVector:
    delta: int
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))
        if len(self.entries) != self.delta + 1:
            raise ValueError(f"f-vector with delta={self.delta} needs {self.delta + 1} entries")

    def f(self, k: int) -> int:
        """``f_k``; zero outside ``-1..delta-1``."""
        i = k + 1
        return self.entries[i] if 0 <= i < len(self.entries) else 0

    def __str__(self):
        head, *rest = self.entries
        return f"({head};{','.join(map(str, rest))})"


@dataclass(frozen=True)
class HVector:
    delta: int
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))
        if len(self.entries) != self.delta + 1:
            raise ValueError(f"h-vector with delta={self.delta} needs {self.delta + 1} entries")

    def h(self, k: int) -> int:
        return self.entries[k] if 0 <= k < len(self.entries) else 0

    def __str__(self):
        return "(" + ",".join(map(str, self.entries)) + ")"


def f_to_h(f: FVector) -> HVector:
    d = f.delta
    h = [sum((-1) ** (k - i) * binom(d - i, d - k) * f.entries[i] for i in range(k + 1))
         for k in range(d + 1)]
    return HVector(d, h)


def h_to_f(h: HVector) -> FVector:
    d = h.delta
    f = [sum(binom(d - j, i - j) * h.entries[j] for j in range(i + 1)) for i in range(d + 1)]
    return FVector(d, f)


def g_entry(h: HVector, m: int, k: int) -> int:
    """``g^{(m)}_k = sum_i (-1)^i C(m, i) h_{k-i}``."""
    return sum((-1) ** i * binom(m, i) * h.h(k - i) for i in range(m + 1))


@dataclass(frozen=True)
class GTable:
    base: HVector
    orders: Mapping[int, tuple] = field(default_factory=dict)

    def g(self, m: int, k: int) -> int:
        row = self.orders.get(m)
        if row is not None and 0 <= k < len(row):
            return row[k]
        return g_entry(self.base, m, k)


def g_table(h: HVector, max_order: int) -> GTable:
    """Orders 0..max_order by repeated backward differencing."""
    if max_order < 0:
        raise ValueError("max_order must be non-negative")
    n = h.delta + 1 + max_order
    rows = {0: tuple(h.h(k) for k in range(n))}
    for m in range(1, max_order + 1):
        prev = rows[m - 1]
        rows[m] = tuple(prev[k] - (prev[k - 1] if k else 0) for k in range(n))
    return GTable(h, rows)


def _require(parts: Mapping, R: frozenset) -> list[frozenset]:
    subs = nonempty_subsets(R)
    missing = [sorted(S) for S in subs if S not in parts]
    if missing:
        raise KeyError(f"missing subsets {missing}")
    return subs


def f_K_from_F(parts: Mapping[frozenset, FVector], R) -> FVector:
    R = frozenset(R)
    subs = _require(parts, R)
    delta = parts[R].delta
    return FVector(delta, [sum(parts[S].f(k) for S in subs) for k in range(-1, delta)])


def f_F_from_K(parts: Mapping[frozenset, FVector], R) -> FVector:
    R = frozenset(R)
    subs = _require(parts, R)
    delta = parts[R].delta
    return FVector(delta, [sum((-1) ** (len(R) - len(S)) * parts[S].f(k) for S in subs)
                           for k in range(-1, delta)])


def h_relations_KF(parts: Mapping[frozenset, HVector], R, direction: str) -> HVector:
    """``K_from_F``: h(K_R) from the h(F_S); ``F_from_K``: the inverse."""
    R = frozenset(R)
    subs = _require(parts, R)
    delta = parts[R].delta
    if direction == "K_from_F":
        sign = lambda S: 1
    elif direction == "F_from_K":
        sign = lambda S: (-1) ** (len(R) - len(S))
    else:
        raise ValueError(f"unknown direction {direction!r}")
    out = [sum(sign(S) * g_entry(parts[S], len(R) - len(S), k) for S in subs)
           for k in range(delta + 1)]
    return HVector(delta, out)


def vector_to_json(v) -> str:
    if isinstance(v, FVector):
        payload = {"kind": "f", "delta": v.delta, "offset": -1, "entries": list(v.entries)}
    elif isinstance(v, HVector):
        payload = {"kind": "h", "delta": v.delta, "offset": 0, "entries": list(v.entries)}
    else:
        raise TypeError(type(v).__name__)
    return json.dumps(payload)


def vector_from_json(text: str):
    data = json.loads(text) if isinstance(text, str) else text
    offset = data.get("offset")
    cls = {-1: FVector, 0: HVector}.get(offset)
    if cls is None:
        raise ValueError(f"unknown offset {offset!r}")
    return cls(int(data["delta"]), data["entries"])
