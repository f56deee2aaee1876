"""Upper-bound functions for mixed-face h-vectors and Minkowski-sum f-vectors.

``Bounds`` memoizes the recursive tables: ``phi(S, m, k)`` is the m-th
backward difference of the h-bound for the summands in ``S`` and
``psi(S, k)`` bounds h(K_S).  The binomials in the lower-half closed form
are generalized ones (see :func:`minkcayley.arith.gbinom`), because their
tops go negative for small vertex counts and only the polynomial
extension keeps ``phi(S, 0, 0) == (-1)^(|S|-1)``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .arith import binom, gbinom
from .cayley import CayleyInstance
from .vectors import FVector, nonempty_subsets

__all__ = [
    "Bounds",
    "BoundTable",
    "NeighborlinessVerdict",
    "cyclic_f",
    "cyclic_face_count",
    "phi",
    "psi",
    "phi_recurrence_check",
    "spans",
    "spans_simplified",
    "spans_from_h",
    "bound_table",
    "ubtm_bound_report",
    "is_R_neighborly",
    "neighborly_equivalence_check",
    "bound_checks",
]


def _norm_n(n) -> dict[int, int]:
    if isinstance(n, Mapping):
        return {int(i): int(v) for i, v in n.items()}
    return {i: int(v) for i, v in enumerate(n, 1)}


def cyclic_face_count(delta: int, n: int, k: int) -> int:
    """Number of (k-1)-faces of the cyclic delta-polytope with n vertices.

    Evaluated as a polynomial in ``n`` so it also makes sense for
    ``n <= delta``, where it is used inside :func:`spans`.
    """
    if k < 0 or k > delta:
        return 0
    total = 0
    half = delta // 2
    for i in range(half + 1):
        term = (binom(delta - i, k - i) + binom(i, k - delta + i)) * gbinom(n - delta - 1 + i, i)
        if delta % 2 == 0 and i == half:
            # starred sum: the middle term is counted once
            total += Fraction(term, 2)
        else:
            total += term
    assert Fraction(total).denominator == 1
    return int(total)


def cyclic_f(delta: int, n: int) -> FVector:
    if n <= delta:
        raise ValueError(f"a cyclic {delta}-polytope needs at least {delta + 1} vertices")
    return FVector(delta, [cyclic_face_count(delta, n, k) for k in range(delta + 1)])


class Bounds:
    """Memoized bound tables for fixed ``d`` and vertex counts ``n``."""

    def __init__(self, d: int, n):
        self.d = d
        self.n = _norm_n(n)
        self._phi: dict[tuple, int] = {}
        self._psi: dict[tuple, int] = {}

    def n_of(self, S) -> int:
        return sum(self.n[i] for i in S)

    def lower(self, S) -> int:
        return (self.d + len(S) - 1) // 2

    def closed(self, S: frozenset, k: int) -> int:
        return sum((-1) ** (len(S) - len(X)) * gbinom(self.n_of(X) - self.d - len(S) + k, k)
                   for X in nonempty_subsets(S))

    def phi(self, S, m: int, k: int) -> int:
        S = frozenset(S)
        if not S:
            return 0
        if m > 0:
            return sum((-1) ** i * binom(m, i) * self.phi(S, 0, k - i) for i in range(m + 1))
        if k < 0 or k > self.d + len(S) - 1:
            return 0
        key = (tuple(sorted(S)), k)
        if key not in self._phi:
            if k <= self.lower(S):
                self._phi[key] = self.closed(S, k)
            else:
                self._phi[key] = self.psi(S, self.d + len(S) - 1 - k)
        return self._phi[key]

    def psi(self, S, k: int) -> int:
        S = frozenset(S)
        key = (tuple(sorted(S)), k)
        if key not in self._psi:
            self._psi[key] = sum(self.phi(X, len(S) - len(X), k) for X in nonempty_subsets(S))
        return self._psi[key]

    def spans(self, R, k: int) -> int:
        """Bound on ``f_{k-1}(F_R)`` by the full two-part formula."""
        R = frozenset(R)
        r = len(R)
        delta = self.d + r - 1
        total = sum((-1) ** (r - len(S)) * cyclic_face_count(delta, self.n_of(S), k)
                    for S in nonempty_subsets(R))
        for i in range((self.d + r - 2) // 2 + 1):
            c = binom(i, k - self.d - r + 1 + i)
            if c:
                total += c * sum(self.phi(S, r - len(S), i) for S in nonempty_subsets(R, proper=True))
        return total

    def spans_from_h(self, R, k: int) -> int:
        """Same bound as the f-vector of the h-bound ``phi(R, 0, .)``."""
        R = frozenset(R)
        delta = self.d + len(R) - 1
        return sum(binom(delta - i, k - i) * self.phi(R, 0, i) for i in range(delta + 1))

    def spans_simplified(self, R, k: int) -> int:
        """Lower-half closed form ``sum_S (-1)^(|R|-|S|) C(n_S, k)``."""
        R = frozenset(R)
        return sum((-1) ** (len(R) - len(S)) * binom(self.n_of(S), k) for S in nonempty_subsets(R))


def phi(d: int, R, n, m: int, k: int) -> int:
    return Bounds(d, n).phi(R, m, k)


def psi(d: int, R, n, k: int) -> int:
    return Bounds(d, n).psi(R, k)


def phi_recurrence_check(d: int, R, n) -> bool:
    b = Bounds(d, n)
    R = frozenset(R)
    # only while phi_{k+1} is still given by the lower-half closed form
    for k in range(b.lower(R)):
        lhs = (k + 1) * b.phi(R, 0, k + 1)
        rhs = (b.n_of(R) - d - len(R) + k + 1) * b.phi(R, 0, k)
        rhs += sum(b.n[i] * b.phi(R - {i}, 1, k) for i in R)
        if lhs != rhs:
            return False
    return True


def _check_spans_args(d: int, r: int, n: dict):
    if r < 1 or r >= d:
        raise ValueError(f"need 1 <= r < d, got r={r}, d={d}")
    if len(n) != r:
        raise ValueError(f"need {r} vertex counts, got {len(n)}")
    if any(v < d + 1 for v in n.values()):
        raise ValueError(f"every n_i must be at least d+1 = {d + 1}")


def spans(d: int, r: int, n, k: int) -> int:
    n = _norm_n(n)
    _check_spans_args(d, r, n)
    b = Bounds(d, n)
    R = frozenset(range(1, r + 1))
    value = b.spans(R, k)
    if k <= (d + r - 1) // 2:
        assert value == b.spans_simplified(R, k), "spans disagrees with its lower-half form"
    return value


def spans_simplified(d: int, r: int, n, k: int) -> int:
    return Bounds(d, n).spans_simplified(range(1, r + 1), k)


def spans_from_h(d: int, r: int, n, k: int) -> int:
    return Bounds(d, n).spans_from_h(range(1, r + 1), k)


@dataclass
class BoundTable:
    d: int
    R: list
    n: dict
    phi: dict = field(default_factory=dict)     # "S|m|k" -> value
    psi: dict = field(default_factory=dict)     # "S|k" -> value
    spans: dict = field(default_factory=dict)   # k -> value
    minkowski: dict = field(default_factory=dict)  # j -> bound on f_{j-1}(P)

    def to_dict(self) -> dict:
        return asdict(self)


def _key(S) -> str:
    return ",".join(map(str, sorted(S)))


def bound_table(d: int, r: int, n) -> BoundTable:
    n = _norm_n(n)
    _check_spans_args(d, r, n)
    b = Bounds(d, n)
    R = frozenset(range(1, r + 1))
    table = BoundTable(d, sorted(R), {str(i): v for i, v in n.items()})
    for S in nonempty_subsets(R):
        top = d + len(S) - 1
        for k in range(top + 1):
            table.psi[f"{_key(S)}|{k}"] = b.psi(S, k)
            for m in range(len(R) - len(S) + 1):
                table.phi[f"{_key(S)}|{m}|{k}"] = b.phi(S, m, k)
    for k in range(d + r):
        table.spans[k] = spans(d, r, n, k)
    # f_{j-1}(P_1 + ... + P_r) = f_{j+r-2}(F_[r]) <= spans_{j+r-1}
    for j in range(1, d + 1):
        table.minkowski[j] = table.spans[j + r - 1]
    return table


def ubtm_bound_report(inst: CayleyInstance) -> dict:
    """Compare f_{k-1}(F_[r]) with spans_k([r]) for r <= k <= d+r-1."""
    d, R = inst.d, inst.R
    r = len(R)
    b = Bounds(d, {i: inst.n([i]) for i in R})
    fF = inst.fF(R)
    rows = []
    for k in range(r, d + r):
        bound = b.spans(R, k)
        rows.append({"k": k, "f_F": fF.f(k - 1), "spans": bound,
                     "minkowski_index": k - r, "ok": fF.f(k - 1) <= bound,
                     "tight": fF.f(k - 1) == bound})
    return {"rows": rows, "holds": all(x["ok"] for x in rows),
            "tight_lower_half": all(x["tight"] for x in rows if x["k"] <= (d + r - 1) // 2)}


@dataclass
class NeighborlinessVerdict:
    R: list
    is_R_neighborly: bool
    witness: list | None
    checked_sizes: list


def _spanning_subsets(inst: CayleyInstance, R: frozenset, size: int):
    verts = inst.vertices(R)
    lab = inst.cp.point_labels
    for combo in combinations(verts, size):
        if {lab[v] for v in combo} == R:
            yield combo


def _is_face(inst: CayleyInstance, combo) -> bool:
    m = 0
    for v in combo:
        m |= 1 << v
    return m in inst.cp.lattice.dims


def is_R_neighborly(inst: CayleyInstance, R) -> NeighborlinessVerdict:
    R = frozenset(R)
    sizes = list(range(len(R), (inst.d + len(R) - 1) // 2 + 1))
    for size in sizes:
        for combo in _spanning_subsets(inst, R, size):
            if not _is_face(inst, combo):
                return NeighborlinessVerdict(sorted(R), False, list(combo), sizes)
    return NeighborlinessVerdict(sorted(R), True, None, sizes)


def neighborly_equivalence_check(inst: CayleyInstance, R) -> dict:
    """Evaluate the three equivalent forms of R-neighborliness."""
    R = frozenset(R)
    d = inst.d
    top = (d + len(R) - 1) // 2
    fF, hF = inst.fF(R), inst.hF(R)
    rows = []
    for ell in range(top + 1):
        faces_ok = all(_is_face(inst, c) for c in _spanning_subsets(inst, R, ell)) if ell >= len(R) else True
        f_formula = sum((-1) ** (len(R) - len(S)) * binom(inst.n(S), ell) for S in nonempty_subsets(R))
        h_formula = sum((-1) ** (len(R) - len(S)) * gbinom(inst.n(S) - d - len(R) + ell, ell)
                        for S in nonempty_subsets(R))
        rows.append({"ell": ell, "faces": faces_ok,
                     "f": fF.f(ell - 1), "f_formula": f_formula,
                     "h": hF.h(ell), "h_formula": h_formula})
    conds = [all(x["faces"] for x in rows),
             all(x["f"] == x["f_formula"] for x in rows),
             all(x["h"] == x["h_formula"] for x in rows)]
    return {"R": sorted(R), "rows": rows, "conditions": conds, "agree": len(set(conds)) == 1}


def bound_checks(inst: CayleyInstance, R, alphas: Sequence = (0, 1, None)) -> dict:
    """h(F_R) <= phi, h(K_R) <= psi, the g-bound and the alpha-damped variant.

    ``None`` in ``alphas`` stands for (d+1)/(d-1).  Returns rows of
    (name, k, lhs, rhs, ok) with exact rational values.
    """
    R = frozenset(R)
    d = inst.d
    b = Bounds(d, {i: inst.n([i]) for i in inst.R})
    hF, hK = inst.hF(R), inst.hK(R)
    delta = d + len(R) - 1
    rows = []
    for k in range(delta + 1):
        rows.append(("h(F) <= phi", k, hF.h(k), b.phi(R, 0, k)))
        rows.append(("h(K) <= psi", k, hK.h(k), b.psi(R, k)))
    for k in range(b.lower(R) + 1):
        g = hF.h(k) - hF.h(k - 1)
        bound = sum((-1) ** (len(R) - len(S)) * gbinom(b.n_of(S) - d - len(R) - 1 + k, k)
                    for S in nonempty_subsets(R))
        rows.append(("g(F) <= closed form", k, g, bound))
    for a in alphas:
        alpha = Fraction(d + 1, d - 1) if a is None else Fraction(a)
        for k in range((d + len(R) - 1) // 2 + 1):
            lhs = hF.h(k) - alpha * sum(inst.hF(R - {i}).h(k - 1) for i in R if R - {i})
            rhs = b.phi(R, 0, k) - alpha * sum(b.phi(R - {i}, 0, k - 1) for i in R)
            rows.append((f"alpha={alpha}", k, lhs, rhs))
    out = [{"law": name, "k": k, "lhs": str(l), "rhs": str(r_), "ok": l <= r_}
           for name, k, l, r_ in rows]
    return {"R": sorted(R), "rows": out, "holds": all(x["ok"] for x in out)}
