"""Families of polytopes that attain the Minkowski-sum upper bounds.

Summand ``i`` takes its vertices on the moment-like curve ``gamma(i, t)``:
coordinate ``i`` is ``t``, the other coordinates ``j <= r`` are
``zeta * t^(d-r+1+j)`` and the last ``d-r`` coordinates are
``t^2, ..., t^(d-r+1)``.  Curve parameters are ``x_{i,j} * tau^beta_i``.
Small ``tau`` separates the summands in scale, small ``zeta`` keeps them
close to their flats; :func:`search_tau_zeta` halves both until the
supporting-hyperplane determinants are positive and enumeration confirms
that every mixed-face slice is as neighborly as possible.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import combinations, product
from typing import Mapping, Sequence

from .arith import Matrix, det
from .bounds import Bounds, is_R_neighborly
from .cayley import CayleyInstance, SummandFamily
from .geom import PointSet
from .vectors import nonempty_subsets

__all__ = [
    "ConstructionParams",
    "SearchResult",
    "TightnessReport",
    "default_params",
    "gamma",
    "generate_family",
    "hyperplane_det",
    "hyperplane_value",
    "witnesses",
    "first_violation",
    "search_tau_zeta",
    "certify_tightness",
]


@dataclass(frozen=True)
class ConstructionParams:
    d: int
    r: int
    n: tuple
    x: tuple                 # x[i-1][j] for summand i, point j
    epsilon: Fraction
    beta: tuple
    M_prime: tuple           # d + r values above every x + epsilon
    tau: Fraction = Fraction(1)
    zeta: Fraction = Fraction(1)

    def __post_init__(self):
        set_ = lambda k, v: object.__setattr__(self, k, v)
        set_("n", tuple(int(v) for v in self.n))
        set_("x", tuple(tuple(Fraction(v) for v in row) for row in self.x))
        set_("epsilon", Fraction(self.epsilon))
        set_("beta", tuple(int(b) for b in self.beta))
        set_("M_prime", tuple(Fraction(m) for m in self.M_prime))
        set_("tau", Fraction(self.tau))
        set_("zeta", Fraction(self.zeta))
        self._validate()

    def _validate(self):
        d, r = self.d, self.r
        if not 1 <= r < d:
            raise ValueError(f"need 1 <= r < d, got r={r}, d={d}")
        if len(self.n) != r or len(self.x) != r or len(self.beta) != r:
            raise ValueError(f"need {r} entries in n, x and beta")
        if any(len(row) != ni for row, ni in zip(self.x, self.n)):
            raise ValueError("x rows must have n_i entries")
        if self.epsilon <= 0 or self.tau <= 0 or self.zeta < 0:
            raise ValueError("need epsilon > 0, tau > 0 and zeta >= 0")
        if any(b < 0 for b in self.beta) or any(a <= b for a, b in zip(self.beta, self.beta[1:])):
            raise ValueError("beta must be strictly decreasing and non-negative")
        if len(self.M_prime) != d + r:
            raise ValueError(f"need {d + r} values M'")
        for i, row in enumerate(self.x):
            chain = [Fraction(0)]
            for v in row:
                chain += [v, v + self.epsilon]
            if i == r - 1:
                chain += list(self.M_prime)
            if any(a >= b for a, b in zip(chain, chain[1:])):
                raise ValueError(f"ordering chain violated for summand {i + 1}")
        for a, b in zip(self.x, self.x[1:]):
            if a[-1] >= b[0]:
                raise ValueError("need x_{i,n_i} < x_{i+1,1}")

    def y(self, i: int, j: int) -> Fraction:
        return self.x[i - 1][j] * self.tau ** self.beta[i - 1]

    def y_tilde(self, i: int, j: int) -> Fraction:
        return (self.x[i - 1][j] + self.epsilon) * self.tau ** self.beta[i - 1]

    def M(self, s: int) -> Fraction:
        return self.M_prime[s - 1] * self.tau ** self.beta[-1]

    def to_dict(self) -> dict:
        q = str
        return {"d": self.d, "r": self.r, "n": list(self.n),
                "x": [[q(v) for v in row] for row in self.x],
                "epsilon": q(self.epsilon), "beta": list(self.beta),
                "M_prime": [q(m) for m in self.M_prime],
                "tau": q(self.tau), "zeta": q(self.zeta)}


def default_params(d: int, r: int, n: Sequence[int]) -> ConstructionParams:
    n = tuple(n)
    if len(n) != r:
        raise ValueError(f"need {r} vertex counts")
    n_max = max(n)
    x = [[(i - 1) * n_max + j for j in range(1, ni + 1)] for i, ni in enumerate(n, 1)]
    top = x[-1][-1]
    return ConstructionParams(d, r, n, x, Fraction(1, 100), tuple(range(r - 1, -1, -1)),
                              tuple(top + s for s in range(1, d + r + 1)))


def gamma(i: int, t, zeta, d: int, r: int, scaled: frozenset = frozenset()) -> tuple:
    """Point of curve ``i``; slots in ``scaled`` have their ``zeta`` divided out."""
    t, zeta = Fraction(t), Fraction(zeta)
    head = []
    for j in range(1, r + 1):
        if j == i:
            head.append(t)
        else:
            c = 1 if j in scaled else zeta
            head.append(c * t ** (d - r + 1 + j))
    return tuple(head) + tuple(t ** e for e in range(2, d - r + 2))


def generate_family(params: ConstructionParams) -> SummandFamily:
    d, r = params.d, params.r
    summands = [PointSet(d, [gamma(i, params.y(i, j), params.zeta, d, r) for j in range(ni)])
                for i, ni in enumerate(params.n, 1)]
    return SummandFamily(d, summands, strict=params.zeta > 0)


def _sigma(R: frozenset, d: int, r: int) -> int:
    # row |R|+j (1-based, j not in R) moves to the bottom, order preserved
    size = d + len(R)
    moved = {len(R) + j for j in range(1, r + 1) if j not in R}
    return sum(1 for p in moved for q in range(p + 1, size + 1) if q not in moved)


def _column(params, R, pos, i, t, zeta, scaled):
    e = [Fraction(0)] * (len(R) - 1)
    if pos[i]:
        e[pos[i] - 1] = Fraction(1)
    return [Fraction(1)] + e + list(gamma(i, t, zeta, params.d, params.r, scaled))


def _check_U(params: ConstructionParams, R: frozenset, U: Mapping[int, Sequence[int]]):
    if set(U) != set(R) or any(not U[i] for i in R):
        raise ValueError("U must pick at least one point from every summand of R")
    for i in R:
        if len(set(U[i])) != len(U[i]) or any(not 0 <= j < params.n[i - 1] for j in U[i]):
            raise ValueError(f"bad point indices for summand {i}")
    if 2 * sum(len(U[i]) for i in R) > params.d + len(R) - 1:
        raise ValueError("U is too large for a supporting hyperplane of this form")


def hyperplane_value(params: ConstructionParams, R, U: Mapping[int, Sequence[int]],
                     column: list, zeta=None) -> Fraction:
    """Signed, zeta-normalized determinant with ``column`` as first column.

    ``column`` is ``(1, e, p)`` with the zeta factors of the slots outside
    ``R`` already divided out.
    """
    R = frozenset(R)
    d, r = params.d, params.r
    zeta = params.zeta if zeta is None else Fraction(zeta)
    _check_U(params, R, U)
    order = sorted(R)
    pos = {i: k for k, i in enumerate(order)}
    scaled = frozenset(j for j in range(1, r + 1) if j not in R)
    cols = [list(column)]
    for i in order:
        for j in sorted(U[i]):
            cols.append(_column(params, R, pos, i, params.y(i, j), zeta, scaled))
            cols.append(_column(params, R, pos, i, params.y_tilde(i, j), zeta, scaled))
    pad = d + len(R) - len(cols)
    last = order[-1]
    for s in range(1, pad + 1):
        cols.append(_column(params, R, pos, last, params.M(s), zeta, scaled))
    D = Matrix.from_rows([list(row) for row in zip(*cols)])
    sign = (-1) ** (len(R) * (len(R) - 1) // 2 + _sigma(R, d, r))
    return sign * det(D)


def hyperplane_det(params: ConstructionParams, R, U: Mapping[int, Sequence[int]],
                   probe: tuple, zeta=None) -> Fraction:
    """Value of the hyperplane through ``U`` at the curve point ``probe = (i, j)``.

    ``zeta = 0`` gives the limit form; positive values everywhere off ``U``
    certify that ``U`` spans a face.
    """
    R = frozenset(R)
    i, j = probe
    if i not in R:
        raise ValueError(f"probe summand {i} is not in R")
    zeta = params.zeta if zeta is None else Fraction(zeta)
    pos = {k: p for p, k in enumerate(sorted(R))}
    scaled = frozenset(k for k in range(1, params.r + 1) if k not in R)
    col = _column(params, R, pos, i, params.y(i, j), zeta, scaled)
    return hyperplane_value(params, R, U, col, zeta)


def witnesses(params: ConstructionParams):
    """All (R, U, probe) triples whose determinants must be positive."""
    d = params.d
    for R in nonempty_subsets(range(1, params.r + 1)):
        order = sorted(R)
        top = (d + len(R) - 1) // 2
        for kappa in product(*(range(1, params.n[i - 1] + 1) for i in order)):
            if sum(kappa) > top:
                continue
            for picks in product(*(combinations(range(params.n[i - 1]), k)
                                   for i, k in zip(order, kappa))):
                U = dict(zip(order, picks))
                for i in order:
                    for j in range(params.n[i - 1]):
                        if j not in U[i]:
                            yield R, U, (i, j)


def first_violation(params: ConstructionParams, zeta=None):
    for R, U, probe in witnesses(params):
        if hyperplane_det(params, R, U, probe, zeta) <= 0:
            return {"R": sorted(R), "U": {i: list(v) for i, v in U.items()}, "probe": list(probe)}
    return None


@dataclass
class TightnessReport:
    rows: list = field(default_factory=list)
    neighborly: dict = field(default_factory=dict)

    @property
    def certified(self) -> bool:
        return all(self.neighborly.values()) and all(row["equal"] for row in self.rows)

    def to_dict(self) -> dict:
        return {"certified": self.certified, "neighborly": self.neighborly, "rows": self.rows}


def certify_tightness(family: SummandFamily) -> TightnessReport:
    inst = CayleyInstance(family)
    b = Bounds(family.d, {i: inst.n([i]) for i in inst.R})
    report = TightnessReport()
    for S in inst.subsets:
        key = ",".join(map(str, sorted(S)))
        report.neighborly[key] = is_R_neighborly(inst, S).is_R_neighborly
        f = inst.fF(S)
        for k in range(len(S), b.lower(S) + 1):
            value, bound = f.f(k - 1), b.spans(S, k)
            report.rows.append({"S": sorted(S), "k": k, "f": value, "spans": bound,
                                "equal": value == bound})
    return report


@dataclass
class SearchResult:
    success: bool
    params: ConstructionParams
    tau: Fraction | None = None
    zeta: Fraction | None = None
    zeta_hat: Fraction | None = None    # min over witnesses of the first positive grid value
    iterations: int = 0
    witness: dict | None = None
    report: TightnessReport | None = None

    def to_dict(self) -> dict:
        q = lambda v: None if v is None else str(v)
        return {"success": self.success, "tau": q(self.tau), "zeta": q(self.zeta),
                "zeta_hat": q(self.zeta_hat), "iterations": self.iterations,
                "witness": self.witness, "params": self.params.to_dict(),
                "certificate": None if self.report is None else self.report.to_dict()}


def _zeta_hat(params: ConstructionParams, zeta: Fraction) -> Fraction:
    # smallest per-witness grid value: first zeta in 1, 1/2, ... where it turns positive
    best = Fraction(1)
    for R, U, probe in witnesses(params):
        z = Fraction(1)
        while z > zeta and hyperplane_det(params, R, U, probe, z) <= 0:
            z /= 2
        best = min(best, z)
    return best


def search_tau_zeta(params: ConstructionParams, budget: int = 40) -> SearchResult:
    """Halve ``tau`` (limit checks at zeta 0), then ``zeta`` (enumeration).

    ``budget`` caps the number of candidate values tried over both phases.
    """
    tau, used = Fraction(1), 0
    # diagnostic for the starting point, reported if the budget runs out first
    witness = first_violation(replace(params, tau=tau, zeta=Fraction(1))) or {
        "certificate": "not attempted"}
    while used < budget:
        used += 1
        witness = first_violation(replace(params, tau=tau), 0)
        if witness is None:
            break
        tau /= 2
    else:
        return SearchResult(False, replace(params, tau=tau), iterations=used, witness=witness)
    zeta = Fraction(1)
    while used < budget:
        used += 1
        cand = replace(params, tau=tau, zeta=zeta)
        witness = first_violation(cand)
        if witness is None:
            report = certify_tightness(generate_family(cand))
            if report.certified:
                return SearchResult(True, cand, tau, zeta, _zeta_hat(cand, zeta), used, None, report)
            witness = {"certificate": "enumeration failed"}
        zeta /= 2
    return SearchResult(False, replace(params, tau=tau, zeta=zeta), tau, None,
                        iterations=used, witness=witness)
