"""Checks of the face-number laws on enumerated Cayley instances.

Every check returns a :class:`CheckResult` that records both sides of the
relation at each index.  Inequalities with rational coefficients are
multiplied through by their common denominator first, so all recorded
values are integers.  Laws that need simplicial faces return a ``refused``
result on other input.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from math import factorial
from typing import Callable, Iterable

from .cayley import CayleyInstance
from .combid import IntPolynomial, eulerian, stirling2
from .vectors import HVector, f_to_h, g_entry, nonempty_subsets

__all__ = [
    "CheckResult",
    "VerificationReport",
    "check_dehn_sommerville",
    "check_recurrence_equality",
    "check_recurrence_equality_K",
    "check_recurrence_inequality",
    "check_link_inequality",
    "check_simplify_identity",
    "check_h0_convention",
    "check_inclusion_exclusion",
    "check_QR_f_forms",
    "check_QR_h_forms",
    "check_QR_palindromic",
    "LAWS",
    "verify_instance",
]


@dataclass
class CheckResult:
    law: str
    anchor: str
    R: list
    relation: str                      # "==" or "<="
    rows: list = field(default_factory=list)
    status: str = "pass"               # pass | fail | refused
    note: str = ""

    def add(self, k, lhs, rhs):
        ok = lhs == rhs if self.relation == "==" else lhs <= rhs
        self.rows.append({"k": k, "lhs": lhs, "rhs": rhs, "ok": ok})
        if not ok and self.status == "pass":
            self.status = "fail"

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    @property
    def first_failure(self):
        return next((row["k"] for row in self.rows if not row["ok"]), None)

    def to_dict(self) -> dict:
        out = asdict(self)
        out["first_failure"] = self.first_failure
        return out


@dataclass
class VerificationReport:
    instance_id: str
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    def to_dict(self) -> dict:
        return {"instance": self.instance_id, "passed": self.passed,
                "checks": [c.to_dict() for c in self.checks]}

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    def render(self) -> str:
        lines = [f"instance {self.instance_id}"]
        width = max((len(c.law) for c in self.checks), default=4)
        for c in self.checks:
            where = "" if c.first_failure is None else f"  first failure at k={c.first_failure}"
            lines.append(f"  {c.law:<{width}}  R={c.R}  {c.status:<7} "
                         f"{len(c.rows)} rows{where}")
        return "\n".join(lines)


def _refuse(result: CheckResult, why: str) -> CheckResult:
    result.status = "refused"
    result.note = f"precondition: {why}"
    return result


def _needs_simplicial(inst: CayleyInstance, result: CheckResult) -> CheckResult | None:
    if not inst.simplicial:
        return _refuse(result, "Cayley polytope is not as simplicial as possible")
    return None


def check_dehn_sommerville(hF: HVector, hK: HVector, d: int, r_size: int) -> CheckResult:
    delta = d + r_size - 1
    if hF.delta != delta or hK.delta != delta:
        raise ValueError(f"both h-vectors need delta = {delta}")
    res = CheckResult("dehn-sommerville", "h(F_R) reversed equals h(K_R)", [], "==")
    for k in range(delta + 1):
        res.add(k, hF.h(delta - k), hK.h(k))
    return res


def check_recurrence_equality(inst: CayleyInstance, R) -> CheckResult:
    R = frozenset(R)
    res = CheckResult("recurrence-equality", "vertex-link recurrence for h(F_R)", sorted(R), "==")
    if (refused := _needs_simplicial(inst, res)) is not None:
        return refused
    hF = inst.hF(R)
    delta = hF.delta
    links = [inst.h_link_F(R, v) for v in inst.vertices(R)]
    for k in range(delta):
        lhs = (k + 1) * hF.h(k + 1) + (delta - k) * hF.h(k)
        res.add(k, lhs, sum(h.h(k) for h in links))
    return res


def check_recurrence_equality_K(inst: CayleyInstance, R) -> CheckResult:
    """Same recurrence with the links taken in the closed complexes K_S."""
    R = frozenset(R)
    res = CheckResult("recurrence-equality-K", "vertex-link recurrence via links in K_S",
                      sorted(R), "==")
    if (refused := _needs_simplicial(inst, res)) is not None:
        return refused
    hF = inst.hF(R)
    delta = hF.delta
    link_h = {S: [inst.h_link_K(S, v) for v in inst.vertices(S)]
              for S in nonempty_subsets(R)}
    for k in range(delta):
        lhs = (k + 1) * hF.h(k + 1) + (delta - k) * hF.h(k)
        rhs = sum((-1) ** (len(R) - len(S)) * g_entry(h, len(R) - len(S), k)
                  for S, hs in link_h.items() for h in hs)
        res.add(k, lhs, rhs)
    return res


def check_recurrence_inequality(inst: CayleyInstance, R) -> CheckResult:
    R = frozenset(R)
    res = CheckResult("recurrence-inequality", "h_{k+1}(F_R) bound from h_k and g_k of smaller slices",
                      sorted(R), "<=",
                      note="both sides multiplied by k+1")
    if (refused := _needs_simplicial(inst, res)) is not None:
        return refused
    d = inst.d
    if any(n < d + 1 for n in inst.family.n):
        return _refuse(res, "need n_i >= d+1")
    hF = inst.hF(R)
    nR = inst.n(R)
    smaller = {i: inst.hF(R - {i}) for i in R}
    for k in range(d + len(R) - 1):
        lhs = (k + 1) * hF.h(k + 1)
        rhs = (nR - d - len(R) + 1 + k) * hF.h(k)
        rhs += sum(inst.n([i]) * g_entry(h, 1, k) for i, h in smaller.items() if R - {i})
        res.add(k, lhs, rhs)
    return res


def _link_sides(inst: CayleyInstance, R: frozenset, k: int):
    lhs = rhs = 0
    for S in nonempty_subsets(R):
        m = len(R) - len(S)
        sign = (-1) ** m
        hK = inst.hK(S)
        for v in inst.vertices(S):
            lhs += sign * g_entry(inst.h_link_K(S, v), m, k)
            rhs += sign * g_entry(hK, m, k)
    return lhs, rhs


def check_link_inequality(inst: CayleyInstance, R) -> CheckResult:
    R = frozenset(R)
    res = CheckResult("link-inequality", "links versus closures, alternating over S <= R",
                      sorted(R), "<=")
    if (refused := _needs_simplicial(inst, res)) is not None:
        return refused
    for k in range(inst.d + len(R)):
        res.add(k, *_link_sides(inst, R, k))
    return res


def check_simplify_identity(inst: CayleyInstance, R) -> CheckResult:
    R = frozenset(R)
    res = CheckResult("simplify-identity", "alternating n_S-weighted g-sum of K_S",
                      sorted(R), "==")
    hF = inst.hF(R)
    for k in range(inst.d + len(R)):
        lhs = sum((-1) ** (len(R) - len(S)) * inst.n(S) * g_entry(inst.hK(S), len(R) - len(S), k)
                  for S in nonempty_subsets(R))
        rhs = inst.n(R) * hF.h(k)
        rhs += sum(inst.n([i]) * g_entry(inst.hF(R - {i}), 1, k) for i in R if R - {i})
        res.add(k, lhs, rhs)
    return res


def check_h0_convention(inst: CayleyInstance, R) -> CheckResult:
    R = frozenset(R)
    res = CheckResult("h0-convention", "h_0(F_R) = (-1)^(|R|-1)", sorted(R), "==")
    res.add(0, inst.hF(R).h(0), (-1) ** (len(R) - 1))
    return res


def check_inclusion_exclusion(inst: CayleyInstance, R) -> CheckResult:
    """f(K_R) counted directly equals the sum of the slices (k = -1 included)."""
    R = frozenset(R)
    res = CheckResult("inclusion-exclusion", "f(K_R) = sum over S <= R of f(F_S)",
                      sorted(R), "==")
    fK = inst.fK(R)
    for k in range(-1, fK.delta):
        res.add(k, fK.f(k), sum(inst.fF(S).f(k) for S in nonempty_subsets(R)))
    return res


def check_QR_f_forms(inst: CayleyInstance, R) -> CheckResult:
    """f(dQ_R) of the built complex against the Stirling F-form and K-form."""
    R = frozenset(R)
    res = CheckResult("QR-f-forms", "f(dQ_R) via Stirling numbers, F- and K-forms",
                      sorted(R), "==", note="rhs is [F-form, K-form]")
    if (refused := _needs_simplicial(inst, res)) is not None:
        return refused
    fq = inst.QR(R).f_vector()
    proper = nonempty_subsets(R, proper=True)
    for k in range(-1, fq.delta):
        f_form = inst.fF(R).f(k) + sum(
            factorial(i) * stirling2(len(R) - len(S) + 1, i + 1) * inst.fF(S).f(k - i)
            for S in proper for i in range(len(R) - len(S) + 1))
        k_form = inst.fK(R).f(k) + sum(
            factorial(i + 1) * stirling2(len(R) - len(S), i + 1) * inst.fK(S).f(k - 1 - i)
            for S in proper for i in range(len(R) - len(S)))
        res.add(k, [fq.f(k), fq.f(k)], [f_form, k_form])
    return res


def _hpoly(h: HVector) -> IntPolynomial:
    # h(t) = sum_i h_i t^(delta - i)
    return IntPolynomial(reversed(h.entries))


def check_QR_h_forms(inst: CayleyInstance, R) -> CheckResult:
    """h(dQ_R) as a polynomial against the Eulerian F-form and K-form."""
    R = frozenset(R)
    res = CheckResult("QR-h-forms", "h(dQ_R) via Eulerian numbers, F- and K-forms",
                      sorted(R), "==", note="rows compare coefficients of t^k")
    if (refused := _needs_simplicial(inst, res)) is not None:
        return refused
    hq = _hpoly(f_to_h(inst.QR(R).f_vector()))
    pf, pk = _hpoly(inst.hF(R)), _hpoly(inst.hK(R))
    for S in nonempty_subsets(R, proper=True):
        m = len(R) - len(S)
        for j in range(m):
            e = eulerian(m, j)
            pf = pf + IntPolynomial.monomial(j + 1, e) * _hpoly(inst.hF(S))
            pk = pk + IntPolynomial.monomial(j, e) * _hpoly(inst.hK(S))
    top = max(hq.degree, pf.degree, pk.degree, 0)
    for k in range(top + 1):
        res.add(k, [hq.coeff(k), hq.coeff(k)], [pf.coeff(k), pk.coeff(k)])
    return res


def check_QR_palindromic(inst: CayleyInstance, R) -> CheckResult:
    R = frozenset(R)
    res = CheckResult("QR-palindromic", "h(dQ_R) is palindromic", sorted(R), "==")
    if (refused := _needs_simplicial(inst, res)) is not None:
        return refused
    q = inst.QR(R)
    same = set(q.dims) == set(inst.QR_K(R).dims)
    h = f_to_h(q.f_vector())
    for k in range(h.delta + 1):
        res.add(k, h.h(k), h.h(h.delta - k))
    if not same:
        res.status = "fail"
        res.note = "F-form and K-form assemblies of dQ_R differ"
    return res


def _ds(inst: CayleyInstance, R) -> CheckResult:
    R = frozenset(R)
    res = check_dehn_sommerville(inst.hF(R), inst.hK(R), inst.d, len(R))
    res.R = sorted(R)
    if not inst.simplicial:
        return _refuse(res, "Cayley polytope is not as simplicial as possible")
    return res


LAWS: dict[str, Callable[[CayleyInstance, frozenset], CheckResult]] = {
    "h0": check_h0_convention,
    "inclusion-exclusion": check_inclusion_exclusion,
    "ds": _ds,
    "recurrence": check_recurrence_equality,
    "recurrence-K": check_recurrence_equality_K,
    "recurrence-inequality": check_recurrence_inequality,
    "link": check_link_inequality,
    "simplify": check_simplify_identity,
    "qr-f": check_QR_f_forms,
    "qr-h": check_QR_h_forms,
    "qr-palindromic": check_QR_palindromic,
}


def verify_instance(inst: CayleyInstance, laws: Iterable[str] | None = None,
                    subsets: Iterable | None = None) -> VerificationReport:
    names = list(LAWS) if laws is None else list(laws)
    unknown = [n for n in names if n not in LAWS]
    if unknown:
        raise KeyError(f"unknown laws {unknown}; choose from {sorted(LAWS)}")
    report = VerificationReport(inst.name)
    for S in (inst.subsets if subsets is None else [frozenset(s) for s in subsets]):
        for name in names:
            report.checks.append(LAWS[name](inst, S))
    return report
