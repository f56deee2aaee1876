"""Face numbers of a Minkowski sum computed directly from its vertex sums."""

from __future__ import annotations

import math
import os

from .cayley import CayleyInstance, SummandFamily
from .geom import face_lattice, minkowski_sum
from .vectors import FVector

__all__ = ["CandidateCapError", "DEFAULT_CAP", "candidate_cap", "sum_f_vector", "dual_path_check"]

DEFAULT_CAP = 5000
CAP_ENV = "MINKCAYLEY_CANDIDATE_CAP"


class CandidateCapError(RuntimeError):
    """The product of the vertex counts exceeds the candidate cap."""


def candidate_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return DEFAULT_CAP
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{CAP_ENV} must be an integer, got {raw!r}") from None


def sum_f_vector(family: SummandFamily, method: str = "auto") -> FVector:
    if family.strict and family.r >= family.d:
        raise ValueError(f"need r < d, got r={family.r}, d={family.d}")
    cap = candidate_cap()
    count = math.prod(len(ps.points) for ps in family.summands)
    if count > cap:
        raise CandidateCapError(f"{count} candidate sums exceed the cap of {cap} (set {CAP_ENV})")
    return face_lattice(minkowski_sum(family.summands), method).f_vector()


def dual_path_check(family: SummandFamily) -> dict:
    """f_{k-r}(P_1 + ... + P_r) against f_{k-1}(F_[r]) from the Cayley polytope."""
    direct = sum_f_vector(family)
    inst = CayleyInstance(family)
    fF = inst.fF(inst.R)
    r = family.r
    rows = [{"k": k, "minkowski": direct.f(k - r), "cayley": fF.f(k - 1)}
            for k in range(r, family.d + r)]
    return {"minkowski_f": list(direct.entries), "cayley_f": list(fF.entries), "rows": rows,
            "match": all(row["minkowski"] == row["cayley"] for row in rows)}
