"""Cayley embeddings, mixed faces and the boundary complex of Q_R.

Summand labels are ``1..r``; a subset ``R`` of labels is a frozenset.  Faces
are vertex bitmasks over the points of the Cayley polytope they came from
(see :class:`CayleyPolytope.global_ids` for the map back to the family).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping

from .geom import FaceLattice, FaceSet, PointSet, bits, face_lattice, mask_of, minkowski_sum
from .vectors import FVector, HVector, f_to_h, nonempty_subsets

__all__ = [
    "SummandFamily",
    "CayleyPolytope",
    "MixedFaceSet",
    "CayleyInstance",
    "build_cayley",
    "mixed_faces",
    "closure_K",
    "link_in_F",
    "build_QR_boundary",
    "build_QR_boundary_K",
    "is_as_simplicial_as_possible",
    "minkowski_correspondence",
    "NotSimplicialError",
]


class NotSimplicialError(ValueError):
    """Raised when an operation needs simplicial faces and gets others."""


@dataclass(frozen=True)
class SummandFamily:
    """``r`` point sets in ``R^d``, every point a vertex of its summand.

    ``strict`` enforces the standing assumptions (``r < d``, full-dimensional
    summands, no redundant points); switch it off for degenerate examples.
    """

    d: int
    summands: tuple
    strict: bool = field(default=True, compare=False)

    def __post_init__(self):
        summands = tuple(self.summands)
        object.__setattr__(self, "summands", summands)
        if not summands:
            raise ValueError("need at least one summand")
        for i, ps in enumerate(summands, 1):
            if ps.dim != self.d:
                raise ValueError(f"summand {i} lives in R^{ps.dim}, expected R^{self.d}")
        if not self.strict:
            return
        if self.r >= self.d:
            raise ValueError(f"need r < d, got r={self.r}, d={self.d}")
        for i, ps in enumerate(summands, 1):
            lat = face_lattice(ps)
            if lat.dim != self.d:
                raise ValueError(f"summand {i} is not full-dimensional")
            if lat.dropped:
                raise ValueError(f"summand {i} has non-vertex points {list(lat.dropped)}")

    @property
    def r(self) -> int:
        return len(self.summands)

    @property
    def n(self) -> tuple:
        return tuple(len(ps) for ps in self.summands)

    def n_of(self, S: Iterable[int]) -> int:
        return sum(len(self.summands[i - 1]) for i in S)

    @property
    def labels(self) -> frozenset:
        return frozenset(range(1, self.r + 1))

    def to_dict(self) -> dict:
        return {"d": self.d, "summands": [ps.to_dict() for ps in self.summands]}

    @classmethod
    def from_dict(cls, data: Mapping, strict: bool = True) -> "SummandFamily":
        return cls(int(data["d"]), [PointSet.from_dict(s) for s in data["summands"]], strict)

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_json(cls, text: str, strict: bool = True) -> "SummandFamily":
        return cls.from_dict(json.loads(text), strict)


@dataclass
class CayleyPolytope:
    base: SummandFamily
    R: frozenset
    embedded: PointSet
    lattice: FaceLattice
    global_ids: tuple        # local point index -> index in the concatenated family
    point_labels: tuple      # local point index -> summand label

    @property
    def flat_W(self) -> tuple:
        k = len(self.R)
        return tuple(Fraction(1, k) for _ in range(k - 1))

    @cached_property
    def label_masks(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for i, lab in enumerate(self.point_labels):
            out[lab] = out.get(lab, 0) | (1 << i)
        return out

    def labels_of(self, mask: int) -> frozenset:
        return frozenset(lab for lab, m in self.label_masks.items() if m & mask)

    def vertex_mask(self, S: Iterable[int]) -> int:
        m = 0
        for i in S:
            m |= self.label_masks[i]
        return m

    def trivial_masks(self) -> set[int]:
        return {self.vertex_mask(S) for S in nonempty_subsets(self.R)}


def build_cayley(family: SummandFamily, R: Iterable[int] | None = None) -> CayleyPolytope:
    R = frozenset(family.labels if R is None else R)
    if not R or not R <= family.labels:
        raise ValueError(f"R must be a non-empty subset of 1..{family.r}")
    order = sorted(R)
    k = len(order)
    offsets = [0]
    for ps in family.summands:
        offsets.append(offsets[-1] + len(ps))
    pts, gids, labels = [], [], []
    for pos, lab in enumerate(order):
        e = [0] * (k - 1)
        if pos:
            e[pos - 1] = 1
        for j, p in enumerate(family.summands[lab - 1].points):
            pts.append(tuple(e) + tuple(p))
            gids.append(offsets[lab - 1] + j)
            labels.append(lab)
    embedded = PointSet(family.d + k - 1, pts, labels)
    return CayleyPolytope(family, R, embedded, face_lattice(embedded), tuple(gids), tuple(labels))


class MixedFaceSet(FaceSet):
    """Faces of ``C_R`` touching every label of ``R``; ``f_{-1} = (-1)^{|R|-1}``."""

    def __init__(self, R: frozenset, faces: Mapping[int, int], delta: int, labels_of):
        super().__init__(faces, delta, (-1) ** (len(R) - 1))
        self.R = frozenset(R)
        self._labels_of = labels_of

    def labels(self, mask: int) -> frozenset:
        return self._labels_of(mask)

    def to_dict(self) -> dict:
        return {"R": sorted(self.R), "delta": self.delta,
                "faces": [{"vertices": list(f.vertices), "dim": f.dim,
                           "labels": sorted(self.labels(mask_of(f.vertices)))}
                          for f in self.faces()]}


def mixed_faces(cp: CayleyPolytope, R: Iterable[int]) -> MixedFaceSet:
    R = frozenset(R)
    if not R <= cp.R:
        raise ValueError("the Cayley polytope does not contain all summands of R")
    vr = cp.vertex_mask(R)
    need = [cp.label_masks[i] for i in R]
    faces = {m: k for m, k in cp.lattice.dims.items()
             if m and m & ~vr == 0 and m != vr and all(m & x for x in need)}
    return MixedFaceSet(R, faces, cp.base.d + len(R) - 1, cp.labels_of)


def closure_K(slices: Mapping[frozenset, MixedFaceSet], R: Iterable[int]) -> FaceSet:
    """``K_R`` as the union of the slices ``F_S``, ``S <= R``, plus the empty face."""
    R = frozenset(R)
    faces = {0: -1}
    for S in nonempty_subsets(R):
        if S not in slices:
            raise KeyError(f"missing slice {sorted(S)}")
        faces.update(slices[S].dims)
    return FaceSet(faces, slices[R].delta)


def link_in_F(ms: MixedFaceSet, v: int, vertex_labels: Mapping[int, int] | None = None) -> FaceSet:
    """``{F - v : v in F in F_R}`` (empty when ``v`` carries a label outside R)."""
    if not ms.is_simplicial():
        raise NotSimplicialError("links need simplicial mixed faces")
    if vertex_labels is not None and vertex_labels[v] not in ms.R:
        return FaceSet({}, ms.delta - 1)
    return ms.link(v)


def _chains(R: frozenset) -> list[tuple]:
    """All chains ``S_1 < ... < S_l`` (l >= 1) of non-empty proper subsets of R."""
    proper = nonempty_subsets(R, proper=True)
    out = []

    def extend(chain):
        out.append(chain)
        for T in proper:
            if chain[-1] < T:
                extend(chain + (T,))

    for S in proper:
        extend((S,))
    return out


def _symbols(R: frozenset, n_points: int) -> dict[frozenset, int]:
    return {S: n_points + i for i, S in enumerate(nonempty_subsets(R, proper=True))}


def build_QR_boundary(slices: Mapping[frozenset, MixedFaceSet], R: Iterable[int],
                      n_points: int) -> tuple[FaceSet, dict]:
    """Boundary complex of ``Q_R`` from the mixed-face slices.

    Auxiliary vertices ``y_S`` get indices ``n_points, n_points + 1, ...``;
    the returned dict maps each proper subset ``S`` to its index.
    """
    R = frozenset(R)
    for S in nonempty_subsets(R):
        if not slices[S].is_simplicial():
            raise NotSimplicialError(f"slice {sorted(S)} is not simplicial")
    ys = _symbols(R, n_points)
    chains = _chains(R)
    chain_masks = [(ch[0], mask_of(ys[T] for T in ch)) for ch in chains]
    faces = {0}
    for S in nonempty_subsets(R):
        faces.update(slices[S].dims)
    for S in nonempty_subsets(R, proper=True):
        for first, cm in chain_masks:
            if S <= first:
                faces.update(m | cm for m in slices[S].dims)
    faces.update(cm for _, cm in chain_masks)
    return FaceSet(faces, slices[R].delta), ys


def build_QR_boundary_K(slices: Mapping[frozenset, MixedFaceSet], R: Iterable[int],
                        n_points: int) -> FaceSet:
    """Same complex assembled from the closures ``K_S`` and chains starting at S."""
    R = frozenset(R)
    ys = _symbols(R, n_points)
    faces = set(closure_K(slices, R).dims)
    for ch in _chains(R):
        cm = mask_of(ys[T] for T in ch)
        faces.update(m | cm for m in closure_K(slices, ch[0]).dims)
    return FaceSet(faces, slices[R].delta)


def is_as_simplicial_as_possible(cp: CayleyPolytope) -> bool:
    trivial = cp.trivial_masks()
    return all(m.bit_count() == k + 1 for m, k in cp.lattice.dims.items()
               if m not in trivial)


def minkowski_correspondence(cp: CayleyPolytope, family: SummandFamily | None = None,
                             sum_lattice: FaceLattice | None = None) -> dict:
    """Compare f_{k-1}(F_[r]) with f_{k-r}(P_1 + ... + P_r), r <= k <= d+r-1."""
    family = family or cp.base
    if cp.R != family.labels:
        raise ValueError("the correspondence needs the Cayley polytope over all summands")
    r, d = family.r, family.d
    fF = mixed_faces(cp, cp.R).f_vector()
    if sum_lattice is None:
        sum_lattice = face_lattice(minkowski_sum(family.summands))
    fP = sum_lattice.f_vector()
    rows = []
    for k in range(r, d + r):
        rows.append({"k": k, "cayley": fF.f(k - 1), "minkowski": fP.f(k - r)})
    return {"cayley_f": list(fF.entries), "minkowski_f": list(fP.entries), "rows": rows,
            "match": all(x["cayley"] == x["minkowski"] for x in rows)}


class CayleyInstance:
    """Everything derived from one Cayley polytope over a label set.

    Slices for every ``S <= R`` are read off the single lattice of ``C_R``
    (each ``C_S`` is a face of it), so one hull computation serves all
    subsets.
    """

    def __init__(self, family: SummandFamily, R: Iterable[int] | None = None,
                 name: str = "instance"):
        self.family = family
        self.name = name
        self.cp = build_cayley(family, R)
        self.R = self.cp.R
        self.d = family.d
        self._F: dict[frozenset, MixedFaceSet] = {}
        self._K: dict[frozenset, FaceSet] = {}
        self._links: dict[tuple, HVector] = {}

    @property
    def subsets(self) -> list[frozenset]:
        return nonempty_subsets(self.R)

    def n(self, S: Iterable[int]) -> int:
        return self.family.n_of(S)

    def vertices(self, S: Iterable[int]) -> list[int]:
        return bits(self.cp.vertex_mask(S))

    @cached_property
    def simplicial(self) -> bool:
        return is_as_simplicial_as_possible(self.cp)

    def F(self, S) -> MixedFaceSet:
        S = frozenset(S)
        if S not in self._F:
            self._F[S] = mixed_faces(self.cp, S)
        return self._F[S]

    @property
    def slices(self) -> dict[frozenset, MixedFaceSet]:
        return {S: self.F(S) for S in self.subsets}

    def K(self, S) -> FaceSet:
        S = frozenset(S)
        if S not in self._K:
            self._K[S] = closure_K({T: self.F(T) for T in nonempty_subsets(S)}, S)
        return self._K[S]

    def fF(self, S) -> FVector:
        return self.F(S).f_vector()

    def fK(self, S) -> FVector:
        return self.K(S).f_vector()

    def hF(self, S) -> HVector:
        if not S:
            return HVector(self.d - 1, [0] * self.d)
        return f_to_h(self.fF(S))

    def hK(self, S) -> HVector:
        return f_to_h(self.fK(S))

    def link_F(self, S, v: int) -> FaceSet:
        return link_in_F(self.F(S), v, dict(enumerate(self.cp.point_labels)))

    def link_K(self, S, v: int) -> FaceSet:
        return self.K(S).link(v)

    def h_link_F(self, S, v: int) -> HVector:
        key = ("F", frozenset(S), v)
        if key not in self._links:
            self._links[key] = f_to_h(self.link_F(S, v).f_vector())
        return self._links[key]

    def h_link_K(self, S, v: int) -> HVector:
        key = ("K", frozenset(S), v)
        if key not in self._links:
            self._links[key] = f_to_h(self.link_K(S, v).f_vector())
        return self._links[key]

    def QR(self, S=None) -> FaceSet:
        S = self.R if S is None else frozenset(S)
        q, _ = build_QR_boundary({T: self.F(T) for T in nonempty_subsets(S)}, S,
                                 len(self.cp.point_labels))
        return q

    def QR_K(self, S=None) -> FaceSet:
        S = self.R if S is None else frozenset(S)
        return build_QR_boundary_K({T: self.F(T) for T in nonempty_subsets(S)}, S,
                                   len(self.cp.point_labels))
