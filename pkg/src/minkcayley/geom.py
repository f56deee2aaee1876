"""Exact convex hulls and face lattices of rational point sets.

Points are scaled to a common integer lattice and projected onto their affine
hull, so every predicate below is an integer sign test.  Two facet
enumerators are provided:

* ``"exhaustive"`` tries every affinely independent ``delta``-subset as a
  hyperplane candidate.  Simple and obviously correct, but
  ``O(n^delta)``.
* ``"wrap"`` is gift wrapping: start from one facet and rotate around each
  ridge to reach the neighbouring facet.  Ridges of non-simplicial facets come
  from a recursive hull one dimension down.

Both return the same facets (the test suite checks this).  The default picks
the exhaustive search when the candidate count is small.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, gcd, lcm
from typing import Iterable, Mapping, Sequence

from .arith import format_rational, int_det, parse_rational
from .vectors import FVector

__all__ = [
    "PointSet",
    "Face",
    "FaceLattice",
    "FaceSet",
    "facets",
    "face_lattice",
    "is_simplicial",
    "vertex_link",
    "minkowski_sum",
    "bits",
    "mask_of",
    "EXHAUSTIVE_LIMIT",
]

# use the exhaustive search when C(n, delta) is at most this
EXHAUSTIVE_LIMIT = 3000


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


# -- point sets ----------------------------------------------------------

@dataclass(frozen=True)
class PointSet:
    dim: int
    points: tuple
    labels: tuple | None = None

    def __post_init__(self):
        pts = tuple(tuple(Fraction(c) for c in p) for p in self.points)
        for p in pts:
            if len(p) != self.dim:
                raise ValueError(f"point {p} does not have dimension {self.dim}")
        if len(set(pts)) != len(pts):
            raise ValueError("duplicate points")
        object.__setattr__(self, "points", pts)
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != len(pts):
                raise ValueError("one label per point")
            object.__setattr__(self, "labels", labels)

    def __len__(self):
        return len(self.points)

    def to_dict(self) -> dict:
        out = {"dim": self.dim,
               "points": [[format_rational(c) for c in p] for p in self.points]}
        if self.labels is not None:
            out["labels"] = list(self.labels)
        return out

    @classmethod
    def from_dict(cls, data: Mapping) -> "PointSet":
        pts = [[parse_rational(c) for c in p] for p in data["points"]]
        return cls(int(data["dim"]), pts, data.get("labels"))

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "PointSet":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True, order=True)
class Face:
    vertices: tuple
    dim: int


# -- integer linear algebra ----------------------------------------------

def _dot(a, p) -> int:
    return sum(x * y for x, y in zip(a, p))


def _primitive(v: list[int]) -> list[int]:
    g = 0
    for x in v:
        g = gcd(g, x)
    return [x // g for x in v] if g > 1 else v


class _Echelon:
    """Incrementally grown row-echelon basis over the integers."""

    def __init__(self):
        self.rows: list[tuple[int, list[int]]] = []

    def reduce(self, v) -> list[int]:
        v = list(v)
        for p, b in self.rows:
            if v[p]:
                f, bp = v[p], b[p]
                v = _primitive([bp * x - f * y for x, y in zip(v, b)])
        return v

    def add(self, v) -> bool:
        v = self.reduce(v)
        for p, x in enumerate(v):
            if x:
                self.rows.append((p, v))
                self.rows.sort(key=lambda t: t[0])
                return True
        return False

    def __len__(self):
        return len(self.rows)


def _normal(rows: Sequence[Sequence[int]], dim: int) -> list[int]:
    """Integer vector orthogonal to ``dim - 1`` given rows (zero if dependent)."""
    if dim == 1:
        return [1]
    out = []
    for j in range(dim):
        minor = [[r[c] for c in range(dim) if c != j] for r in rows]
        out.append((-1) ** j * int_det(minor))
    return _primitive(out)


def _integer_points(points: Sequence[Sequence[Fraction]]) -> tuple[list[list[int]], int]:
    scale = 1
    for p in points:
        for c in p:
            scale = lcm(scale, Fraction(c).denominator)
    return [[int(Fraction(c) * scale) for c in p] for p in points], scale


def _affine_reduce(pts: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[int]]:
    """Project integer points onto coordinates that are injective on their
    affine hull.  Returns the projected points and the kept coordinates."""
    if not pts:
        return [], []
    base = pts[0]
    ech = _Echelon()
    for p in pts[1:]:
        ech.add([x - y for x, y in zip(p, base)])
    coords = sorted(p for p, _ in ech.rows)
    return [[p[c] for c in coords] for p in pts], coords


# -- facet enumeration ---------------------------------------------------

def _make_facet(pts, a, b):
    m = 0
    for i, p in enumerate(pts):
        if _dot(a, p) == b:
            m |= 1 << i
    return m


def _facets_exhaustive(pts: list[list[int]], dim: int) -> dict[int, tuple]:
    found: dict[int, tuple] = {}
    n = len(pts)
    for combo in combinations(range(n), dim):
        cm = mask_of(combo)
        if any(cm & m == cm for m in found):
            continue
        p0 = pts[combo[0]]
        rows = [[x - y for x, y in zip(pts[i], p0)] for i in combo[1:]]
        a = _normal(rows, dim)
        if not any(a):
            continue
        b = _dot(a, p0)
        pos = neg = False
        for p in pts:
            v = _dot(a, p) - b
            if v > 0:
                pos = True
            elif v < 0:
                neg = True
            if pos and neg:
                break
        if pos and neg:
            continue
        if neg:
            a, b = [-x for x in a], -b
        found[_make_facet(pts, a, b)] = (tuple(a), b)
    return found


def _first_facet(pts: list[list[int]], dim: int) -> tuple[int, list[int], int]:
    # lexicographic minimum is a vertex; x_1 >= min is a supporting hyperplane
    p0 = min(pts)
    a = [1] + [0] * (dim - 1)
    b = p0[0]
    while True:
        contact = [p for p in pts if _dot(a, p) == b]
        ech = _Echelon()
        for p in contact[1:]:
            ech.add([x - y for x, y in zip(p, contact[0])])
        if len(ech) == dim - 1:
            return _make_facet(pts, a, b), a, b
        rows = [r for _, r in ech.rows]
        fill = _Echelon()
        for r in rows + [a]:
            fill.add(r)
        for j in range(dim):
            if len(rows) + 1 == dim - 1:
                break
            e = [0] * dim
            e[j] = 1
            if fill.add(e):
                rows.append(e)
        a1 = _normal(rows + [a], dim)
        b1 = _dot(a1, contact[0])
        a, b = _rotate(pts, a, b, a1, b1)


def _rotate(pts, a, b, a1, b1):
    """Tilt ``a.x >= b`` about its intersection with ``a1.x = b1`` until it
    touches a new point."""
    best_num, best_den = None, None
    for p in pts:
        f = _dot(a, p) - b
        if f > 0:
            num = b1 - _dot(a1, p)
            if best_num is None or num * best_den > best_num * f:
                best_num, best_den = num, f
    na = _primitive([best_den * x + best_num * y for x, y in zip(a1, a)] + [best_den * b1 + best_num * b])
    return na[:-1], na[-1]


def _ridges(pts: list[list[int]], dim: int, contact: list[int]) -> list[list[int]]:
    if len(contact) == dim:
        return [contact[:i] + contact[i + 1:] for i in range(dim)]
    sub, _ = _affine_reduce([pts[i] for i in contact])
    return [[contact[j] for j in bits(m)] for m in _hull_masks(sub, dim - 1)]


def _facets_wrap(pts: list[list[int]], dim: int) -> dict[int, tuple]:
    if dim == 1:
        return _facets_exhaustive(pts, 1)
    m0, a0, b0 = _first_facet(pts, dim)
    found = {m0: (tuple(a0), b0)}
    queue = [m0]
    seen_ridges: set[int] = set()
    while queue:
        fm = queue.pop()
        a, b = found[fm]
        contact = bits(fm)
        for ridge in _ridges(pts, dim, contact):
            rm = mask_of(ridge)
            if rm in seen_ridges:
                continue
            seen_ridges.add(rm)
            r0 = pts[ridge[0]]
            ech = _Echelon()
            for i in ridge[1:]:
                if len(ech) == dim - 2:
                    break
                ech.add([x - y for x, y in zip(pts[i], r0)])
            a1 = _normal([r for _, r in ech.rows] + [list(a)], dim)
            b1 = _dot(a1, r0)
            q = next(i for i in contact if not rm >> i & 1)
            if _dot(a1, pts[q]) < b1:
                a1, b1 = [-x for x in a1], -b1
            na, nb = _rotate(pts, a, b, a1, b1)
            nm = _make_facet(pts, na, nb)
            if nm not in found:
                found[nm] = (tuple(na), nb)
                queue.append(nm)
    return found


def _hull_masks(pts: list[list[int]], dim: int, method: str = "auto") -> dict[int, tuple]:
    if method == "auto":
        method = "exhaustive" if comb(len(pts), dim) <= EXHAUSTIVE_LIMIT else "wrap"
    if method == "exhaustive":
        return _facets_exhaustive(pts, dim)
    if method == "wrap":
        return _facets_wrap(pts, dim)
    raise ValueError(f"unknown hull method {method!r}")


def _vertex_mask(pts, dim, found: Mapping[int, tuple]) -> int:
    """Points where the incident facet normals have full rank."""
    vm = 0
    for i in range(len(pts)):
        ech = _Echelon()
        for m, (a, _) in found.items():
            if m >> i & 1:
                ech.add(a)
                if len(ech) == dim:
                    vm |= 1 << i
                    break
    return vm


# -- lattices ------------------------------------------------------------

class FaceSet:
    """A finite set of faces, each a vertex bitmask with a dimension.

    ``delta`` fixes the length of the f-vector.  ``f_empty`` overrides
    ``f_{-1}``; by default it is 1 when the empty face (mask 0) is present.
    Passing plain masks assumes simplices (dimension = size - 1).
    """

    def __init__(self, faces, delta: int, f_empty: int | None = None):
        if isinstance(faces, Mapping):
            self.dims = dict(faces)
        else:
            self.dims = {m: m.bit_count() - 1 for m in faces}
        self.delta = delta
        self.f_empty = f_empty

    def __contains__(self, mask: int) -> bool:
        return mask in self.dims

    def __iter__(self):
        return iter(self.dims)

    def __len__(self):
        return len(self.dims)

    @property
    def masks(self) -> frozenset:
        return frozenset(self.dims)

    def faces(self) -> list[Face]:
        return sorted(Face(tuple(bits(m)), k) for m, k in self.dims.items())

    def f_vector(self) -> FVector:
        entries = [0] * (self.delta + 1)
        for m, k in self.dims.items():
            if m and 0 <= k + 1 <= self.delta:
                entries[k + 1] += 1
        entries[0] = self.f_empty if self.f_empty is not None else int(0 in self.dims)
        return FVector(self.delta, entries)

    def is_simplicial(self) -> bool:
        return all(m.bit_count() == k + 1 for m, k in self.dims.items() if m)

    def link(self, v: int) -> "FaceSet":
        """``{G - v : v in G}`` with the empty face included iff ``{v}`` is a face."""
        bit = 1 << v
        return FaceSet({m ^ bit: k - 1 for m, k in self.dims.items() if m & bit},
                       self.delta - 1)

    def closure(self) -> "FaceSet":
        """Downward closure of a simplicial face set (all subsets of faces)."""
        out = {0}
        for m in self.dims:
            if m in out:
                continue
            vs = bits(m)
            for size in range(1, len(vs) + 1):
                for c in combinations(vs, size):
                    out.add(mask_of(c))
        return FaceSet(out, self.delta)


class FaceLattice(FaceSet):
    """Face lattice of a polytope.

    ``dims`` holds every proper face and the empty face; the polytope itself
    is ``top`` with dimension ``dim``.  ``delta`` equals ``dim`` so that
    :meth:`f_vector` is the boundary f-vector.
    """

    def __init__(self, n_points: int, dim: int, vertex_mask: int, facet_masks,
                 dims: Mapping[int, int], certificates=None, coords=None, scale=1):
        super().__init__(dims, dim)
        self.n_points = n_points
        self.dim = dim
        self.top = vertex_mask
        self.vertices = tuple(bits(vertex_mask))
        self.dropped = tuple(i for i in range(n_points) if not vertex_mask >> i & 1)
        self.facet_masks = tuple(sorted(facet_masks))
        self.certificates = certificates or {}
        self.coords = coords
        self.scale = scale

    @property
    def by_dim(self) -> dict[int, list[Face]]:
        out: dict[int, list[Face]] = {k: [] for k in range(-1, self.dim + 1)}
        for m, k in self.dims.items():
            out[k].append(Face(tuple(bits(m)), k))
        out[self.dim].append(Face(self.vertices, self.dim))
        for k in out:
            out[k].sort()
        return out

    @property
    def facet_incidence(self) -> dict[int, tuple]:
        return {i: tuple(bits(m)) for i, m in enumerate(self.facet_masks)}

    def is_simplicial(self) -> bool:
        return all(m.bit_count() == k + 1 for m, k in self.dims.items())

    def boundary(self) -> FaceSet:
        return FaceSet(self.dims, self.dim)


def _affine_rank(pts, members: list[int]) -> int:
    if not members:
        return -1
    base = pts[members[0]]
    ech = _Echelon()
    for i in members[1:]:
        ech.add([x - y for x, y in zip(pts[i], base)])
    return len(ech)


def _lattice_from(pts, dim, found, n_points, coords, scale) -> FaceLattice:
    vm = _vertex_mask(pts, dim, found)
    certs = {m & vm: a_b for m, a_b in found.items()}
    fmasks = list(certs)
    dims: dict[int, int] = {}
    for m in fmasks:
        dims[m] = dim - 1
    frontier = list(fmasks)
    while frontier:
        nxt = []
        for x in frontier:
            for g in fmasks:
                y = x & g
                if y != x and y not in dims:
                    dims[y] = None
                    nxt.append(y)
        frontier = nxt
    for m, k in dims.items():
        if k is None:
            dims[m] = _affine_rank(pts, bits(m))
    dims[0] = -1
    return FaceLattice(n_points, dim, vm, fmasks, dims, certs, coords, scale)


def _prepare(ps: PointSet):
    ipts, scale = _integer_points(ps.points)
    red, coords = _affine_reduce(ipts)
    return red, len(coords), coords, scale


def face_lattice(ps: PointSet, method: str = "auto") -> FaceLattice:
    red, dim, coords, scale = _prepare(ps)
    n = len(red)
    if dim == 0:
        return FaceLattice(n, 0, 1, [0], {0: -1}, {}, coords, scale)
    found = _hull_masks(red, dim, method)
    return _lattice_from(red, dim, found, n, coords, scale)


def facets(ps: PointSet, method: str = "auto") -> list[Face]:
    red, dim, coords, scale = _prepare(ps)
    if dim < 1:
        raise ValueError("facets need an affine span of dimension at least 1")
    lat = _lattice_from(red, dim, _hull_masks(red, dim, method), len(red), coords, scale)
    return [Face(tuple(bits(m)), dim - 1) for m in lat.facet_masks]


def is_simplicial(lat: FaceLattice) -> bool:
    return lat.is_simplicial()


def vertex_link(lat: FaceSet, v: int) -> FaceSet:
    """Link of vertex ``v`` in a simplicial face set."""
    if (1 << v) not in lat.dims:
        raise ValueError(f"{v} is not a vertex")
    if not lat.is_simplicial():
        raise NotImplementedError("vertex links are only supported for simplicial complexes")
    return lat.link(v)


def minkowski_sum(families: Sequence[PointSet]) -> PointSet:
    """Candidate set of all vertex sums (duplicates merged)."""
    if not families:
        raise ValueError("need at least one summand")
    dim = families[0].dim
    if any(f.dim != dim for f in families):
        raise ValueError("summands live in different dimensions")
    sums = {tuple([Fraction(0)] * dim)}
    for f in families:
        sums = {tuple(x + y for x, y in zip(s, p)) for s in sums for p in f.points}
    return PointSet(dim, sorted(sums))
