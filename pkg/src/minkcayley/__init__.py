"""Exact face counting and upper bounds for Minkowski sums via the Cayley trick."""

from .arith import Matrix, det, parse_rational, rank
from .bounds import cyclic_f, spans
from .cayley import CayleyInstance, SummandFamily
from .geom import FaceLattice, PointSet, face_lattice, minkowski_sum
from .vectors import FVector, HVector, f_to_h, h_to_f

__version__ = "0.1.0"

__all__ = [
    "CayleyInstance",
    "FVector",
    "FaceLattice",
    "HVector",
    "Matrix",
    "PointSet",
    "SummandFamily",
    "cyclic_f",
    "det",
    "f_to_h",
    "face_lattice",
    "h_to_f",
    "minkowski_sum",
    "parse_rational",
    "rank",
    "spans",
]
