import pytest

from _corpus import corpus_family, corpus_keys, cube
from minkcayley.cayley import SummandFamily
from minkcayley.geom import PointSet
from minkcayley.minksum import CAP_ENV, CandidateCapError, dual_path_check, sum_f_vector
from minkcayley.vectors import FVector

# f_0 and f_{d-1} of each corpus Minkowski sum from an independent Qhull run
QHULL_ORACLE = {
    (3, 2, 0): (13, 16), (3, 2, 1): (15, 18), (3, 2, 2): (15, 18),
    (4, 2, 0): (25, 41), (4, 2, 1): (26, 44), (4, 2, 2): (21, 34),
    (4, 3, 0): (67, 108), (4, 3, 1): (79, 127), (4, 3, 2): (79, 123),
    (5, 2, 0): (41, 115), (5, 2, 1): (39, 102), (5, 2, 2): (37, 91),
}


@pytest.mark.parametrize("key", corpus_keys())
def test_corpus_sums_match_qhull(key):
    d = key[0]
    f = sum_f_vector(corpus_family(*key))
    assert (f.f(0), f.f(d - 1)) == QHULL_ORACLE[key]
    assert sum((-1) ** k * f.f(k) for k in range(d)) == 1 - (-1) ** d


@pytest.mark.parametrize("key", corpus_keys()[:6])
def test_dual_path(key):
    assert dual_path_check(corpus_family(*key))["match"]


def test_orthogonal_squares_give_a_prism():
    square = PointSet(3, [(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)])
    diamond = PointSet(3, [(1, 0, 0), (-1, 0, 0), (0, 0, 1), (0, 0, -1)])
    f = sum_f_vector(SummandFamily(3, [square, diamond], strict=False))
    # segment + diamond is a hexagon in the xz-plane, extruded along y
    assert f == FVector(3, (1, 12, 18, 8))


def test_adding_a_point_translates():
    fam = corpus_family(3, 2, 0)
    point = PointSet(3, [(4, -1, 2)])
    moved = SummandFamily(3, [fam.summands[0], point], strict=False)
    assert sum_f_vector(moved) == sum_f_vector(SummandFamily(3, [fam.summands[0]], strict=False))


def test_two_cubes():
    fam = SummandFamily(3, [cube(), cube((1, 1, 1), 1)], strict=False)
    assert sum_f_vector(fam) == FVector(3, (1, 8, 12, 6))


def test_candidate_cap(monkeypatch):
    fam = corpus_family(4, 3, 0)
    monkeypatch.setenv(CAP_ENV, "100")
    with pytest.raises(CandidateCapError, match="cap of 100"):
        sum_f_vector(fam)
    monkeypatch.setenv(CAP_ENV, "1000")
    assert sum_f_vector(fam).f(0) == 67
