from dataclasses import replace
from fractions import Fraction

import pytest

from minkcayley.arith import Matrix, rank
from minkcayley.bounds import cyclic_f
from minkcayley.cayley import SummandFamily
from minkcayley.construct import (certify_tightness, default_params, first_violation, gamma,
                                  generate_family, hyperplane_det, search_tau_zeta, witnesses)
from minkcayley.geom import PointSet, face_lattice


@pytest.fixture(scope="module")
def certified():
    result = search_tau_zeta(default_params(4, 2, (6, 6)))
    assert result.success
    return result


def test_default_schedule():
    p = default_params(4, 2, (6, 6))
    assert p.x == (tuple(map(Fraction, range(1, 7))), tuple(map(Fraction, range(7, 13))))
    assert p.beta == (1, 0)
    assert p.epsilon == Fraction(1, 100)
    assert p.M_prime[0] > p.x[-1][-1] + p.epsilon


def test_ordering_violations_rejected():
    p = default_params(4, 2, (6, 6))
    with pytest.raises(ValueError):
        replace(p, epsilon=Fraction(2))
    with pytest.raises(ValueError):
        replace(p, beta=(0, 1))
    with pytest.raises(ValueError):
        replace(p, x=(p.x[1], p.x[0]))


def test_curve_layout():
    t = Fraction(2)
    assert gamma(1, t, Fraction(1, 3), 4, 2) == (t, Fraction(1, 3) * t ** 5, t ** 2, t ** 3)
    assert gamma(2, t, 0, 4, 2) == (0, t, t ** 2, t ** 3)


@pytest.mark.parametrize("d,r,n", [(4, 2, (6, 6)), (5, 3, (6, 6, 6))])
def test_zeta_zero_gives_cyclic_summands_in_flats(d, r, n):
    fam = generate_family(replace(default_params(d, r, n), zeta=Fraction(0)))
    for i, ps in enumerate(fam.summands, 1):
        for p in ps.points:
            assert all(p[j - 1] == 0 for j in range(1, r + 1) if j != i)
        lat = face_lattice(ps)
        assert lat.dim == d - r + 1
        assert lat.f_vector() == cyclic_f(d - r + 1, len(ps.points))


def test_hyperplane_vanishes_on_U_and_is_positive_elsewhere(certified):
    params = certified.params
    U = {1: (0,), 2: (3,)}
    assert hyperplane_det(params, {1, 2}, U, (1, 0)) == 0
    assert hyperplane_det(params, {1, 2}, U, (2, 3)) == 0
    assert hyperplane_det(params, {1, 2}, U, (1, 4)) > 0
    assert first_violation(params) is None
    assert first_violation(params, 0) is None


def test_hyperplane_rejects_malformed_U(certified):
    with pytest.raises(ValueError):
        hyperplane_det(certified.params, {1, 2}, {1: (0,)}, (1, 1))
    with pytest.raises(ValueError):
        hyperplane_det(certified.params, {1, 2}, {1: (0, 1), 2: (0,)}, (1, 2))


def test_witness_count():
    # R={1},{2}: U of size 1 or 2 from 6 points; R={1,2}: one point from each
    p = default_params(4, 2, (6, 6))
    single = 6 * 5 + 15 * 4
    assert sum(1 for _ in witnesses(p)) == 2 * single + 36 * 10


def test_certified_family(certified):
    fam = generate_family(certified.params)
    for ps in fam.summands:
        coords = Matrix.from_rows([list(q) + [1] for q in ps.points])
        assert rank(coords) == 5
        assert face_lattice(ps).f_vector() == cyclic_f(4, 6)
    report = certified.report
    assert report.certified
    assert all(report.neighborly.values())
    assert {(tuple(row["S"]), row["k"]) for row in report.rows} == {((1,), 1), ((1,), 2), ((2,), 1),
                                                                     ((2,), 2), ((1, 2), 2)}
    assert certified.zeta <= certified.zeta_hat


def test_search_in_dimension_five():
    result = search_tau_zeta(default_params(5, 2, (7, 7)))
    assert result.success and result.report.certified


def test_unsearched_parameters_can_fail():
    params = replace(default_params(5, 2, (7, 7)), tau=Fraction(1), zeta=Fraction(1))
    report = certify_tightness(generate_family(params))
    assert not report.certified
    assert report.neighborly["1,2"] is False


def test_broken_general_position_loses_tightness(certified):
    a, b = generate_family(certified.params).summands
    moved = list(b.points)
    # a_0 + b_1 = a_1 + b_0 makes two candidate sums coincide
    moved[1] = tuple(x + y - z for x, y, z in zip(a.points[1], b.points[0], a.points[0]))
    report = certify_tightness(SummandFamily(4, [a, PointSet(4, moved)]))
    assert not report.certified
    assert any(not row["equal"] for row in report.rows)


def test_budget_exhaustion_reports_witness():
    result = search_tau_zeta(default_params(4, 2, (6, 6)), budget=0)
    assert not result.success
    assert result.witness is not None
    result = search_tau_zeta(default_params(4, 2, (6, 6)), budget=3)
    assert not result.success and result.iterations == 3
