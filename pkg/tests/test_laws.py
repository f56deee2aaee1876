import json

import pytest

from _corpus import Perturbed, corpus_instance, cubes_instance
from minkcayley import laws
from minkcayley.vectors import HVector


@pytest.fixture(scope="module")
def inst():
    return corpus_instance(4, 3, 0)


def test_all_laws_pass_on_generic_instance(inst):
    report = laws.verify_instance(inst)
    assert report.passed, report.render()
    assert {c.law for c in report.checks} >= {"dehn-sommerville", "recurrence-equality",
                                              "QR-palindromic", "link-inequality"}


def test_report_serializes(inst):
    report = laws.verify_instance(inst, ["ds", "h0"], subsets=[{1, 2}])
    data = json.loads(report.to_json(default=str))
    assert data["passed"] and len(data["checks"]) == 2
    assert all(c["R"] == [1, 2] for c in data["checks"])


def test_unknown_law_rejected(inst):
    with pytest.raises(KeyError):
        laws.verify_instance(inst, ["nonsense"])


def test_dehn_sommerville_direct_vectors():
    hF = HVector(3, (1, 2, 2, 1))
    assert laws.check_dehn_sommerville(hF, hF, 3, 1).passed
    bad = laws.check_dehn_sommerville(hF, HVector(3, (1, 2, 3, 1)), 3, 1)
    assert not bad.passed and bad.first_failure == 2


def test_checks_refuse_on_degenerate_instance():
    inst = cubes_instance()
    res = laws.check_recurrence_equality(inst, inst.R)
    assert res.status == "refused" and res.note.startswith("precondition")
    assert laws.check_h0_convention(inst, inst.R).passed
    assert laws.check_inclusion_exclusion(inst, inst.R).passed


R12 = frozenset({1, 2})
R123 = frozenset({1, 2, 3})


def _vertex(inst, S):
    return inst.vertices(S)[0]


# (law, method, subset, entry index, delta, vertex?, expected first failing index)
NEGATIVE = [
    ("h0", "hF", R12, 0, 1, False, 0),
    ("inclusion-exclusion", "fK", R12, 3, 1, False, 2),
    ("ds", "hK", R123, 2, 1, False, 2),
    ("recurrence", "h_link_F", R12, 1, 1, True, 1),
    ("recurrence-K", "h_link_K", R12, 2, 1, True, 2),
    ("recurrence-inequality", "hF", R12, 2, 10 ** 6, False, 1),
    ("link", "h_link_K", R123, 3, 10 ** 6, True, 3),
    ("simplify", "hK", R12, 1, 1, False, 1),
    ("qr-f", "fF", R12, 2, 1, False, 1),
    ("qr-h", "hF", R12, 0, 1, False, 5),
    ("qr-palindromic", "QR", R12, 5, 1, False, 0),
]


@pytest.mark.parametrize("law,method,S,index,delta,by_vertex,expected", NEGATIVE,
                         ids=[row[0] for row in NEGATIVE])
def test_single_entry_perturbation_is_localized(inst, law, method, S, index, delta, by_vertex,
                                                expected):
    vertex = _vertex(inst, S) if by_vertex else None
    fake = Perturbed(inst, method, S, index, delta, vertex)
    clean = laws.LAWS[law](inst, S)
    dirty = laws.LAWS[law](fake, S)
    assert clean.passed
    assert dirty.status == "fail"
    assert dirty.first_failure == expected
