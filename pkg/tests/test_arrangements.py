import pytest

from polyloop.arrangements import (CALIBRATED, Interpretation, NotShifted, calibrate, diagonal_arrangement,
                                   multidegree_to_arrangement, no_equal_report, no_equal_sequences,
                                   no_equal_snf, no_k_equal_betti_by_enumeration, shifted_torsion_report)
from polyloop.simplicial import boundary_of_simplex, polygon, simplex_skeleton


def test_diagonal_arrangement():
    d = diagonal_arrangement(polygon(4))
    assert d.dim == 4 and d.subspaces == [(1, 3), (2, 4)]
    assert multidegree_to_arrangement(polygon(4), (1, 1, 1, 1)).case == "diagonal"


def test_restricted_and_chambers():
    d = multidegree_to_arrangement(polygon(4), (1, 0, 1, 0))
    assert d.case == "restricted" and d.subspaces == [(1, 2)]
    d = multidegree_to_arrangement(boundary_of_simplex(3), (2, 1, 0))
    assert d.case == "chambers"
    assert d.dim == 3 and d.chambers == [(1, 2)]
    assert d.to_dict()["chambers"] == [[1, 2]]
    with pytest.raises(ValueError):
        multidegree_to_arrangement(polygon(4), (1, 1))


def test_blocks_have_size_s():
    for Is, Js in no_equal_sequences(5, 3):
        assert all(len(J) == 3 for J in Js)
        flat = sorted(x for b in Is + Js for x in b)
        assert flat == [1, 2, 3, 4, 5]
    with pytest.raises(ValueError):
        list(no_equal_sequences(4, 2))


def test_snf_small():
    assert {k: r for k, (r, _) in no_equal_snf(3, 3).items()} == {0: 1, 1: 1}
    h = no_equal_snf(4, 3)
    assert h[0][0] - h[1][0] + h[2][0] == -6
    assert h[2][0] == 0


def test_vacuous_reading_disagrees():
    ok, rows = no_equal_report(4, 3, Interpretation.VACUOUS)
    assert not ok
    assert dict((d, e) for d, e, _, _ in rows)[1] == 5


@pytest.mark.parametrize("m,s", [(3, 3), (4, 3), (5, 3), (5, 4)])
def test_calibrated_matches_snf(m, s):
    ok, rows = no_equal_report(m, s)
    assert ok, rows


def test_calibration_choice():
    good = calibrate()
    assert CALIBRATED in good
    assert Interpretation.VACUOUS not in good


def test_frozen_enumeration():
    assert no_k_equal_betti_by_enumeration(5, 3)[1] == 31
    assert no_k_equal_betti_by_enumeration(5, 4)[2] == 9


def test_shifted_torsion():
    ok, bad = shifted_torsion_report(simplex_skeleton(4, 1), 3)
    assert ok and bad == []
    with pytest.raises(NotShifted):
        shifted_torsion_report(polygon(4))
