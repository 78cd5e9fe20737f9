import pytest

from polyloop.presentations import (AlgebraPresentation, commutator, dj_presentation, eps_j_S,
                                    exterior_presentation, flag_presentation, free_algebra_dims,
                                    polynomial_presentation, quotient_dims, skeleton_tk_presentation,
                                    slice_dims)
from polyloop.simplicial import boundary_of_simplex, full_simplex, polygon, vertices_only


def test_free_algebra_dims():
    assert free_algebra_dims([1, 1], 4) == {0: 1, 1: 2, 2: 4, 3: 8, 4: 16}
    assert free_algebra_dims([2], 5) == {0: 1, 1: 0, 2: 1, 3: 0, 4: 1, 5: 0}


def test_polynomial_two_variables():
    P = AlgebraPresentation([("a", 1, None), ("b", 1, None)], [])
    P.relations.append({(0, 1): 1, (1, 0): -1})
    assert quotient_dims(P, 0, 5) == {d: d + 1 for d in range(6)}


def test_exterior():
    assert quotient_dims(exterior_presentation(1), 0, 4) == {0: 1, 1: 1, 2: 0, 3: 0, 4: 0}


def test_commutator_rules():
    assert commutator([1, 1], 0, 1) == {(0, 1): 1, (1, 0): 1}
    assert commutator([2, 1], 0, 1) == {(0, 1): 1, (1, 0): -1}
    assert commutator([1], 0, 0) == {(0, 0): 1}
    assert commutator([2], 0, 0) == {}


def test_validation():
    with pytest.raises(ValueError):
        AlgebraPresentation([("a", 1, None), ("a", 2, None)])
    with pytest.raises(ValueError):
        AlgebraPresentation([("a", 1, None), ("b", 2, None)], [{(0,): 1, (1,): 1}])
    with pytest.raises(ValueError):
        AlgebraPresentation([("a", 1, (1,)), ("b", 2, None)])


def test_degree_zero_generators_need_window():
    P = skeleton_tk_presentation(3, 3)
    with pytest.raises(ValueError):
        quotient_dims(P, 0, 2)


def test_json_roundtrip():
    P = dj_presentation(3, 3)
    Q = AlgebraPresentation.from_json(P.to_json())
    assert Q.generators == P.generators
    assert Q.relations == P.relations


def test_eps_readings_differ_by_global_sign():
    for S in [(1, 2, 3, 4), (2, 3, 5, 7)]:
        for j in S:
            assert (eps_j_S(j, S, "left") + eps_j_S(j, S, "right")) % 2 == (len(S) - 1) % 2
    with pytest.raises(ValueError):
        eps_j_S(1, (1, 2), "middle")


def test_skeleton_presentation_all_ones_slice():
    dims = slice_dims(skeleton_tk_presentation(3, 3), 0, 2, window=3)
    assert dims[(0, (1, 1, 1))] == 1
    assert dims[(1, (1, 1, 1))] == 1


@pytest.mark.parametrize("reading", ["left", "right"])
def test_skeleton_presentation_43(reading):
    dims = slice_dims(skeleton_tk_presentation(4, 3, reading), 0, 3, window=4)
    assert dims[(0, (1, 1, 1, 1))] == 1
    assert dims[(1, (1, 1, 1, 1))] == 7


def test_flag_presentation_graph_products():
    ext = exterior_presentation(1)
    # discrete vertices: free product of exteriors; the edge: tensor product
    assert quotient_dims(flag_presentation(vertices_only(2), [ext, ext]), 0, 5) == {0: 1, 1: 2, 2: 2, 3: 2, 4: 2, 5: 2}
    assert quotient_dims(flag_presentation(full_simplex(2), [ext, ext]), 0, 3) == {0: 1, 1: 2, 2: 1, 3: 0}
    poly = polynomial_presentation(1)
    assert quotient_dims(flag_presentation(polygon(4), [poly] * 4), 0, 4) == {0: 1, 1: 4, 2: 12, 3: 32, 4: 80}
    with pytest.raises(ValueError):
        flag_presentation(boundary_of_simplex(3), [ext] * 3)


def test_dj_multidegrees():
    P = dj_presentation(4, 3)
    md = dict((g[0], g[2]) for g in P.generators)
    assert md["u2"] == (0, 1, 0, 0)
    assert md["w134"] == (1, 0, 1, 1)
    assert quotient_dims(P, 0, 3)[1] == 4
