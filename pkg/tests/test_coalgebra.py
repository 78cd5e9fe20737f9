import itertools

import pytest

from polyloop.coalgebra import (epsilon, epsilon_sets, epsilon_tuples, exterior_sr_coalgebra,
                                koszul, tuple_coalgebra)
from polyloop.simplicial import (boundary_of_simplex, full_simplex, mask_of, point, polygon,
                                 simplex_skeleton)


def test_epsilon_examples():
    assert epsilon(mask_of([1, 3]), mask_of([2, 4])) == 1
    assert epsilon(0, mask_of([1, 2])) == 0
    assert epsilon(mask_of([2]), mask_of([1])) == 1
    assert epsilon_sets([1, 3], [2, 4]) == 1


def test_epsilon_not_requiring_disjointness():
    assert epsilon(mask_of([1, 2]), mask_of([1, 2])) == 1


def test_epsilon_symmetry_exhaustive():
    m = 8
    full = (1 << m) - 1
    for a in range(1 << m):
        rest = full & ~a
        b = rest
        while True:
            assert epsilon(a, b) + epsilon(b, a) == bin(a).count("1") * bin(b).count("1")
            if b == 0:
                break
            b = (b - 1) & rest


def test_epsilon_tuples_extends_sets():
    for a in range(16):
        for b in range(16):
            ta = tuple((a >> i) & 1 for i in range(4))
            tb = tuple((b >> i) & 1 for i in range(4))
            assert epsilon_tuples(ta, tb) == epsilon(a, b)


def coproduct(C, label):
    i = C.index[label]
    return {(C.labels[b], C.labels[c]): k for b, c, k in C.reduced[i]}


def test_point_coalgebra():
    C = exterior_sr_coalgebra(point())
    assert len(C) == 2
    assert coproduct(C, 1) == {}


def test_edge_unit_degrees():
    C = exterior_sr_coalgebra(full_simplex(2))
    assert coproduct(C, 3) == {(1, 2): 1, (2, 1): -1}


def test_edge_even_degrees():
    C = exterior_sr_coalgebra(full_simplex(2), [2, 2])
    assert coproduct(C, 3) == {(1, 2): 1, (2, 1): 1}
    assert C.check_coassociative()
    assert C.degrees[C.index[3]] == 4


def test_koszul_reduces_to_epsilon():
    for a in range(32):
        for b in range(32):
            assert koszul(a, b, [1] * 5) == epsilon(a, b)


def test_bad_degrees():
    with pytest.raises(ValueError):
        exterior_sr_coalgebra(full_simplex(2), [1, 0])
    with pytest.raises(ValueError):
        exterior_sr_coalgebra(full_simplex(2), [1])


@pytest.mark.parametrize("m", range(1, 7))
def test_coassociative_exhaustive(m):
    for K in (full_simplex(m), simplex_skeleton(m, max(0, m - 3))):
        for degs in ([1] * m, [2] * m, [(i % 3) + 1 for i in range(m)]):
            C = exterior_sr_coalgebra(K, degs)
            assert C.check_coassociative()
            assert C.check_additive()


def test_dimension_counts_faces():
    assert len(exterior_sr_coalgebra(boundary_of_simplex(3))) == 7
    for K in (polygon(4), polygon(5), full_simplex(4)):
        assert len(exterior_sr_coalgebra(K)) == len(K.faces)


def test_tuple_coalgebra_coassociative():
    for K, I in ((point(), (4,)), (full_simplex(2), (2, 2)), (boundary_of_simplex(3), (2, 1, 2))):
        C = tuple_coalgebra(K, I)
        assert C.check_coassociative()
        assert C.check_additive()


def test_json_dump_lists_coproduct():
    import json
    rows = json.loads(exterior_sr_coalgebra(full_simplex(2)).to_json())
    top = [r for r in rows if r["label"] == [1, 2]][0]
    assert sorted(map(tuple, [tuple(map(tuple, t[:2])) + (t[2],) for t in top["reduced_coproduct"]])) == [
        ((1,), (2,), 1), ((2,), (1,), -1)]
