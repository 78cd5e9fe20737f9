import json

import pytest
import sympy
from sympy.matrices.normalforms import smith_normal_form

from polyloop.cobar import ChainComplex, concat_product, mu_chain, pk_complex, tk_complex, tk_differential
from polyloop.homology import (BettiTable, BoundaryError, HomologyBasis, field_homology, induced_map,
                               integer_homology, matrix_rank, multidegrees, tk_into_pk_surjective)
from polyloop.simplicial import (boundary_of_simplex, full_simplex, point, polygon, simplex_skeleton,
                                 vertices_only)

# Values computed once and cross-checked against the minimal-resolution Tor
# oracle (test_ext_oracle) and the sympy Smith form below.
FROZEN = [
    ("bd3", (1, 1, 1), {0: 1, 1: 1}),
    ("bd3", (2, 1, 1), {0: 1, 1: 2, 2: 0}),
    ("bd3", (2, 2, 1), {0: 1, 1: 4, 2: 0}),
    ("sq", (1, 1, 1, 1), {0: 4, 1: 0, 2: 0}),
    ("sq", (2, 0, 1, 0), {0: 3}),
    ("sk14", (1, 1, 1, 1), {0: 1, 1: 7, 2: 0}),
    ("sk14", (2, 1, 1, 0), {0: 1, 1: 2, 2: 0}),
    ("V3", (1, 1, 1), {0: 6}),
]
COMPLEXES = {"bd3": boundary_of_simplex(3), "sq": polygon(4), "sk14": simplex_skeleton(4, 1),
             "V3": vertices_only(3)}


@pytest.mark.parametrize("name,I,expected", FROZEN)
def test_frozen_tk_homology(name, I, expected):
    cx = tk_complex(COMPLEXES[name], I)
    h = integer_homology(cx)
    assert {k: r for k, (r, _) in h.items()} == expected
    assert all(not t for _, t in h.values())
    assert field_homology(cx, 2) == expected
    assert field_homology(cx, 3) == expected


def sympy_betti(cx):
    """Ranks through sympy's Smith form on dense boundary matrices."""
    ranks = {}
    for k in cx.valid_degrees:
        cols = cx.boundary.get(k + 1, [])
        if cols and cx.size(k):
            M = sympy.zeros(cx.size(k), len(cols))
            for j, c in enumerate(cols):
                for i, v in c.items():
                    M[i, j] = v
            S = smith_normal_form(M, domain=sympy.ZZ)
            ranks[k + 1] = [abs(S[i, i]) for i in range(min(S.shape)) if S[i, i] != 0]
        else:
            ranks[k + 1] = []
    out = {}
    for k in cx.valid_degrees:
        out[k] = (cx.size(k) - len(ranks.get(k, [])) - len(ranks[k + 1]),
                  tuple(sorted(d for d in ranks[k + 1] if d > 1)))
    return out


@pytest.mark.parametrize("K,I", [(boundary_of_simplex(3), (2, 1, 1)), (simplex_skeleton(4, 1), (1, 1, 1, 1)),
                                 (polygon(4), (1, 1, 1, 1)), (full_simplex(3), (2, 1, 1))])
def test_integer_homology_matches_sympy(K, I):
    for cx in (tk_complex(K, I), pk_complex(K, I)):
        assert integer_homology(cx) == sympy_betti(cx)


def toy_complex(boundary, sizes):
    basis = {k: [("w", k, i) for i in range(n)] for k, n in sizes.items()}
    index = {k: {w: i for i, w in enumerate(ws)} for k, ws in basis.items()}
    return ChainComplex(None, (0,), basis, index, boundary, range(0, max(sizes) + 1))


def test_torsion_detected():
    cx = toy_complex({0: [{}], 1: [{0: 2}]}, {0: 1, 1: 1})
    assert integer_homology(cx) == {0: (0, (2,)), 1: (0, ())}
    assert field_homology(cx, 2) == {0: 1, 1: 1}
    assert field_homology(cx, 3) == {0: 0, 1: 0}


def test_d_squared_violation_raises():
    cx = toy_complex({0: [{}], 1: [{0: 1}], 2: [{0: 1}]}, {0: 1, 1: 1, 2: 1})
    with pytest.raises(BoundaryError):
        integer_homology(cx)
    with pytest.raises(BoundaryError):
        field_homology(cx, 0)


def test_empty_multidegree():
    cx = tk_complex(point(), (0,))
    assert integer_homology(cx) == {0: (1, ())}


def test_homology_basis_and_coordinates():
    K = boundary_of_simplex(3)
    cx = tk_complex(K, (1, 1, 1))
    hb = HomologyBasis(cx, 1)
    assert len(hb) == 1
    omega = tk_differential(full_simplex(3), {(7,): 1})
    assert not hb.is_boundary(omega)
    c = hb.coordinates(omega)[0]
    assert hb.coordinates({w: 2 * v for w, v in omega.items()}) == [2 * c]
    assert hb.is_boundary({})
    assert hb.in_span(omega, hb.representatives)
    with pytest.raises(ValueError):
        hb.coordinates({(3, 4): 1})


def test_induced_map_identity():
    cx = tk_complex(simplex_skeleton(4, 1), (1, 1, 1, 1))
    hb = HomologyBasis(cx, 1, 3)
    M = induced_map(lambda c: c, hb, hb)
    assert matrix_rank(M, 3) == 7


def test_induced_mu_rank():
    K = boundary_of_simplex(3)
    src = HomologyBasis(tk_complex(K, (1, 1, 1)), 1)
    tgt = HomologyBasis(tk_complex(K, (2, 1, 1)), 1)
    M = induced_map(lambda c: mu_chain(1, 1, c), src, tgt)
    assert matrix_rank(M) == 1


def test_induced_map_rejects_non_chain_map():
    K = boundary_of_simplex(3)
    hb = HomologyBasis(tk_complex(K, (1, 1, 1)), 1)
    with pytest.raises(ValueError):
        hb.coordinates({(6, 1, 1): 1})
    with pytest.raises(ValueError):
        induced_map(lambda c: {**c, (3, 4): sum(c.values())} if c else {}, hb, hb)


def test_multidegrees():
    ms = multidegrees(2, 2)
    assert ms == [(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]
    assert len(multidegrees(3, 4)) == 35


def test_betti_table_outputs():
    tab = BettiTable()
    for I in multidegrees(3, 3):
        cx = tk_complex(boundary_of_simplex(3), I)
        tab.add(cx, integer_homology(cx))
    assert tab.check_euler()
    assert tab.to_tsv().splitlines()[0] == "I\tk\trank\ttorsion"
    rows = json.loads(tab.to_json())
    assert {"I": [1, 1, 1], "k": 1, "rank": 1, "torsion": []} in rows


def test_pk_surjectivity_small():
    ok, detail = tk_into_pk_surjective(boundary_of_simplex(3), (2, 1, 1))
    assert ok
    assert detail[1] == (1, 1)
