import random

import pytest
from hypothesis import given, settings, strategies as st

from polyloop.cobar import (chain_add, concat_product, mu_chain, mu_word, nu_word, pk_complex,
                            pk_differential, separated, tk_chain_to_pk, tk_complex,
                            tk_differential, word_multidegree)
from polyloop.simplicial import (boundary_of_simplex, full_simplex, mask_of, point, polygon,
                                 random_complex, simplex_skeleton)


def test_tk_basis_sizes_boundary_triangle():
    cx = tk_complex(boundary_of_simplex(3), (1, 1, 1))
    assert cx.size(0) == 6
    assert cx.size(1) == 6
    assert cx.size(2) == 0


def test_tk_point():
    cx = tk_complex(point(), (3,))
    assert cx.size(0) == 1 and cx.basis[0] == [(1, 1, 1)]


def test_tk_single_letter_differential_edge():
    d = tk_differential(full_simplex(2), {(3,): 1})
    # (s1|s2) with sign (-1)^{eps(s1,s2) + |s1|}
    assert d == {(1, 2): -1, (2, 1): 1}


def test_tk_d_squared_simplex():
    K = full_simplex(3)
    d = tk_differential(K, {(7,): 1})
    assert d
    assert tk_differential(K, d) == {}


def test_pk_two_differential():
    assert pk_differential({((2,),): 1}) == {((1,), (1,)): -1}


def test_nu_example():
    assert nu_word(1, 1, ((1,),)) == {((2,),): -1}


def test_mu_example():
    out = mu_word(1, 1, (mask_of([1, 2]),))
    assert out == {(mask_of([1]), mask_of([1, 2])): 1, (mask_of([1, 2]), mask_of([1])): 1}
    assert mu_word(1, 1, (1,)) == {(1, 1): 1}


def test_mu_missing_occurrence():
    with pytest.raises(ValueError):
        mu_word(2, 1, (1,))


def test_word_multidegree():
    assert word_multidegree((3, 1), 2) == (2, 1)
    assert word_multidegree(((1, 0), (2, 1)), 2) == (3, 1)


def test_separated():
    assert separated(((1,), (1,)), 1, 1)
    assert not separated(((2,),), 1, 1)


def test_tk_to_pk_is_chain_map():
    K = boundary_of_simplex(3)
    for I in ((1, 1, 1), (2, 1, 1)):
        cx = tk_complex(K, I)
        for k, words in cx.basis.items():
            for w in words:
                lhs = pk_differential(tk_chain_to_pk({w: 1}, 3))
                rhs = tk_chain_to_pk(tk_differential(K, {w: 1}), 3)
                assert lhs == rhs


@pytest.mark.parametrize("K,I", [
    (polygon(4), (1, 1, 1, 1)), (boundary_of_simplex(3), (2, 1, 1)),
    (simplex_skeleton(4, 1), (1, 1, 1, 1)), (full_simplex(3), (2, 2, 1))])
def test_d_squared(K, I):
    assert tk_complex(K, I).check_d_squared()
    assert pk_complex(K, I).check_d_squared()


@pytest.mark.parametrize("K,I", [(boundary_of_simplex(3), (1, 1, 1)), (polygon(4), (2, 1, 1, 0))])
def test_mu_commutes_with_differential(K, I):
    cx = tk_complex(K, I)
    for words in cx.basis.values():
        for w in words:
            for j in range(1, K.m + 1):
                for k in range(1, I[j - 1] + 1):
                    lhs = tk_differential(K, mu_chain(j, k, {w: 1}))
                    rhs = mu_chain(j, k, tk_differential(K, {w: 1}))
                    assert lhs == rhs


seeded = st.builds(lambda m, s: random_complex(m, random.Random(s)), st.integers(1, 4), st.integers(0, 10 ** 6))


@settings(max_examples=25, deadline=None)
@given(seeded, st.data())
def test_leibniz(K, data):
    cx = tk_complex(K, tuple([1] * K.m))
    words = [w for ws in cx.basis.values() for w in ws]
    a = data.draw(st.sampled_from(words))
    b = data.draw(st.sampled_from(words))
    deg_a = cx.word_degree(a)
    lhs = tk_differential(K, concat_product({a: 1}, {b: 1}))
    rhs = chain_add(concat_product(tk_differential(K, {a: 1}), {b: 1}),
                    concat_product({a: 1}, tk_differential(K, {b: 1})), (-1) ** deg_a)
    assert lhs == rhs


@settings(max_examples=25, deadline=None)
@given(seeded, st.lists(st.integers(0, 2), min_size=4, max_size=4))
def test_d_squared_random(K, I):
    I = tuple(I[:K.m])
    assert tk_complex(K, I).check_d_squared()
    assert pk_complex(K, I).check_d_squared()


def test_euler_characteristic_point():
    assert tk_complex(point(), (2,)).euler_characteristic() == 1


def test_twisted_product_signs():
    from polyloop.cobar import twisted_product
    assert twisted_product({(1,): 1}, {(2,): 1}, 2) == {(1, 2): 1}
    assert twisted_product({(2,): 1}, {(1,): 1}, 2) == {(2, 1): -1}


@pytest.mark.parametrize("m,s", [(3, 3), (4, 3), (5, 3), (4, 4), (5, 4)])
def test_doubling_of_missing_face_class_is_twisted_bracket(m, s):
    import itertools
    from polyloop.cobar import twisted_product
    from polyloop.homology import HomologyBasis
    K, F = simplex_skeleton(m, s - 2), full_simplex(m)
    for J in itertools.combinations(range(1, m + 1), s):
        omega = tk_differential(F, {(mask_of(J),): 1})
        I = word_multidegree(next(iter(omega)), m)
        for j in J:
            I2 = tuple(a + (i == j - 1) for i, a in enumerate(I))
            tgt = HomologyBasis(tk_complex(K, I2), s - 2)
            x = {(1 << (j - 1),): 1}
            br = chain_add(twisted_product(x, omega, m), twisted_product(omega, x, m), -1)
            image = mu_chain(j, 1, omega)
            assert not tgt.is_boundary(br)
            assert tgt.in_span(image, [br]) and tgt.in_span(br, [image])
            plain = chain_add(concat_product(x, omega), concat_product(omega, x), -1)
            assert not tgt.in_span(image, [plain])
