import random

import pytest

from polyloop import _pykernels, kernels


def random_rows(rng, n, p=None):
    rows = {}
    for piv in range(n):
        if rng.random() < 0.6:
            row = {k: rng.randint(-3, 3) for k in range(piv) if rng.random() < 0.4}
            row = {k: v for k, v in row.items() if v}
            row[piv] = 1 if p else rng.choice([1, 2, 3])
            tag = {rng.randint(0, 5): rng.randint(1, 4)}
            rows[piv] = (row, tag)
    return rows


def test_default_backend_is_compiled():
    assert kernels.BACKEND in ("cython", "python")
    try:
        from polyloop import _ckernels  # noqa: F401
    except ImportError:
        pytest.skip("compiled kernels not built")
    import os
    if not os.environ.get("POLYLOOP_PURE"):
        assert kernels.BACKEND == "cython"


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.use("fortran")


def test_backends_agree():
    try:
        from polyloop import _ckernels
    except ImportError:
        pytest.skip("compiled kernels not built")
    rng = random.Random(3)
    for trial in range(300):
        n = rng.randint(1, 12)
        vec = {k: rng.randint(-5, 5) for k in range(n) if rng.random() < 0.5}
        vec = {k: v for k, v in vec.items() if v}
        tag = {0: 1}
        p = rng.choice([2, 3, 7])
        rows_p = random_rows(rng, n, p)
        assert _pykernels.reduce_mod_p(vec, tag, rows_p, p) == _ckernels.reduce_mod_p(vec, tag, rows_p, p)
        rows_z = random_rows(rng, n)
        assert _pykernels.reduce_int(vec, tag, rows_z) == _ckernels.reduce_int(vec, tag, rows_z)


def test_reduce_int_invariant():
    rows = {1: ({0: 1, 1: 2}, {"r": 1})}
    r, t, s = _pykernels.reduce_int({1: 3, 0: 1}, {"v": 1}, rows)
    # s*v - 3*row = residual
    assert s == 2 and r == {0: 2 * 1 - 3 * 1}
    assert t == {"v": 2, "r": -3}
