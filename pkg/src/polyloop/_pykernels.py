"""Pure-Python elimination kernels (reference implementation and fallback).

Both functions reduce a sparse vector against a dict of echelon rows keyed
by pivot index (the largest index of each row).  They mirror the compiled
versions in ``_ckernels.pyx`` exactly; the test-suite runs both.
"""

from math import gcd


def reduce_mod_p(vec, tag, rows, p):
    """Reduce ``vec`` (and its tag) modulo ``p`` against pivot-1 rows."""
    vec = {k: v % p for k, v in vec.items() if v % p}
    tag = dict(tag) if tag is not None else None
    while vec:
        piv = max(vec)
        hit = rows.get(piv)
        if hit is None:
            break
        row, rtag = hit
        c = vec[piv]
        for k, v in row.items():
            nv = (vec.get(k, 0) - c * v) % p
            if nv:
                vec[k] = nv
            else:
                vec.pop(k, None)
        if tag is not None and rtag:
            for k, v in rtag.items():
                nv = (tag.get(k, 0) - c * v) % p
                if nv:
                    tag[k] = nv
                else:
                    tag.pop(k, None)
    return vec, tag


def reduce_int(vec, tag, rows):
    """Fraction-free reduction over Z; returns (residual, tag, scale)."""
    vec = dict(vec)
    tag = dict(tag) if tag is not None else None
    scale = 1
    while vec:
        piv = max(vec)
        hit = rows.get(piv)
        if hit is None:
            break
        row, rtag = hit
        a = row[piv]
        b = vec[piv]
        g = gcd(a, b)
        a //= g
        b //= g
        if a != 1:
            vec = {k: a * v for k, v in vec.items()}
            if tag is not None:
                tag = {k: a * v for k, v in tag.items()}
            scale *= a
        for k, v in row.items():
            nv = vec.get(k, 0) - b * v
            if nv:
                vec[k] = nv
            else:
                vec.pop(k, None)
        if tag is not None and rtag:
            for k, v in rtag.items():
                nv = tag.get(k, 0) - b * v
                if nv:
                    tag[k] = nv
                else:
                    tag.pop(k, None)
    return vec, tag, scale
