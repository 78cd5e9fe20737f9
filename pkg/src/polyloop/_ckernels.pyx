# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled elimination kernels; same contract as ``_pykernels``."""

from math import gcd


def reduce_mod_p(vec, tag, rows, long long p):
    cdef long long c, v, nv
    cdef dict out = {}
    cdef dict t
    cdef dict row
    cdef object k
    for k, v0 in vec.items():
        v = v0 % p
        if v:
            out[k] = v
    t = dict(tag) if tag is not None else None
    while out:
        piv = max(out)
        hit = rows.get(piv)
        if hit is None:
            break
        row = hit[0]
        rtag = hit[1]
        c = out[piv]
        for k, v0 in row.items():
            nv = (<long long>out.get(k, 0) - c * <long long>v0) % p
            if nv < 0:
                nv += p
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
        if t is not None and rtag:
            for k, v0 in (<dict>rtag).items():
                nv = (<long long>t.get(k, 0) - c * <long long>v0) % p
                if nv < 0:
                    nv += p
                if nv:
                    t[k] = nv
                else:
                    t.pop(k, None)
    return out, t


def reduce_int(vec, tag, rows):
    cdef dict out = dict(vec)
    cdef dict t = dict(tag) if tag is not None else None
    cdef dict row
    scale = 1
    while out:
        piv = max(out)
        hit = rows.get(piv)
        if hit is None:
            break
        row = hit[0]
        rtag = hit[1]
        a = row[piv]
        b = out[piv]
        g = gcd(a, b)
        a //= g
        b //= g
        if a != 1:
            out = {k: a * v for k, v in out.items()}
            if t is not None:
                t = {k: a * v for k, v in t.items()}
            scale *= a
        for k, v in row.items():
            nv = out.get(k, 0) - b * v
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
        if t is not None and rtag:
            for k, v in (<dict>rtag).items():
                nv = t.get(k, 0) - b * v
                if nv:
                    t[k] = nv
                else:
                    t.pop(k, None)
    return out, t, scale
