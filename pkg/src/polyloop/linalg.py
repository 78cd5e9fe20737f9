"""Exact sparse linear algebra over Z, Q and F_p.

Vectors are dicts ``{index: coefficient}`` with no zero entries.  Matrices
are lists of such vectors (columns unless stated otherwise).

Over Q everything is done fraction-free: stored rows are primitive integer
vectors, and a reduction step replaces ``v`` by ``a*v - b*row`` and then
divides out the content.  Over F_p rows are normalized to pivot 1.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable

from . import kernels


def check_characteristic(p: int) -> int:
    if p == 0:
        return 0
    if not isinstance(p, int) or p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
        raise ValueError(f"characteristic must be 0 or a prime, got {p!r}")
    return p


def _content(vec: dict) -> int:
    g = 0
    for v in vec.values():
        g = gcd(g, v)
        if g == 1:
            return 1
    return g


def _scale_out(vec: dict, tag: dict | None):
    g = _content(vec)
    if tag:
        g = gcd(g, _content(tag))
    if g > 1:
        vec = {k: v // g for k, v in vec.items()}
        if tag:
            tag = {k: v // g for k, v in tag.items()}
    return vec, tag


class EchelonBasis:
    """Incrementally built echelon basis of a subspace.

    Each stored row may carry a *tag*, a sparse vector recording a linear
    combination of user-supplied labels.  Reduction returns the residual
    together with the accumulated tag, which is how kernel vectors and
    homology coordinates are read off.

    For characteristic 0 a reduction of ``v`` returns ``(r, t, s)`` meaning
    ``s*v - (combination of stored rows) = r`` with the rows' tags combining
    to ``t`` (that is, ``s*tag(v) - sum = t``).  For prime characteristic
    ``s`` is always 1.
    """

    def __init__(self, characteristic: int = 0):
        self.p = check_characteristic(characteristic)
        self.rows: dict[int, tuple[dict, dict | None]] = {}

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict, tag: dict | None = None):
        if self.p:
            vec, tag = kernels.reduce_mod_p(vec, tag, self.rows, self.p)
            return vec, tag, 1
        return kernels.reduce_int({k: v for k, v in vec.items() if v}, tag, self.rows)

    def add(self, vec: dict, tag: dict | None = None) -> bool:
        """Insert ``vec``; return True if it was independent of the stored rows."""
        r, t, _ = self.reduce(vec, tag)
        if not r:
            return False
        self._store(r, t)
        return True

    def _store(self, r: dict, t: dict | None):
        piv = max(r)
        if self.p:
            inv = pow(r[piv], -1, self.p)
            if inv != 1:
                r = {k: v * inv % self.p for k, v in r.items()}
                if t:
                    t = {k: v * inv % self.p for k, v in t.items()}
        else:
            if r[piv] < 0:
                r = {k: -v for k, v in r.items()}
                if t:
                    t = {k: -v for k, v in t.items()}
            r, t = _scale_out(r, t)
        self.rows[piv] = (r, t)

    def contains(self, vec: dict) -> bool:
        r, _, _ = self.reduce(vec)
        return not r


def rank(columns: Iterable[dict], characteristic: int = 0) -> int:
    eb = EchelonBasis(characteristic)
    for c in columns:
        if c:
            eb.add(c)
    return eb.rank


def kernel_basis(columns: list[dict], characteristic: int = 0) -> list[dict]:
    """Basis of the null space of the matrix with the given columns.

    Vectors are indexed by column number; over Q they are primitive integer
    vectors.  Order follows the column order (a vector is produced when its
    last column becomes dependent).
    """
    eb = EchelonBasis(characteristic)
    out = []
    for j, c in enumerate(columns):
        r, t, s = eb.reduce(c, {j: 1})
        if r:
            eb._store(r, t)
        else:
            if characteristic == 0:
                t = _scale_out(t, None)[0]
            out.append(t)
    return out


def to_fraction_vector(vec: dict, scale: int) -> dict:
    return {k: Fraction(v, scale) for k, v in vec.items()}


# -- Smith normal form ----------------------------------------------------

def smith_invariants(columns: list[dict], nrows: int) -> list[int]:
    """Nonzero diagonal entries (positive, divisibility-ordered) of the SNF.

    Unit pivots are eliminated sparsely first (each such step splits off a
    diagonal 1 and replaces the rest by its exact Schur complement); the
    remaining core, which has no unit entries, is reduced densely.
    """
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, dict[int, int]] = {}
    for j, c in enumerate(columns):
        if not c:
            continue
        cols[j] = dict(c)
        for i, v in c.items():
            rows.setdefault(i, {})[j] = v
    ones = 0
    progress = True
    while progress:
        progress = False
        for j0 in list(cols):
            col = cols.get(j0)
            if not col:
                continue
            i0 = None
            best = None
            for i, v in col.items():
                if v == 1 or v == -1:
                    cost = len(rows[i])
                    if best is None or cost < best:
                        i0, best = i, cost
                        if cost == 1:
                            break
            if i0 is None:
                continue
            progress = True
            ones += 1
            _schur_step(rows, cols, i0, j0)
    if not cols:
        return [1] * ones
    rid = sorted(rows)
    cid = sorted(cols)
    rpos = {i: n for n, i in enumerate(rid)}
    dense = [[0] * len(cid) for _ in rid]
    for n, j in enumerate(cid):
        for i, v in cols[j].items():
            dense[rpos[i]][n] = v
    return [1] * ones + dense_smith_diagonal(dense)


def _schur_step(rows, cols, i0, j0):
    pv = cols[j0][i0]
    prow = rows.pop(i0)
    pcol = cols.pop(j0)
    del prow[j0]
    del pcol[i0]
    for j in prow:
        del cols[j][i0]
    for i in pcol:
        del rows[i][j0]
    # a_ij -= a_i,j0 * a_i0,j / pv, with pv = +-1
    for i, a in pcol.items():
        f = a * pv
        ri = rows[i]
        for j, b in prow.items():
            cj = cols[j]
            nv = ri.get(j, 0) - f * b
            if nv:
                ri[j] = nv
                cj[i] = nv
            elif j in ri:
                del ri[j]
                del cj[i]
        if not ri:
            del rows[i]
    for j in prow:
        if not cols[j]:
            del cols[j]


def dense_smith_diagonal(A: list[list[int]]) -> list[int]:
    """Nonzero invariant factors of a dense integer matrix (copied)."""
    A = [list(r) for r in A]
    nr = len(A)
    nc = len(A[0]) if nr else 0
    diag = []
    t = 0
    while t < min(nr, nc):
        # pivot: smallest nonzero absolute value in the remaining block
        best = None
        for i in range(t, nr):
            Ai = A[i]
            for j in range(t, nc):
                v = Ai[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        A[t], A[i] = A[i], A[t]
        for r in A:
            r[t], r[j] = r[j], r[t]
        while True:
            done = True
            piv = A[t][t]
            for i in range(t + 1, nr):
                if A[i][t]:
                    q = A[i][t] // piv
                    Ai, At = A[i], A[t]
                    for j in range(t, nc):
                        Ai[j] -= q * At[j]
                    if A[i][t]:
                        done = False
            for j in range(t + 1, nc):
                if A[t][j]:
                    q = A[t][j] // piv
                    for r in A:
                        r[j] -= q * r[t]
                    if A[t][j]:
                        done = False
            if done:
                # divisibility: every remaining entry divisible by pivot
                bad = None
                for i in range(t + 1, nr):
                    for j in range(t + 1, nc):
                        if A[i][j] % piv:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                At, Ab = A[t], A[bad]
                for j in range(t, nc):
                    At[j] += Ab[j]
                continue
            # move the smallest nonzero of row t / column t into the pivot slot
            best = (abs(A[t][t]), t, t)
            for i in range(t + 1, nr):
                if A[i][t] and abs(A[i][t]) < best[0]:
                    best = (abs(A[i][t]), i, t)
            for j in range(t + 1, nc):
                if A[t][j] and abs(A[t][j]) < best[0]:
                    best = (abs(A[t][j]), t, j)
            _, i, j = best
            if i != t:
                A[t], A[i] = A[i], A[t]
            if j != t:
                for r in A:
                    r[t], r[j] = r[j], r[t]
        diag.append(abs(A[t][t]))
        t += 1
    return diag
