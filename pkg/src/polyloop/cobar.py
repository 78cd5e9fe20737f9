"""Cobar complexes, the face-word complex T_K and the tuple complex P_K.

A *word* is a tuple of coalgebra labels: face bitmasks for T_K, exponent
tuples for P_K.  A *chain* is a plain ``dict`` mapping words to nonzero
integer coefficients.  Within one multidegree a word of ``n`` letters has
topological degree ``sum(deg(letter) - 1)``; for T_K this is ``|I| - n``.

Differential on a word ``a_1 | ... | a_n``::

    d = sum_p (-1)^(deg a_1 + ... + deg a_{p-1})
              sum_{a_p -> (b, c, coef)} coef * (-1)^{|b|} (... | b | c | ...)

where ``deg`` is the desuspended letter degree and ``|b|`` the coalgebra
degree of the left split.  For the exterior face coalgebra with unit
degrees the one-letter case is d(s) = sum (-1)^{eps(s1, s2) + |s1|} (s1|s2).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Hashable, Sequence

from .coalgebra import GradedCoalgebra, epsilon, epsilon_tuples, exterior_sr_coalgebra, tuple_coalgebra
from .simplicial import SimplicialComplex, popcount, submasks, vertices_of

Word = tuple
Chain = dict


# -- chain arithmetic -----------------------------------------------------

def chain_add(a: Chain, b: Chain, scale: int = 1) -> Chain:
    out = dict(a)
    for w, c in b.items():
        v = out.get(w, 0) + scale * c
        if v:
            out[w] = v
        else:
            out.pop(w, None)
    return out


def chain_scale(a: Chain, s: int) -> Chain:
    if s == 0:
        return {}
    return {w: s * c for w, c in a.items()}


def concat_product(a: Chain, b: Chain) -> Chain:
    """Free-algebra product: concatenate words, multiply coefficients."""
    out: Chain = {}
    for w1, c1 in a.items():
        for w2, c2 in b.items():
            w = w1 + w2
            v = out.get(w, 0) + c1 * c2
            if v:
                out[w] = v
            else:
                del out[w]
    return out



def twisted_product(a: Chain, b: Chain, m: int) -> Chain:
    """Concatenation twisted by a multidegree sign.

    For words y of multidegree I and y' of multidegree I' with n' letters
    the product is (-1)^e y.y' with e = sum_{j <= k} i_j i'_k - n' |I|.
    Brackets [x, y] taken with this product are the ones that the
    doubling operations produce, e.g. mu_{j,1}(d J) = +-[x_j, d J].
    """
    out: Chain = {}
    for w1, c1 in a.items():
        I = word_multidegree(w1, m)
        for w2, c2 in b.items():
            J = word_multidegree(w2, m)
            e = sum(I[j] * sum(J[j:]) for j in range(m)) - len(w2) * sum(I)
            w = w1 + w2
            v = out.get(w, 0) + (-c1 * c2 if e & 1 else c1 * c2)
            if v:
                out[w] = v
            else:
                del out[w]
    return out


# -- the complex ------------------------------------------------------------

@dataclass
class ChainComplex:
    """Words of one multidegree, split by degree, with sparse boundaries.

    ``boundary[k]`` lists, for every word of ``basis[k]``, its differential
    as ``{row index in basis[k-1]: coefficient}``.  Homology is meaningful
    in the degrees of ``valid_degrees``.
    """

    coalgebra: GradedCoalgebra
    multidegree: tuple
    basis: dict[int, list[Word]]
    index: dict[int, dict[Word, int]]
    boundary: dict[int, list[dict]]
    valid_degrees: range
    letter_degree: dict = field(default_factory=dict)

    def degrees(self):
        return sorted(self.basis)

    def size(self, k: int) -> int:
        return len(self.basis.get(k, ()))

    def differential(self, chain: Chain) -> Chain:
        out: Chain = {}
        for w, c in chain.items():
            for w2, c2 in cobar_word_differential(self.coalgebra, w, self.letter_degree).items():
                v = out.get(w2, 0) + c * c2
                if v:
                    out[w2] = v
                else:
                    del out[w2]
        return out

    def word_degree(self, w: Word) -> int:
        return sum(self.letter_degree[a] for a in w)

    def vector(self, chain: Chain, k: int) -> dict:
        """Coordinates of a degree-k chain in ``basis[k]``."""
        idx = self.index.get(k, {})
        try:
            return {idx[w]: c for w, c in chain.items()}
        except KeyError as e:
            raise ValueError(f"word {e.args[0]} is not in degree {k} of this complex") from None

    def chain(self, vec: dict, k: int) -> Chain:
        words = self.basis[k]
        return {words[i]: c for i, c in vec.items() if c}

    def check_d_squared(self) -> bool:
        for k, cols in self.boundary.items():
            below = self.boundary.get(k - 1)
            if below is None:
                continue
            for col in cols:
                acc: dict = {}
                for i, c in col.items():
                    for r, c2 in below[i].items():
                        acc[r] = acc.get(r, 0) + c * c2
                if any(acc.values()):
                    return False
        return True

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * len(ws) for k, ws in self.basis.items())

    def dump_boundaries(self, directory: str, stem: str = "d") -> list[str]:
        """Write each boundary matrix as ``row col value`` triplets, one file per degree."""
        os.makedirs(directory, exist_ok=True)
        paths = []
        tag = "_".join(map(str, self.multidegree))
        for k in sorted(self.boundary):
            path = os.path.join(directory, f"{stem}_I{tag}_k{k}.txt")
            with open(path, "w") as fh:
                fh.write(f"# rows={self.size(k - 1)} cols={self.size(k)}\n")
                for j, col in enumerate(self.boundary[k]):
                    for i in sorted(col):
                        fh.write(f"{i} {j} {col[i]}\n")
            paths.append(path)
        return paths


def cobar_word_differential(C: GradedCoalgebra, word: Word, letter_degree: dict | None = None) -> Chain:
    index = C.index
    labels = C.labels
    degs = C.degrees
    out: Chain = {}
    prefix = 0
    for p, a in enumerate(word):
        ia = index[a]
        sign_p = -1 if prefix & 1 else 1
        head = word[:p]
        tail = word[p + 1:]
        for b, c, coef in C.reduced[ia]:
            s = sign_p * coef * (-1 if degs[b] & 1 else 1)
            w = head + (labels[b], labels[c]) + tail
            v = out.get(w, 0) + s
            if v:
                out[w] = v
            else:
                del out[w]
        prefix += degs[ia] - 1
    return out


def _enumerate_words(C: GradedCoalgebra, I: tuple) -> list[Word]:
    letters = [
        (C.labels[i], C.multidegrees[i]) for i in range(1, len(C.labels))
    ]

    @lru_cache(maxsize=None)
    def words(rem: tuple) -> tuple:
        if not any(rem):
            return ((),)
        out = []
        for lab, md in letters:
            if all(a <= r for a, r in zip(md, rem)) and any(md):
                nxt = tuple(r - a for a, r in zip(md, rem))
                for w in words(nxt):
                    out.append((lab,) + w)
        return tuple(out)

    return list(words(I))


def cobar_complex(C: GradedCoalgebra, I: Sequence[int], max_degree: int | None = None) -> ChainComplex:
    """Cobar complex of ``C`` in multidegree ``I``.

    With ``max_degree`` only words of degree ``<= max_degree + 1`` are
    built, so homology is valid through ``max_degree``.  An unreachable
    multidegree yields the empty complex.
    """
    I = tuple(I)
    if len(C.multidegrees[0]) != len(I):
        raise ValueError("multidegree length mismatch")
    ldeg = {C.labels[i]: C.degrees[i] - 1 for i in range(1, len(C.labels))}
    basis: dict[int, list[Word]] = {}
    for w in _enumerate_words(C, I):
        k = sum(ldeg[a] for a in w)
        if max_degree is not None and k > max_degree + 1:
            continue
        basis.setdefault(k, []).append(w)
    for k in basis:
        basis[k].sort(key=_word_key)
    index = {k: {w: n for n, w in enumerate(ws)} for k, ws in basis.items()}
    boundary = {}
    for k, ws in basis.items():
        below = index.get(k - 1)
        cols = []
        for w in ws:
            d = cobar_word_differential(C, w, ldeg)
            if d and below is None:
                raise RuntimeError("differential leaves the constructed range")
            cols.append({below[w2]: c for w2, c in d.items()} if d else {})
        boundary[k] = cols
    top = max(basis) if basis else -1
    if max_degree is None:
        valid = range(0, top + 1)
    else:
        valid = range(0, min(max_degree, top) + 1)
    if not any(I):
        basis = {0: [()]}
        index = {0: {(): 0}}
        boundary = {0: [{}]}
        valid = range(0, 1)
    return ChainComplex(C, I, basis, index, boundary, valid, ldeg)


def _word_key(w):
    return tuple(_letter_key(a) for a in w)


def _letter_key(a):
    if isinstance(a, int):
        return (popcount(a), vertices_of(a))
    return (sum(a), tuple(-x for x in a))


@lru_cache(maxsize=64)
def _tk_coalgebra(K: SimplicialComplex) -> GradedCoalgebra:
    return exterior_sr_coalgebra(K)


def tk_complex(K: SimplicialComplex, I: Sequence[int], max_degree: int | None = None) -> ChainComplex:
    """The face-word complex T_K in multidegree I (unit generator degrees)."""
    return cobar_complex(_tk_coalgebra(K), tuple(I), max_degree)


def pk_complex(K: SimplicialComplex, I: Sequence[int], max_degree: int | None = None) -> ChainComplex:
    """The tuple complex P_K in multidegree I."""
    I = tuple(I)
    return cobar_complex(tuple_coalgebra(K, I), I, max_degree)


def tk_differential(K: SimplicialComplex, chain: Chain) -> Chain:
    C = _tk_coalgebra(K)
    out: Chain = {}
    for w, c in chain.items():
        out = chain_add(out, cobar_word_differential(C, w), c)
    return out


def pk_differential(chain: Chain) -> Chain:
    """Differential of a chain of tuple words (no ambient complex needed)."""
    out: Chain = {}
    for w, c in chain.items():
        prefix = 0
        for p, y in enumerate(w):
            sign_p = -1 if prefix & 1 else 1
            for y1 in _box(y):
                y2 = tuple(a - b for a, b in zip(y, y1))
                if not any(y1) or not any(y2):
                    continue
                e = epsilon_tuples(y1, y2) + sum(y1)
                s = sign_p * (-1 if e & 1 else 1) * c
                nw = w[:p] + (y1, y2) + w[p + 1:]
                v = out.get(nw, 0) + s
                if v:
                    out[nw] = v
                else:
                    del out[nw]
            prefix += sum(y) - 1
    return out


def _box(y):
    out = [()]
    for top in y:
        out = [p + (a,) for p in out for a in range(top + 1)]
    return out


def word_multidegree(w: Word, m: int) -> tuple:
    md = [0] * m
    for a in w:
        if isinstance(a, int):
            for b in range(m):
                if a >> b & 1:
                    md[b] += 1
        else:
            for b in range(m):
                md[b] += a[b]
    return tuple(md)


def tk_word_to_pk(w: Word, m: int) -> Word:
    return tuple(tuple((a >> b) & 1 for b in range(m)) for a in w)


def tk_chain_to_pk(c: Chain, m: int) -> Chain:
    return {tk_word_to_pk(w, m): v for w, v in c.items()}


# -- doubling operations ----------------------------------------------------

def mu_word(j: int, k: int, w: Word) -> Chain:
    """Doubling of the k-th particle of colour j (1-indexed) on a face word."""
    bj = 1 << (j - 1)
    seen = 0
    for n, s in enumerate(w):
        if s & bj:
            seen += 1
            if seen == k:
                break
    else:
        raise ValueError(f"word has fewer than {k} letters containing vertex {j}")
    rest = w[n] & ~bj
    out: Chain = {}
    for t1 in submasks(rest):
        t2 = rest ^ t1
        sign = -1 if epsilon(t1, t2) & 1 else 1
        nw = w[:n] + (t1 | bj, t2 | bj) + w[n + 1:]
        out[nw] = out.get(nw, 0) + sign
    return out


def mu_chain(j: int, k: int, c: Chain) -> Chain:
    """mu_{j,k} on a homogeneous chain of face words."""
    out: Chain = {}
    for w, coef in c.items():
        for nw, s in mu_word(j, k, w).items():
            v = out.get(nw, 0) + coef * s
            if v:
                out[nw] = v
            else:
                del out[nw]
    return out


def nu_word(j: int, k: int, w: Word) -> Chain:
    """Replace the k-th occurrence of x_j in a tuple word by x_j^2, with its sign.

    For w = (p_1 | x_j t | p_2) with the occurrence in the letter x_j t the
    sign is (-1)^{deg p_1 + eps(j, t) + n}, n the number of letters.
    """
    jj = j - 1
    seen = 0
    deg_prefix = 0
    for n, y in enumerate(w):
        if seen + y[jj] >= k:
            break
        seen += y[jj]
        deg_prefix += sum(y) - 1
    else:
        raise ValueError(f"word has fewer than {k} occurrences of x_{j}")
    y = w[n]
    tau = list(y)
    tau[jj] -= 1
    unit = [0] * len(y)
    unit[jj] = 1
    e = deg_prefix + epsilon_tuples(unit, tau) + len(w)
    ny = list(y)
    ny[jj] += 1
    return {w[:n] + (tuple(ny),) + w[n + 1:]: -1 if e & 1 else 1}


def nu_chain(j: int, k: int, c: Chain) -> Chain:
    out: Chain = {}
    for w, coef in c.items():
        for nw, s in nu_word(j, k, w).items():
            v = out.get(nw, 0) + coef * s
            if v:
                out[nw] = v
            else:
                del out[nw]
    return out


def mu_tuple_word(j: int, k: int, w: Word) -> Chain:
    """Doubling on a tuple word whose k-th x_j opens its letter.

    The letter x_j t (t free of x_j beyond the occurrences that follow)
    becomes sum (-1)^{eps(t1, t2)} (x_j t1 | x_j t2) over t1 + t2 = t with
    t1 free of x_j, so the new pair of x_j's is separated.
    """
    jj = j - 1
    seen = 0
    for n, y in enumerate(w):
        if seen + y[jj] >= k:
            break
        seen += y[jj]
    else:
        raise ValueError(f"word has fewer than {k} occurrences of x_{j}")
    if seen + 1 != k:
        raise ValueError("occurrence is not the first of its letter")
    y = w[n]
    tau = list(y)
    tau[jj] -= 1
    out: Chain = {}
    for t1 in _box(tau):
        if t1[jj]:
            continue
        t2 = tuple(a - b for a, b in zip(tau, t1))
        sign = -1 if epsilon_tuples(t1, t2) & 1 else 1
        l1 = list(t1)
        l1[jj] += 1
        l2 = list(t2)
        l2[jj] += 1
        nw = w[:n] + (tuple(l1), tuple(l2)) + w[n + 1:]
        out[nw] = out.get(nw, 0) + sign
    return {a: b for a, b in out.items() if b}


def separated(w: Word, j: int, k: int) -> bool:
    """Whether the k-th and (k+1)-th occurrences of x_j sit in different letters."""
    jj = j - 1
    seen = 0
    for y in w:
        before = seen
        seen += y[jj]
        if before < k <= seen:
            return not (k + 1 <= seen)
    raise ValueError("occurrence missing")
