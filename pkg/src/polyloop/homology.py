"""Homology of the sparse complexes built in :mod:`polyloop.cobar`.

Integer homology goes through Smith normal form; field homology and
homology bases go through incremental echelon forms over Q or F_p.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .cobar import Chain, ChainComplex
from .linalg import EchelonBasis, check_characteristic, kernel_basis, rank, smith_invariants


class BoundaryError(RuntimeError):
    """Raised when a complex fails d^2 = 0."""


def _require_d_squared(cx: ChainComplex):
    if not cx.check_d_squared():
        raise BoundaryError(f"d^2 != 0 in multidegree {cx.multidegree}")


def integer_homology(cx: ChainComplex, check: bool = True) -> dict[int, tuple[int, tuple[int, ...]]]:
    """``{k: (free rank, invariant factors > 1)}`` for every valid degree k."""
    if check:
        _require_d_squared(cx)
    inv: dict[int, list[int]] = {}

    def invariants(k):
        if k not in inv:
            cols = cx.boundary.get(k)
            inv[k] = smith_invariants(cols, cx.size(k - 1)) if cols else []
        return inv[k]

    out = {}
    for k in cx.valid_degrees:
        n = cx.size(k)
        r_out = len(invariants(k)) if k > 0 else 0
        below = invariants(k + 1)
        free = n - r_out - len(below)
        out[k] = (free, tuple(d for d in below if d > 1))
    return out


def field_homology(cx: ChainComplex, characteristic: int = 0, check: bool = True) -> dict[int, int]:
    """``{k: dim H_k(cx; F)}`` over Q (0) or F_p."""
    check_characteristic(characteristic)
    if check:
        _require_d_squared(cx)
    ranks: dict[int, int] = {}

    def r(k):
        if k not in ranks:
            cols = cx.boundary.get(k)
            ranks[k] = rank(cols, characteristic) if cols and k > 0 else 0
        return ranks[k]

    return {k: cx.size(k) - r(k) - r(k + 1) for k in cx.valid_degrees}


class HomologyBasis:
    """Cycle representatives of a basis of H_k(cx; F) and coordinates in it.

    Representatives are kernel vectors of the boundary taken in column
    order, skipping those already in the span of boundaries and earlier
    representatives.
    """

    def __init__(self, cx: ChainComplex, k: int, characteristic: int = 0):
        self.cx = cx
        self.degree = k
        self.p = check_characteristic(characteristic)
        self.reps: list[dict] = []
        self._eb = EchelonBasis(self.p)
        if k not in cx.valid_degrees or cx.size(k) == 0:
            return
        for col in cx.boundary.get(k + 1, ()):
            if col:
                self._eb.add(col)
        if k == 0:
            cycles = [{i: 1} for i in range(cx.size(0))]
        else:
            cycles = kernel_basis(cx.boundary[k], self.p)
        for z in cycles:
            n = len(self.reps)
            r, t, _ = self._eb.reduce(z, {n: 1})
            if r:
                self._eb._store(r, t)
                self.reps.append(z)

    def __len__(self):
        return len(self.reps)

    @property
    def representatives(self) -> list[Chain]:
        return [self.cx.chain(z, self.degree) for z in self.reps]

    def coordinates_of_vector(self, vec: dict) -> list:
        """Coordinates of the class of a cycle given in basis-index form."""
        r, t, s = self._eb.reduce(vec, {})
        if r:
            raise ValueError("vector is not a cycle of this complex")
        out = [0] * len(self.reps)
        for i, v in (t or {}).items():
            if self.p:
                out[i] = (-v) % self.p
            else:
                out[i] = Fraction(-v, s)
        return out

    def coordinates(self, chain: Chain) -> list:
        if not chain:
            return [0] * len(self.reps)
        return self.coordinates_of_vector(self.cx.vector(chain, self.degree))

    def is_boundary(self, chain: Chain) -> bool:
        """Whether a cycle is null-homologous."""
        return not any(self.coordinates(chain))

    def in_span(self, chain: Chain, others: list[Chain]) -> bool:
        """Whether the class of ``chain`` lies in the span of the classes of ``others``."""
        eb = EchelonBasis(self.p)
        for c in others:
            v = {i: x for i, x in _as_int_vector(self.coordinates(c), self.p).items()}
            if v:
                eb.add(v)
        target = _as_int_vector(self.coordinates(chain), self.p)
        return not target or eb.contains(target)


def _as_int_vector(coords: list, p: int) -> dict:
    if p:
        return {i: int(c) for i, c in enumerate(coords) if c}
    den = 1
    for c in coords:
        if c:
            den = den * Fraction(c).denominator // _gcd(den, Fraction(c).denominator)
    return {i: int(Fraction(c) * den) for i, c in enumerate(coords) if c}


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def homology_basis(cx: ChainComplex, characteristic: int = 0) -> dict[int, HomologyBasis]:
    return {k: HomologyBasis(cx, k, characteristic) for k in cx.valid_degrees}


def induced_map(f: Callable[[Chain], Chain], source: HomologyBasis, target: HomologyBasis,
                check: bool = True) -> list[list]:
    """Matrix of f_* (rows = target basis, columns = source basis).

    With ``check`` the chain-map condition d f = f d is verified on every
    word of the source degree.
    """
    if check:
        cx, k = source.cx, source.degree
        for w in cx.basis.get(k, ()):
            lhs = target.cx.differential(f({w: 1}))
            rhs = f(cx.differential({w: 1})) if k > 0 else {}
            if _normalize(lhs, target.p) != _normalize(rhs, target.p):
                raise ValueError("map does not commute with the differential")
    cols = [target.coordinates(f(z)) for z in source.representatives]
    return [[cols[j][i] for j in range(len(cols))] for i in range(len(target))]


def _normalize(c: Chain, p: int) -> dict:
    if p:
        return {w: v % p for w, v in c.items() if v % p}
    return {w: v for w, v in c.items() if v}


def matrix_rank(M: list[list], characteristic: int = 0) -> int:
    cols = []
    ncols = len(M[0]) if M else 0
    for j in range(ncols):
        col = {}
        den = 1
        for i in range(len(M)):
            if M[i][j]:
                den = den * Fraction(M[i][j]).denominator // _gcd(den, Fraction(M[i][j]).denominator)
        for i in range(len(M)):
            if M[i][j]:
                col[i] = int(Fraction(M[i][j]) * den)
        cols.append(col)
    return rank(cols, characteristic)


# -- tables -----------------------------------------------------------------

@dataclass
class BettiTable:
    """Map (multidegree, degree) -> (free rank, torsion invariant factors)."""

    entries: dict = field(default_factory=dict)
    euler: dict = field(default_factory=dict)

    def add(self, cx: ChainComplex, homology: dict):
        I = tuple(cx.multidegree)
        for k, v in homology.items():
            self.entries[(I, k)] = v
        self.euler[I] = cx.euler_characteristic()

    def check_euler(self) -> bool:
        for I, chi in self.euler.items():
            total = sum((-1) ** k * r for (J, k), (r, _) in self.entries.items() if J == I)
            if total != chi:
                return False
        return True

    def rows(self):
        for (I, k) in sorted(self.entries, key=lambda e: (sum(e[0]), e[0], e[1])):
            r, tors = self.entries[(I, k)]
            yield I, k, r, tors

    def to_tsv(self) -> str:
        lines = ["I\tk\trank\ttorsion"]
        for I, k, r, tors in self.rows():
            lines.append(f"{','.join(map(str, I))}\t{k}\t{r}\t{';'.join(map(str, tors))}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        data = [{"I": list(I), "k": k, "rank": r, "torsion": list(t)} for I, k, r, t in self.rows()]
        return json.dumps(data, indent=1) + "\n"


def multidegrees(m: int, bound: int, support=None):
    """All I in N^m with |I| <= bound, by increasing |I| then lexicographically."""
    out = []

    def rec(prefix, left):
        if len(prefix) == m:
            out.append(tuple(prefix))
            return
        for a in range(left + 1):
            rec(prefix + [a], left - a)

    rec([], bound)
    out.sort(key=lambda I: (sum(I), I))
    return out


def image_rank(sub: ChainComplex, cx: ChainComplex, embed: Callable, k: int, characteristic: int = 0) -> int:
    """Rank of H_k(sub) -> H_k(cx) for a chain inclusion given on words by ``embed``."""
    p = check_characteristic(characteristic)
    eb = EchelonBasis(p)
    for col in cx.boundary.get(k + 1, ()):
        if col:
            eb.add(col)
    base = eb.rank
    if sub.size(k) == 0:
        return 0
    cycles = [{i: 1} for i in range(sub.size(k))] if k == 0 else kernel_basis(sub.boundary[k], p)
    words = sub.basis[k]
    idx = cx.index[k]
    for z in cycles:
        eb.add({idx[embed(words[i])]: c for i, c in z.items()})
    return eb.rank - base


def tk_into_pk_surjective(K, I, characteristic: int = 0) -> tuple[bool, dict]:
    """Whether H(T_K(I)) -> H(P_K(I)) is onto in every degree; also the per-degree (image, target) dims."""
    from .cobar import pk_complex, tk_complex, tk_word_to_pk

    I = tuple(I)
    t = tk_complex(K, I)
    pcx = pk_complex(K, I)
    hp = field_homology(pcx, characteristic)
    detail = {}
    for k, d in hp.items():
        r = image_rank(t, pcx, lambda w: tk_word_to_pk(w, K.m), k, characteristic) if k in t.basis else 0
        detail[k] = (r, d)
    return all(r == d for r, d in detail.values()), detail
