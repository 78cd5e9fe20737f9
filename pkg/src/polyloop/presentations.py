"""Graded algebras given by generators and homogeneous relations.

Dimensions of the quotient T(V)/(R) are counted slice by slice: a slice is
a (degree, multidegree) pair, its words are listed explicitly, and the
ideal's part of the slice is spanned by the products u * r * v.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

from .coalgebra import epsilon_sets
from .linalg import EchelonBasis, check_characteristic
from .simplicial import SimplicialComplex, vertices_of

Poly = dict  # word (tuple of generator indices) -> integer coefficient


@dataclass
class AlgebraPresentation:
    """Generators ``(name, degree, multidegree)`` and relations as polynomials.

    Multidegrees are optional but must be given either for all generators
    or for none.
    """

    generators: list[tuple[str, int, tuple | None]]
    relations: list[Poly] = field(default_factory=list)

    def __post_init__(self):
        names = [g[0] for g in self.generators]
        if len(set(names)) != len(names):
            raise ValueError("generator names must be unique")
        if any(g[1] < 0 for g in self.generators):
            raise ValueError("generator degrees must be non-negative")
        has_md = {g[2] is not None for g in self.generators}
        if len(has_md) > 1:
            raise ValueError("give multidegrees for all generators or none")
        for r in self.relations:
            if len({self.word_key(w) for w in r}) > 1:
                raise ValueError(f"relation is not homogeneous: {self.format(r)}")

    @property
    def graded_by_multidegree(self) -> bool:
        return bool(self.generators) and self.generators[0][2] is not None

    def index(self, name: str) -> int:
        for i, g in enumerate(self.generators):
            if g[0] == name:
                return i
        raise KeyError(name)

    def word_key(self, w) -> tuple:
        d = sum(self.generators[i][1] for i in w)
        if not self.graded_by_multidegree:
            return (d,)
        width = len(self.generators[0][2])
        md = [0] * width
        for i in w:
            for t, a in enumerate(self.generators[i][2]):
                md[t] += a
        return (d, tuple(md))

    def format(self, r: Poly) -> str:
        terms = []
        for w, c in sorted(r.items()):
            name = "*".join(self.generators[i][0] for i in w) or "1"
            terms.append(f"{c:+d} {name}")
        return " ".join(terms)

    def to_json(self) -> str:
        return json.dumps({
            "generators": [
                {"name": n, "degree": d, **({"multidegree": list(md)} if md is not None else {})}
                for n, d, md in self.generators
            ],
            "relations": [
                [[c, [self.generators[i][0] for i in w]] for w, c in sorted(r.items())]
                for r in self.relations
            ],
        }, indent=1)

    @classmethod
    def from_json(cls, text: str) -> "AlgebraPresentation":
        data = json.loads(text)
        gens = [(g["name"], g["degree"], tuple(g["multidegree"]) if "multidegree" in g else None)
                for g in data["generators"]]
        idx = {g[0]: i for i, g in enumerate(gens)}
        rels = []
        for r in data["relations"]:
            poly = {}
            for c, names in r:
                w = tuple(idx[n] for n in names)
                poly[w] = poly.get(w, 0) + c
            rels.append({w: c for w, c in poly.items() if c})
        return cls(gens, rels)


def commutator(P_or_degrees, a: int, b: int) -> Poly:
    """Graded commutator [a, b] = ab - (-1)^{|a||b|} ba of two generators.

    [a, a] for odd |a| equals 2a^2 and is encoded as a^2; for even |a| it
    vanishes and the empty relation is returned.
    """
    degs = P_or_degrees if isinstance(P_or_degrees, (list, tuple)) else [g[1] for g in P_or_degrees.generators]
    sign = -1 if (degs[a] * degs[b]) % 2 else 1
    if a == b:
        return {(a, a): 1} if sign == -1 else {}
    return {(a, b): 1, (b, a): -sign}


def _poly_times(u, r: Poly, v) -> Poly:
    return {u + w + v: c for w, c in r.items()}


class _WordTable:
    """Words grouped by key, generated up to degree and multidegree limits."""

    def __init__(self, P: AlgebraPresentation, cutoff: int, window: int | None):
        self.P = P
        self.cutoff = cutoff
        self.window = window
        degs = [g[1] for g in P.generators]
        if any(d == 0 for d in degs):
            if window is None:
                raise ValueError(
                    "degree-0 generators: the degree-0 part cannot be bounded without a multidegree window")
            if not P.graded_by_multidegree or any(not any(g[2]) for g in P.generators if g[1] == 0):
                raise ValueError("degree-0 generators need nonzero multidegrees")
        self.table: dict[tuple, list] = {P.word_key(()): [()]}
        frontier = [()]
        while frontier:
            nxt = []
            for w in frontier:
                for i in range(len(P.generators)):
                    w2 = w + (i,)
                    if self._admissible(w2):
                        self.table.setdefault(P.word_key(w2), []).append(w2)
                        nxt.append(w2)
            frontier = nxt

    def _admissible(self, w) -> bool:
        key = self.P.word_key(w)
        if key[0] > self.cutoff:
            return False
        if self.window is not None and len(key) > 1 and sum(key[1]) > self.window:
            return False
        if self.window is None and not any(self.P.generators[i][1] for i in w):
            # only degree-0 letters: cannot happen without a window
            return False
        return True

    def keys(self):
        return sorted(self.table, key=_key_order)


def _key_order(k):
    return (k[0],) + tuple((sum(k[1]), k[1]) if len(k) > 1 else ())


def _sub(a, b):
    if len(a) == 1:
        return (a[0] - b[0],)
    return (a[0] - b[0], tuple(x - y for x, y in zip(a[1], b[1])))


def _nonneg(k) -> bool:
    if k[0] < 0:
        return False
    return len(k) == 1 or all(x >= 0 for x in k[1])


def slice_dims(P: AlgebraPresentation, characteristic: int = 0, cutoff: int = 6,
               window: int | None = None) -> dict[tuple, int]:
    """Quotient dimension in every (degree[, multidegree]) slice within the limits."""
    p = check_characteristic(characteristic)
    table = _WordTable(P, cutoff, window)
    rels = [(P.word_key(next(iter(r))), r) for r in P.relations if r]
    out = {}
    for S in table.keys():
        words = table.table[S]
        pos = {w: i for i, w in enumerate(words)}
        eb = EchelonBasis(p)
        for R, r in rels:
            rest = _sub(S, R)
            if not _nonneg(rest):
                continue
            for A in table.table:
                B = _sub(rest, A)
                if not _nonneg(B) or B not in table.table:
                    continue
                for u in table.table[A]:
                    for v in table.table[B]:
                        vec = {}
                        for w, c in _poly_times(u, r, v).items():
                            i = pos[w]
                            vec[i] = vec.get(i, 0) + c
                        vec = {i: c for i, c in vec.items() if c}
                        if vec:
                            eb.add(vec)
                        if eb.rank == len(words):
                            break
                    if eb.rank == len(words):
                        break
        out[S] = len(words) - eb.rank
    return out


def quotient_dims(P: AlgebraPresentation, characteristic: int = 0, cutoff: int = 6,
                  window: int | None = None) -> dict[int, int]:
    """Dimension of each degree 0..cutoff of the quotient (within the window, if any)."""
    dims = {d: 0 for d in range(cutoff + 1)}
    for S, n in slice_dims(P, characteristic, cutoff, window).items():
        dims[S[0]] += n
    return dims


def free_algebra_dims(degrees, cutoff: int) -> dict[int, int]:
    """Hilbert function of the free algebra on generators of the given positive degrees."""
    h = [0] * (cutoff + 1)
    h[0] = 1
    for d in range(1, cutoff + 1):
        h[d] = sum(h[d - g] for g in degrees if 0 < g <= d)
    return dict(enumerate(h))


# -- builders -----------------------------------------------------------------

def exterior_presentation(degree: int = 1, name: str = "u") -> AlgebraPresentation:
    """One generator with square zero."""
    return AlgebraPresentation([(name, degree, None)], [{(0, 0): 1}])


def polynomial_presentation(degree: int, name: str = "u") -> AlgebraPresentation:
    """One generator, no relations."""
    return AlgebraPresentation([(name, degree, None)], [])


def flag_presentation(K: SimplicialComplex, inputs: list[AlgebraPresentation]) -> AlgebraPresentation:
    """Graph product: vertex algebras plus graded commutators along every edge.

    A generator of degree d from vertex j gets multidegree d * e_j.
    """
    if not K.is_flag():
        raise ValueError("complex is not flag")
    if len(inputs) != K.m:
        raise ValueError("need one presentation per vertex")
    gens = []
    owner = []
    rels = []
    for j, Pj in enumerate(inputs):
        offset = len(gens)
        for name, d, _ in Pj.generators:
            md = [0] * K.m
            md[j] = d
            gens.append((f"{name}{j + 1}", d, tuple(md)))
            owner.append(j)
        for r in Pj.relations:
            rels.append({tuple(offset + i for i in w): c for w, c in r.items()})
    degs = [g[1] for g in gens]
    for a in range(len(gens)):
        for b in range(a + 1, len(gens)):
            if owner[a] != owner[b] and K.has_edge(owner[a] + 1, owner[b] + 1):
                rels.append(commutator(degs, a, b))
    return AlgebraPresentation(gens, rels)


def eps_j_S(j: int, S, reading: str = "left") -> int:
    """Sign exponent for j in S: eps({j}, S-{j}) ("left") or eps(S-{j}, {j}) ("right")."""
    rest = [i for i in S if i != j]
    if reading == "left":
        return epsilon_sets([j], rest)
    if reading == "right":
        return epsilon_sets(rest, [j])
    raise ValueError(reading)


def _subsets(m, s):
    return [tuple(c) for c in itertools.combinations(range(1, m + 1), s)]


def skeleton_tk_presentation(m: int, s: int, reading: str = "left") -> AlgebraPresentation:
    """Commuting x_j of degree 0 and omega_J (|J| = s) of degree s - 2.

    Relations: [x_i, x_j] = 0 and, for |S| = s + 1,
    sum_{j in S} (-1)^{eps(j, S)} [x_j, omega_{S - j}] = 0.
    """
    if not 3 <= s <= m:
        raise ValueError("need 3 <= s <= m")
    gens = []
    for j in range(1, m + 1):
        md = [0] * m
        md[j - 1] = 1
        gens.append((f"x{j}", 0, tuple(md)))
    wid = {}
    for J in _subsets(m, s):
        wid[J] = len(gens)
        gens.append(("w" + "".join(map(str, J)), s - 2, tuple(1 if i + 1 in J else 0 for i in range(m))))
    degs = [g[1] for g in gens]
    rels = [commutator(degs, i, j) for i in range(m) for j in range(i + 1, m)]
    for S in _subsets(m, s + 1):
        rel: Poly = {}
        for j in S:
            J = tuple(i for i in S if i != j)
            sign = -1 if eps_j_S(j, S, reading) % 2 else 1
            for w, c in commutator(degs, j - 1, wid[J]).items():
                rel[w] = rel.get(w, 0) + sign * c
        rels.append({w: c for w, c in rel.items() if c})
    return AlgebraPresentation(gens, rels)


def dj_presentation(m: int, s: int) -> AlgebraPresentation:
    """u_j of degree 1 and w_J (|J| = s) of degree 2s - 2.

    Relations: [u_i, u_j] = 0 for all i, j (so u_i^2 = 0), [u_j, w_J] = 0
    for j in J, and for |S| = s + 1 the sum of [u_j, w_{S - j}] over j in S.
    """
    if not 2 <= s <= m:
        raise ValueError("need 2 <= s <= m")
    gens = []
    for j in range(1, m + 1):
        md = [0] * m
        md[j - 1] = 1
        gens.append((f"u{j}", 1, tuple(md)))
    wid = {}
    for J in _subsets(m, s):
        wid[J] = len(gens)
        gens.append(("w" + "".join(map(str, J)), 2 * s - 2, tuple(1 if i + 1 in J else 0 for i in range(m))))
    degs = [g[1] for g in gens]
    rels = []
    for i in range(m):
        for j in range(i, m):
            rels.append(commutator(degs, i, j))
    for J, g in wid.items():
        for j in J:
            rels.append(commutator(degs, j - 1, g))
    for S in _subsets(m, s + 1):
        rel: Poly = {}
        for j in S:
            J = tuple(i for i in S if i != j)
            for w, c in commutator(degs, j - 1, wid[J]).items():
                rel[w] = rel.get(w, 0) + c
        rels.append({w: c for w, c in rel.items() if c})
    return AlgebraPresentation(gens, rels)
