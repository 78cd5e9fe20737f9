"""Diagonal arrangements attached to multidegrees, and no-s-equal bases.

Everything here is symbolic: an arrangement is recorded by its subspaces
(blocks of coordinates forced equal) and chamber inequalities, and all
homology is computed through the face-word complex.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum

from .cobar import tk_complex
from .homology import integer_homology, multidegrees
from .simplicial import (SimplicialComplex, compose, full_subcomplex, point, simplex_skeleton,
                         vertices_of, vertices_only)


@dataclass
class ArrangementDescription:
    """Complement of coordinate-diagonal subspaces in R^dim.

    ``subspaces`` holds tuples of 1-indexed coordinates that are set equal;
    ``chambers`` holds pairs (a, b) meaning t_a < t_b.  ``case`` records
    which dictionary entry produced it.
    """

    dim: int
    subspaces: list[tuple[int, ...]]
    chambers: list[tuple[int, int]] = field(default_factory=list)
    case: str = ""
    complex: SimplicialComplex | None = None

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "subspaces": [list(s) for s in self.subspaces],
            "chambers": [list(c) for c in self.chambers],
            "case": self.case,
        }


def diagonal_arrangement(K: SimplicialComplex) -> ArrangementDescription:
    subs = sorted((vertices_of(t) for t in K.missing_faces()), key=lambda v: (len(v), v))
    return ArrangementDescription(K.m, subs, [], "diagonal", K)


def multidegree_to_arrangement(K: SimplicialComplex, I) -> ArrangementDescription:
    """Arrangement whose complement models the multidegree-I component.

    All ones: the diagonal arrangement of K.  A 0/1 vector: the diagonal
    arrangement of the full subcomplex on its support.  Otherwise K is
    restricted to the support and each vertex j is replaced by i_j
    disjoint points, with the copies of each colour ordered.
    """
    I = tuple(I)
    if len(I) != K.m or any(a < 0 for a in I):
        raise ValueError("bad multidegree")
    if all(a == 1 for a in I):
        return diagonal_arrangement(K)
    supp = [j + 1 for j, a in enumerate(I) if a]
    L = full_subcomplex(K, supp) if supp else None
    if all(a <= 1 for a in I):
        if L is None:
            return ArrangementDescription(0, [], [], "restricted")
        d = diagonal_arrangement(L)
        d.case = "restricted"
        return d
    blocks = [I[j - 1] for j in supp]
    L2 = compose(L, *[vertices_only(b) if b > 1 else point() for b in blocks])
    d = diagonal_arrangement(L2)
    chambers = []
    start = 1
    for b in blocks:
        chambers.extend((start + t, start + t + 1) for t in range(b - 1))
        start += b
    d.chambers = chambers
    d.case = "chambers"
    return d


class Interpretation(str, Enum):
    """Readings of the ordering condition between J_i and I_{i+1}."""

    VACUOUS = "vacuous"                 # max J_i < max I_{i+1}, void when I_{i+1} is empty
    REQUIRES_NONEMPTY = "nonempty"      # I_{i+1} must be nonempty and max J_i < max I_{i+1}
    ONLY_INTERNAL = "internal"          # strict condition only for i < k, last block free
    REVERSED = "reversed"               # max J_i > max I_{i+1}, void when I_{i+1} is empty
    REVERSED_PREVIOUS = "reversed-previous"  # max J_i > max I_i, void when I_i is empty


# Frozen after comparing every interpretation with Smith-normal-form ranks.
CALIBRATED = Interpretation.REVERSED


def _condition(interp: Interpretation, i: int, k: int, Is, Js) -> bool:
    nxt = Is[i + 1]
    if interp is Interpretation.VACUOUS:
        return not nxt or max(Js[i]) < max(nxt)
    if interp is Interpretation.REQUIRES_NONEMPTY:
        return bool(nxt) and max(Js[i]) < max(nxt)
    if interp is Interpretation.ONLY_INTERNAL:
        return i == k - 1 or (bool(nxt) and max(Js[i]) < max(nxt))
    if interp is Interpretation.REVERSED:
        return not nxt or max(Js[i]) > max(nxt)
    if interp is Interpretation.REVERSED_PREVIOUS:
        prev = Is[i]
        return not prev or max(Js[i]) > max(prev)
    raise ValueError(interp)


def no_equal_sequences(m: int, s: int, interpretation=CALIBRATED):
    """Yield the sequences (I_1, J_1, ..., J_k, I_{k+1}) passing the condition.

    The blocks are pairwise disjoint, cover [m], and every J_i has s
    elements.  Each sequence is returned as ``(Is, Js)``.
    """
    if s < 3:
        raise ValueError("need s >= 3")
    interp = Interpretation(interpretation)
    for k in range(m // s + 1):
        slots = 2 * k + 1
        for assign in itertools.product(range(slots), repeat=m):
            blocks = [[] for _ in range(slots)]
            for e, a in enumerate(assign):
                blocks[a].append(e + 1)
            Is, Js = blocks[0::2], blocks[1::2]
            if any(len(J) != s for J in Js):
                continue
            if all(_condition(interp, i, k, Is, Js) for i in range(k)):
                yield [tuple(x) for x in Is], [tuple(x) for x in Js]


def no_k_equal_betti_by_enumeration(m: int, s: int, interpretation=CALIBRATED) -> dict[int, int]:
    """Number of coded basis elements per degree (s - 2) k."""
    out: dict[int, int] = {}
    for Is, Js in no_equal_sequences(m, s, interpretation):
        d = (s - 2) * len(Js)
        out[d] = out.get(d, 0) + 1
    return dict(sorted(out.items()))


def no_equal_snf(m: int, s: int) -> dict[int, tuple[int, tuple]]:
    """Integer homology of the all-ones component for the (s-2)-skeleton of the simplex."""
    return integer_homology(tk_complex(simplex_skeleton(m, s - 2), (1,) * m))


def no_equal_report(m: int, s: int, interpretation=CALIBRATED):
    """Rows (degree, enumerated, snf rank, match) over every degree where either is nonzero."""
    enum = no_k_equal_betti_by_enumeration(m, s, interpretation)
    snf = {k: r for k, (r, _) in no_equal_snf(m, s).items()}
    degrees = sorted(set(enum) | {k for k, r in snf.items() if r})
    rows = [(d, enum.get(d, 0), snf.get(d, 0), enum.get(d, 0) == snf.get(d, 0)) for d in degrees]
    return all(r[3] for r in rows), rows


def calibrate(pairs=((3, 3), (4, 3))) -> list[Interpretation]:
    """Interpretations whose counts equal the SNF ranks in every degree for all pairs."""
    return [it for it in Interpretation if all(no_equal_report(m, s, it)[0] for m, s in pairs)]


class NotShifted(ValueError):
    pass


def shifted_torsion_report(K: SimplicialComplex, bound: int = 4):
    """Scan |I| <= bound for torsion; returns ``(torsion_free, violations)``."""
    if not K.is_shifted():
        raise NotShifted("complex is not shifted")
    bad = []
    for I in multidegrees(K.m, bound):
        for k, (_, tors) in integer_homology(tk_complex(K, I)).items():
            if tors:
                bad.append((I, k, tors))
    return not bad, bad
