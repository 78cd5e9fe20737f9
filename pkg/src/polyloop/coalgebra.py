"""Sign bookkeeping and the exterior Stanley-Reisner coalgebra.

A :class:`GradedCoalgebra` is a finite, connected, multigraded coalgebra
given by its reduced coproduct.  The cobar module consumes it without
caring where it came from, which is what lets the same code produce both
the configuration-space model (unit generator degrees) and the rescaled
sphere oracles (arbitrary generator degrees).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Hashable, Sequence

from .simplicial import SimplicialComplex, popcount, submasks, vertices_of


def epsilon(s1: int, s2: int) -> int:
    """Number of pairs (i, j), i in s1, j in s2, with i > j (bitmask inputs)."""
    total = 0
    while s1:
        low = s1 & -s1
        total += popcount(s2 & (low - 1))
        s1 ^= low
    return total


def epsilon_sets(s1, s2) -> int:
    """:func:`epsilon` for explicit vertex collections."""
    return sum(1 for i in s1 for j in s2 if i > j)


def epsilon_tuples(y1: Sequence[int], y2: Sequence[int]) -> int:
    """Bilinear extension of epsilon to exponent vectors: sum_{i>j} y1[i]*y2[j]."""
    total = 0
    acc = 0
    for i in range(len(y1)):
        # acc = sum_{j < i} y2[j]
        total += y1[i] * acc
        acc += y2[i]
    return total


def koszul(s1: int, s2: int, degrees: Sequence[int]) -> int:
    """sum over i in s1, j in s2, i > j of d_i * d_j (bitmasks, 0-indexed degrees)."""
    total = 0
    for i in range(len(degrees)):
        if s1 >> i & 1:
            for j in range(i):
                if s2 >> j & 1:
                    total += degrees[i] * degrees[j]
    return total


@dataclass
class GradedCoalgebra:
    """Finite connected multigraded coalgebra with integer structure constants.

    ``labels[0]`` is the counit element (degree 0, multidegree 0).  The
    reduced coproduct maps a basis index to a list of
    ``(left index, right index, coefficient)`` with both sides non-counit.
    """

    labels: list[Hashable]
    degrees: list[int]
    multidegrees: list[tuple[int, ...]]
    reduced: list[list[tuple[int, int, int]]]
    index: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.index:
            self.index = {lab: i for i, lab in enumerate(self.labels)}
        if self.degrees[0] != 0 or any(self.multidegrees[0]):
            raise ValueError("basis element 0 must be the counit")
        zero = [i for i, md in enumerate(self.multidegrees) if not any(md)]
        if zero != [0]:
            raise ValueError("coalgebra is not connected")

    def __len__(self):
        return len(self.labels)

    def check_coassociative(self) -> bool:
        """Expand (D x 1)D and (1 x D)D on every element (reduced parts)."""
        for a in range(len(self.labels)):
            left: dict = {}
            right: dict = {}
            for b, c, coef in self.reduced[a]:
                for b1, b2, c2 in self.reduced[b]:
                    key = (b1, b2, c)
                    left[key] = left.get(key, 0) + coef * c2
                for c1, c2_, c3 in self.reduced[c]:
                    key = (b, c1, c2_)
                    right[key] = right.get(key, 0) + coef * c3
            left = {k: v for k, v in left.items() if v}
            right = {k: v for k, v in right.items() if v}
            if left != right:
                return False
        return True

    def check_additive(self) -> bool:
        for a, terms in enumerate(self.reduced):
            for b, c, _ in terms:
                if self.degrees[b] + self.degrees[c] != self.degrees[a]:
                    return False
                md = tuple(x + y for x, y in zip(self.multidegrees[b], self.multidegrees[c]))
                if md != self.multidegrees[a]:
                    return False
        return True

    def to_json(self) -> str:
        rows = []
        for i, lab in enumerate(self.labels):
            rows.append({
                "label": _jsonable(lab),
                "degree": self.degrees[i],
                "multidegree": list(self.multidegrees[i]),
                "reduced_coproduct": [
                    [_jsonable(self.labels[b]), _jsonable(self.labels[c]), k]
                    for b, c, k in self.reduced[i]
                ],
            })
        return json.dumps(rows, sort_keys=True)


def _jsonable(label):
    if isinstance(label, int):
        return list(vertices_of(label))
    return list(label)


def exterior_sr_coalgebra(K: SimplicialComplex, degrees: Sequence[int] | None = None) -> GradedCoalgebra:
    """The dual of the exterior face ring of K with generator degrees ``degrees``.

    Basis: one element per face (label = face bitmask), the empty face first.
    The split of a face into (s1, s2) carries the sign (-1)^kappa with
    kappa = sum_{i in s1, j in s2, i > j} d_i d_j, which is epsilon(s1, s2)
    when every d_i = 1.
    """
    m = K.m
    if degrees is None:
        degrees = [1] * m
    degrees = list(degrees)
    if len(degrees) != m or any((not isinstance(d, int)) or d <= 0 for d in degrees):
        raise ValueError("need one positive integer degree per vertex")
    faces = [0] + list(K.nonempty_faces)
    unit = all(d == 1 for d in degrees)
    degs = [sum(degrees[b] for b in range(m) if f >> b & 1) for f in faces]
    mdegs = [tuple((f >> b) & 1 for b in range(m)) for f in faces]
    index = {f: i for i, f in enumerate(faces)}
    reduced = []
    for f in faces:
        terms = []
        for s1 in submasks(f):
            s2 = f ^ s1
            if s1 == 0 or s2 == 0:
                continue
            e = epsilon(s1, s2) if unit else koszul(s1, s2, degrees)
            terms.append((index[s1], index[s2], -1 if e & 1 else 1))
        terms.sort()
        reduced.append(terms)
    return GradedCoalgebra(faces, degs, mdegs, reduced, index)


def box_points(I: Sequence[int]):
    """All exponent vectors y with 0 <= y <= I, in lexicographic order."""
    out = [()]
    for top in I:
        out = [p + (a,) for p in out for a in range(top + 1)]
    return out


def tuple_coalgebra(K: SimplicialComplex, I: Sequence[int]) -> GradedCoalgebra:
    """Coalgebra on the K-product of N^m, truncated to the box below I.

    Basis: exponent vectors y <= I with supp(y) a face of K; degree |y|;
    coproduct y -> sum over y = y1 + y2 of (-1)^{epsilon(y1, y2)} y1 (x) y2.
    Its cobar construction is the tuple complex in multidegree I.
    """
    I = tuple(I)
    m = K.m
    if len(I) != m:
        raise ValueError("multidegree length mismatch")
    pts = []
    for y in box_points(I):
        supp = 0
        for b, a in enumerate(y):
            if a:
                supp |= 1 << b
        if supp in K.faces:
            pts.append(y)
    pts.sort(key=lambda y: (sum(y), y))
    index = {y: i for i, y in enumerate(pts)}
    reduced = []
    for y in pts:
        terms = []
        for y1 in box_points(y):
            y2 = tuple(a - b for a, b in zip(y, y1))
            if not any(y1) or not any(y2):
                continue
            # supports of y1, y2 are subsets of supp(y), hence faces
            e = epsilon_tuples(y1, y2)
            terms.append((index[y1], index[y2], -1 if e & 1 else 1))
        terms.sort()
        reduced.append(terms)
    return GradedCoalgebra(pts, [sum(y) for y in pts], list(pts), reduced, index)
