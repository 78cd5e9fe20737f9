"""Finite abstract simplicial complexes on the vertex set [m].

Faces are stored as integer bitmasks: vertex ``i`` (1-indexed, as in the
user-facing API) is bit ``i - 1``.  Every constructor returns the full
downward closure, so iterating over ``K.faces`` visits every simplex
including the empty one (mask ``0``).
"""

from __future__ import annotations

import json
from functools import cached_property
from itertools import combinations, permutations
from typing import Iterable, Sequence

MAX_VERTICES = 64


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask of a collection of 1-indexed vertices."""
    mask = 0
    for v in vertices:
        mask |= 1 << (v - 1)
    return mask


def vertices_of(mask: int) -> tuple[int, ...]:
    """Sorted 1-indexed vertices of a bitmask."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def submasks(mask: int):
    """All submasks of ``mask`` (including 0 and ``mask`` itself)."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


class SimplicialComplex:
    """An immutable simplicial complex on ``m`` vertices.

    Use :func:`build_complex` (or the constructors below) rather than calling
    this directly; the initializer trusts that ``faces`` is already closed.
    """

    __slots__ = ("m", "faces", "__dict__")

    def __init__(self, m: int, faces: frozenset[int]):
        self.m = m
        self.faces = faces

    # -- basic structure -------------------------------------------------
    def __contains__(self, face) -> bool:
        if isinstance(face, int):
            return face in self.faces
        return mask_of(face) in self.faces

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SimplicialComplex)
            and self.m == other.m
            and self.faces == other.faces
        )

    def __hash__(self) -> int:
        return hash((self.m, self.faces))

    def __repr__(self) -> str:
        facets = [list(vertices_of(f)) for f in self.facets]
        return f"SimplicialComplex(m={self.m}, facets={facets})"

    @cached_property
    def facets(self) -> tuple[int, ...]:
        """Maximal faces, sorted by (size, vertices)."""
        faces = self.faces
        maximal = []
        for f in faces:
            free = ((1 << self.m) - 1) & ~f
            if not any((f | (1 << b)) in faces for b in range(self.m) if free >> b & 1):
                maximal.append(f)
        return tuple(sorted(maximal, key=_face_key))

    @cached_property
    def nonempty_faces(self) -> tuple[int, ...]:
        return tuple(sorted((f for f in self.faces if f), key=_face_key))

    @cached_property
    def dim(self) -> int:
        return max(popcount(f) for f in self.faces) - 1

    def face_count(self) -> int:
        return len(self.faces)

    @cached_property
    def edges(self) -> frozenset[int]:
        return frozenset(f for f in self.faces if popcount(f) == 2)

    def has_edge(self, i: int, j: int) -> bool:
        return ((1 << (i - 1)) | (1 << (j - 1))) in self.faces

    def missing_faces(self) -> frozenset[int]:
        """Minimal non-faces, as bitmasks."""
        return self._missing

    @cached_property
    def _missing(self) -> frozenset[int]:
        faces = self.faces
        out = set()
        # a missing face is a non-face all of whose codimension-one faces exist;
        # it is always a face plus one vertex
        for f in faces:
            for b in range(self.m):
                if f >> b & 1:
                    continue
                cand = f | (1 << b)
                if cand in faces or cand in out:
                    continue
                if all((cand & ~(1 << c)) in faces for c in range(self.m) if cand >> c & 1):
                    out.add(cand)
        return frozenset(out)

    def is_flag(self) -> bool:
        return all(popcount(t) == 2 for t in self.missing_faces())

    def dominates(self, i: int, j: int) -> bool:
        """True if vertex ``i`` may replace ``j`` in every face holding ``j``."""
        bi, bj = 1 << (i - 1), 1 << (j - 1)
        for f in self.faces:
            if f & bj and not f & bi:
                if (f & ~bj) | bi not in self.faces:
                    return False
        return True

    def is_shifted(self, order: Sequence[int] | None = None) -> bool:
        """Shiftedness with respect to ``order`` or, if omitted, to some ordering.

        With an explicit order (a permutation of ``1..m`` listing vertices from
        smallest to largest) the defining condition is checked directly.  For
        ``m <= 10`` without an order every ordering is considered; the search
        is greedy, which is exhaustive here because a vertex dominating all
        remaining vertices can always be placed first.  For larger ``m`` only
        the given vertex order ``1 < ... < m`` is checked.
        """
        if order is not None:
            order = list(order)
            return all(
                self.dominates(order[a], order[b])
                for a in range(len(order))
                for b in range(a + 1, len(order))
            )
        if self.m > 10:
            return self.is_shifted(range(1, self.m + 1))
        return self.shifting_order() is not None

    def shifting_order(self) -> tuple[int, ...] | None:
        """A vertex ordering witnessing shiftedness, or None."""
        remaining = list(range(1, self.m + 1))
        dom = {(i, j): self.dominates(i, j) for i in remaining for j in remaining if i != j}
        order = []
        while remaining:
            for v in remaining:
                if all(dom[v, w] for w in remaining if w != v):
                    order.append(v)
                    remaining.remove(v)
                    break
            else:
                return None
        return tuple(order)

    # -- serialization ---------------------------------------------------
    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "facets": [list(vertices_of(f)) for f in self.facets],
            "missing_faces": [
                list(vertices_of(t)) for t in sorted(self.missing_faces(), key=_face_key)
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "SimplicialComplex":
        if not isinstance(data, dict) or "m" not in data or "facets" not in data:
            raise ValueError("complex JSON needs keys 'm' and 'facets'")
        return build_complex(data["m"], data["facets"])

    @classmethod
    def from_json(cls, text: str) -> "SimplicialComplex":
        return cls.from_dict(json.loads(text))


def _face_key(mask: int):
    return (popcount(mask), vertices_of(mask))


def _closure(m: int, facet_masks: Iterable[int]) -> frozenset[int]:
    faces: set[int] = set()
    for f in facet_masks:
        if f in faces:
            continue
        faces.update(submasks(f))
    return frozenset(faces)


def build_complex(m: int, facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    """The complex on [m] generated by ``facets`` (1-indexed vertex lists)."""
    if not isinstance(m, int) or m < 1 or m > MAX_VERTICES:
        raise ValueError(f"vertex count must be an integer in 1..{MAX_VERTICES}, got {m!r}")
    masks = []
    covered = 0
    for facet in facets:
        facet = list(facet)
        for v in facet:
            if not isinstance(v, int) or v < 1 or v > m:
                raise ValueError(f"vertex {v!r} out of range 1..{m}")
        mk = mask_of(facet)
        covered |= mk
        masks.append(mk)
    missing = [v for v in range(1, m + 1) if not covered >> (v - 1) & 1]
    if missing:
        raise ValueError(f"vertices {missing} are not covered by any facet")
    return SimplicialComplex(m, _closure(m, masks))


def from_faces(m: int, faces: Iterable[int]) -> SimplicialComplex:
    """Complex from a family of face masks (closed downward here)."""
    faces = list(faces)
    return build_complex(m, [vertices_of(f) for f in faces] + [[v] for v in range(1, m + 1)])


# -- standard complexes ---------------------------------------------------

def full_simplex(m: int) -> SimplicialComplex:
    return build_complex(m, [range(1, m + 1)])


def vertices_only(m: int) -> SimplicialComplex:
    return build_complex(m, [[v] for v in range(1, m + 1)])


def point() -> SimplicialComplex:
    return full_simplex(1)


def boundary_of_simplex(m: int) -> SimplicialComplex:
    return skeleton(full_simplex(m), m - 2)


def polygon(n: int) -> SimplicialComplex:
    """Boundary of the n-gon, vertices in cyclic order."""
    return build_complex(n, [[i, i % n + 1] for i in range(1, n + 1)])


def octahedron_boundary(dim: int = 2) -> SimplicialComplex:
    """Boundary of the cross-polytope on 2*(dim+1) vertices; {2i-1, 2i} are antipodal."""
    n = dim + 1
    facets = []
    for choice in range(1 << n):
        facets.append([2 * i + 1 + (choice >> i & 1) for i in range(n)])
    return build_complex(2 * n, facets)


def skeleton(K: SimplicialComplex, i: int) -> SimplicialComplex:
    if i < 0 or i > K.dim:
        raise ValueError(f"skeleton index {i} out of range 0..{K.dim}")
    return SimplicialComplex(K.m, frozenset(f for f in K.faces if popcount(f) <= i + 1))


def simplex_skeleton(m: int, i: int) -> SimplicialComplex:
    """skel_i of the full simplex on [m]."""
    return skeleton(full_simplex(m), i)


def full_subcomplex(K: SimplicialComplex, V: Iterable[int]) -> SimplicialComplex:
    """K restricted to V, relabelled onto [|V|] preserving vertex order."""
    V = sorted(set(V))
    if not V:
        raise ValueError("full subcomplex needs a nonempty vertex set")
    for v in V:
        if v < 1 or v > K.m:
            raise ValueError(f"vertex {v} out of range 1..{K.m}")
    sel = mask_of(V)
    relabel = {old - 1: new for new, old in enumerate(V)}
    faces = set()
    for f in K.faces:
        if f & ~sel:
            continue
        g = 0
        for b, nb in relabel.items():
            if f >> b & 1:
                g |= 1 << nb
        faces.add(g)
    return SimplicialComplex(len(V), frozenset(faces))


def sigma_suspension(K: SimplicialComplex) -> SimplicialComplex:
    """Complex on [m+1] whose missing faces are tau + {m+1} for missing faces tau of K."""
    m = K.m
    if m + 1 > MAX_VERTICES:
        raise ValueError("too many vertices")
    apex = 1 << m
    missing = [t | apex for t in K.missing_faces()]
    faces = set()
    for f in submasks((1 << (m + 1)) - 1):
        if not any(t & f == t for t in missing):
            faces.add(f)
    return SimplicialComplex(m + 1, frozenset(faces))


def compose(K: SimplicialComplex, *L: SimplicialComplex) -> SimplicialComplex:
    """The complex K(L_1, ..., L_s) on the disjoint union of the vertex sets.

    Vertices of ``L_i`` occupy a consecutive block, blocks in order of ``i``.
    A set is a face iff the blocks it meets form a face of K and each of its
    block restrictions is a face of the corresponding ``L_i``.
    """
    if len(L) != K.m:
        raise ValueError(f"compose needs {K.m} complexes, got {len(L)}")
    offsets = []
    total = 0
    for comp in L:
        offsets.append(total)
        total += comp.m
    if total > MAX_VERTICES:
        raise ValueError("too many vertices")
    faces = set()
    for sigma in K.faces:
        blocks = [i for i in range(K.m) if sigma >> i & 1]
        partial = [0]
        for i in blocks:
            partial = [
                acc | (g << offsets[i]) for acc in partial for g in L[i].faces if g
            ]
        faces.update(partial)
    return SimplicialComplex(total, frozenset(faces))


def clique_complex(m: int, edges: Iterable[int]) -> SimplicialComplex:
    """Flag complex determined by a set of edge masks on [m]."""
    edges = set(edges)
    adj = [0] * m
    for e in edges:
        a, b = [v - 1 for v in vertices_of(e)]
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    faces = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for f in frontier:
            top = f.bit_length()
            common = (1 << m) - 1
            for b in range(m):
                if f >> b & 1:
                    common &= adj[b]
            for b in range(top, m):
                if common >> b & 1:
                    g = f | (1 << b)
                    faces.add(g)
                    nxt.append(g)
        frontier = nxt
    return SimplicialComplex(m, frozenset(faces))


def is_shifted_bruteforce(K: SimplicialComplex) -> bool:
    """Reference check over all m! orderings (small m only)."""
    return any(K.is_shifted(p) for p in permutations(range(1, K.m + 1)))


def random_complex(m: int, rng, n_facets: int | None = None, max_size: int | None = None):
    """A random complex on [m] whose facets are random subsets; isolated vertices kept."""
    if n_facets is None:
        n_facets = rng.randint(1, 2 * m)
    if max_size is None:
        max_size = m
    facets = []
    for _ in range(n_facets):
        size = rng.randint(1, max_size)
        facets.append(rng.sample(range(1, m + 1), size))
    facets += [[v] for v in range(1, m + 1)]
    return build_complex(m, facets)


def all_subsets(m: int, size: int):
    return [mask_of(c) for c in combinations(range(1, m + 1), size)]
