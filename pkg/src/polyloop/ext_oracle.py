"""Multigraded Tor of the ground field over the exterior face ring.

This path shares nothing with the cobar code: it builds a minimal free
resolution of k over the exterior face ring by linear algebra on explicit
free modules, one multidegree at a time.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coalgebra import epsilon
from .cobar import tk_complex
from .homology import field_homology, multidegrees
from .linalg import EchelonBasis, check_characteristic, kernel_basis
from .simplicial import SimplicialComplex, popcount


@dataclass
class FiniteGradedAlgebra:
    """Exterior face ring: basis v_s (s a face bitmask), product table on demand."""

    K: SimplicialComplex

    @property
    def basis(self):
        return [0] + list(self.K.nonempty_faces)

    def degree(self, s: int) -> int:
        return popcount(s)

    def multidegree(self, s: int) -> tuple:
        return tuple((s >> b) & 1 for b in range(self.K.m))

    def __len__(self):
        return len(self.K.faces)

    def multiply(self, a: int, b: int):
        """``(sign, a|b)`` for v_a * v_b, or None when the product vanishes."""
        if a & b:
            return None
        c = a | b
        if c not in self.K.faces:
            return None
        return (-1 if epsilon(a, b) & 1 else 1), c

    def check_associative(self) -> bool:
        B = self.basis
        for a in B:
            for b in B:
                ab = self.multiply(a, b)
                for c in B:
                    bc = self.multiply(b, c)
                    left = None
                    if ab is not None:
                        r = self.multiply(ab[1], c)
                        if r is not None:
                            left = (ab[0] * r[0], r[1])
                    right = None
                    if bc is not None:
                        r = self.multiply(a, bc[1])
                        if r is not None:
                            right = (bc[0] * r[0], r[1])
                    if left != right:
                        return False
        return True

    def check_unit(self) -> bool:
        return all(self.multiply(0, a) == (1, a) == self.multiply(a, 0) for a in self.basis)


def exterior_sr_algebra(K: SimplicialComplex) -> FiniteGradedAlgebra:
    return FiniteGradedAlgebra(K)


def _face_of_difference(J, Jg, m):
    """The face mask s with char(s) = J - Jg, or None if J - Jg is not 0/1."""
    s = 0
    for b in range(m):
        d = J[b] - Jg[b]
        if d < 0 or d > 1:
            return None
        if d:
            s |= 1 << b
    return s


def minimal_resolution_betti(A: FiniteGradedAlgebra, characteristic: int = 0, bound: int = 4) -> dict:
    """``{(n, I): dim Tor^A_{n,I}(k, k)}`` for all |I| <= bound (zeros omitted)."""
    p = check_characteristic(characteristic)
    K = A.K
    m = K.m
    faces = K.faces
    Js = multidegrees(m, bound)
    out = {(0, (0,) * m): 1}
    # generators of F_n: list of (multidegree, phi) where phi maps (gen index in
    # F_{n-1}, face) -> coefficient; F_0 has the single augmentation generator.
    prev_gens = [((0,) * m, None)]
    n = 0
    while prev_gens and n < bound:
        new_gens = []
        for J in Js:
            if not any(J):
                continue
            # basis of F_n in multidegree J
            basis = []
            for gi, (Jg, _) in enumerate(prev_gens):
                s = _face_of_difference(J, Jg, m)
                if s is not None and s in faces:
                    basis.append((gi, s))
            if not basis:
                continue
            pos = {b: i for i, b in enumerate(basis)}
            if n == 0:
                cycles = [{i: 1} for i in range(len(basis))]
            else:
                cols = [_act(A, s, prev_gens[gi][1]) for gi, s in basis]
                lower = _lower_index(prev_prev_gens, J, m, faces)
                cols = [{lower[key]: c for key, c in col.items()} for col in cols]
                cycles = kernel_basis(cols, p)
            if not cycles:
                continue
            image = EchelonBasis(p)
            for Jh, phi in new_gens:
                s = _face_of_difference(J, Jh, m)
                if s is None or s == 0 or s not in faces:
                    continue
                v = _act(A, s, phi)
                image.add({pos[key]: c for key, c in v.items()})
            count = 0
            for z in cycles:
                r, _, _ = image.reduce(z)
                if r:
                    image._store(r, None)
                    new_gens.append((J, {basis[i]: c for i, c in z.items()}))
                    count += 1
            if count:
                out[(n + 1, J)] = count
        prev_prev_gens = prev_gens
        prev_gens = new_gens
        n += 1
    return out


def _act(A: FiniteGradedAlgebra, s: int, phi: dict) -> dict:
    """v_s times an element given as {(gen, face): coef}."""
    out = {}
    for (g, t), c in phi.items():
        r = A.multiply(s, t)
        if r is None:
            continue
        key = (g, r[1])
        v = out.get(key, 0) + r[0] * c
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    return out


def _lower_index(gens, J, m, faces):
    idx = {}
    for gi, (Jg, _) in enumerate(gens):
        s = _face_of_difference(J, Jg, m)
        if s is not None and s in faces:
            idx[(gi, s)] = len(idx)
    return idx


@dataclass
class ComparisonRow:
    n: int
    I: tuple
    dim_tor: int
    dim_cobar: int

    @property
    def match(self) -> bool:
        return self.dim_tor == self.dim_cobar


def verify_cotor_iso(K: SimplicialComplex, characteristic: int = 0, bound: int = 4):
    """Compare Tor_{n,I} with H_{|I|-n}(T_K(I)) for every |I| <= bound.

    Returns ``(all_match, rows)``; rows cover every (n, I) where either side
    is nonzero.
    """
    tor = minimal_resolution_betti(exterior_sr_algebra(K), characteristic, bound)
    rows = []
    for I in multidegrees(K.m, bound):
        h = field_homology(tk_complex(K, I), characteristic)
        size = sum(I)
        ns = {size - k for k, d in h.items() if d} | {n for (n, J) in tor if J == I}
        for n in sorted(ns):
            rows.append(ComparisonRow(n, I, tor.get((n, I), 0), h.get(size - n, 0)))
    return all(r.match for r in rows), rows


def report_tsv(rows) -> str:
    lines = ["n\tI\tdim_tor\tdim_cobar\tmatch"]
    for r in rows:
        lines.append(f"{r.n}\t{','.join(map(str, r.I))}\t{r.dim_tor}\t{r.dim_cobar}\t{int(r.match)}")
    return "\n".join(lines) + "\n"
