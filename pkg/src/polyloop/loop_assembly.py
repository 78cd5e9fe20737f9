"""Loop homology of polyhedral products from face-word homology.

The graded vector space

    V = sum over I of H_*(T_K(I)) (x) A_1^{(x) i_1} (x) ... (x) A_m^{(x) i_m}

(A_j the reduced loop homology of the j-th vertex space) is divided by the
span of the doubling relations

    (mu_{j,k} y) (x) (... a_k (x) a_{k+1} ...)  -  y (x) (... a_k * a_{k+1} ...)

where a_k, a_{k+1} are the k-th and (k+1)-th factors of colour j.  Both
sides keep the topological degree of y and the total degree carried by each
colour, so the quotient splits into blocks indexed by (k, W) with W the
per-colour input degree; each block is a finite rank computation.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import artin
from .cobar import Chain, concat_product, cobar_complex, mu_chain, tk_complex
from .coalgebra import exterior_sr_coalgebra
from .homology import HomologyBasis, field_homology, multidegrees
from .linalg import EchelonBasis, check_characteristic
from .simplicial import SimplicialComplex


# -- vertex algebras ------------------------------------------------------------

@dataclass
class VertexAlgebraInput:
    """Reduced part of a connected graded algebra, truncated at ``cutoff``.

    ``degrees[i]`` is the degree of basis element i (all >= 1) and
    ``products[(a, b)]`` the product a*b as ``{c: coefficient}`` (missing
    pairs multiply to zero).
    """

    names: list[str]
    degrees: list[int]
    products: dict = field(default_factory=dict)
    cutoff: int = 10

    def __post_init__(self):
        if any(d <= 0 for d in self.degrees):
            raise ValueError("reduced basis elements must have positive degree")
        for (a, b), prod in self.products.items():
            for c in prod:
                if self.degrees[c] != self.degrees[a] + self.degrees[b]:
                    raise ValueError("product is not degree additive")

    def multiply(self, a: int, b: int) -> dict:
        return self.products.get((a, b), {})

    def check_associative(self) -> bool:
        n = len(self.names)
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if self.degrees[a] + self.degrees[b] + self.degrees[c] > self.cutoff:
                        continue
                    left: dict = {}
                    for ab, x in self.multiply(a, b).items():
                        for r, y in self.multiply(ab, c).items():
                            left[r] = left.get(r, 0) + x * y
                    right: dict = {}
                    for bc, x in self.multiply(b, c).items():
                        for r, y in self.multiply(a, bc).items():
                            right[r] = right.get(r, 0) + x * y
                    if {k: v for k, v in left.items() if v} != {k: v for k, v in right.items() if v}:
                        return False
        return True

    def to_json(self) -> str:
        return json.dumps({
            "basis": [{"name": n, "degree": d} for n, d in zip(self.names, self.degrees)],
            "products": [[self.names[a], self.names[b], {self.names[c]: v for c, v in p.items()}]
                         for (a, b), p in sorted(self.products.items())],
        })

    @classmethod
    def from_dict(cls, data: dict, cutoff: int = 10) -> "VertexAlgebraInput":
        names = [e["name"] for e in data["basis"]]
        degs = [int(e["degree"]) for e in data["basis"]]
        idx = {n: i for i, n in enumerate(names)}
        prods = {}
        for a, b, p in data.get("products", []):
            prods[(idx[a], idx[b])] = {idx[c]: int(v) for c, v in p.items() if v}
        return cls(names, degs, prods, cutoff)


def exterior_input(degree: int = 1, cutoff: int = 10) -> VertexAlgebraInput:
    """Lambda[u]: one generator, u^2 = 0."""
    return VertexAlgebraInput(["u"], [degree], {}, cutoff)


def poly_input(n: int, cutoff: int = 10) -> VertexAlgebraInput:
    """k[u] with deg u = n, truncated at the cutoff."""
    if n < 1:
        raise ValueError("generator degree must be positive")
    top = cutoff // n
    names = [f"u^{a}" for a in range(1, top + 1)]
    degs = [n * a for a in range(1, top + 1)]
    prods = {}
    for a in range(1, top + 1):
        for b in range(1, top + 1 - a):
            prods[(a - 1, b - 1)] = {a + b - 1: 1}
    return VertexAlgebraInput(names, degs, prods, cutoff)


_SHORTHAND = re.compile(r"^\s*(exterior|poly)\((\d+)\)\s*$")


def parse_input(spec, cutoff: int = 10) -> VertexAlgebraInput:
    """A shorthand string ("exterior(1)", "poly(n)") or a JSON-style dict."""
    if isinstance(spec, VertexAlgebraInput):
        return spec
    if isinstance(spec, dict):
        return VertexAlgebraInput.from_dict(spec, cutoff)
    mt = _SHORTHAND.match(str(spec))
    if not mt:
        raise ValueError(f"unknown vertex algebra {spec!r}")
    kind, n = mt.group(1), int(mt.group(2))
    return exterior_input(n, cutoff) if kind == "exterior" else poly_input(n, cutoff)


# -- homology with a degree-0 shortcut -------------------------------------------

class DegreeZeroBasis:
    """H_0(T_K(I)) is free on monoid normal forms; a word's class is its normal form."""

    def __init__(self, K: SimplicialComplex, I):
        self.K = K
        self.degree = 0
        self.forms = artin.normal_forms(K, I, budget=None)
        self.pos = {w: i for i, w in enumerate(self.forms)}

    def __len__(self):
        return len(self.forms)

    @property
    def representatives(self) -> list[Chain]:
        return [{artin.letters_to_word(w): 1} for w in self.forms]

    def coordinates(self, chain: Chain) -> list:
        out = [0] * len(self.forms)
        for w, c in chain.items():
            out[self.pos[artin.normal_form(self.K, artin.word_of_letters(w))]] += c
        return out


class LoopAssembly:
    """The quotient V / (doubling relations) through total degree ``cutoff``."""

    def __init__(self, K: SimplicialComplex, inputs, characteristic: int = 0, cutoff: int = 6,
                 sign: str = "plus", fast_degree_zero: bool = True):
        if len(inputs) != K.m:
            raise ValueError("need one vertex algebra per vertex")
        self.K = K
        self.inputs = [parse_input(a, cutoff) for a in inputs]
        self.p = check_characteristic(characteristic)
        self.cutoff = cutoff
        self.sign = sign
        self.fast = fast_degree_zero
        self._hom: dict = {}
        self._cx: dict = {}
        self._mu: dict = {}
        self._blocks: dict = {}

    # homology of the face-word components
    def homology(self, I: tuple, k: int):
        key = (I, k)
        if key not in self._hom:
            if k == 0 and self.fast:
                self._hom[key] = DegreeZeroBasis(self.K, I)
            else:
                cx = tk_complex(self.K, I, max_degree=k)
                self._hom[key] = HomologyBasis(cx, k, self.p)
        return self._hom[key]

    def mu_columns(self, I: tuple, k: int, j: int, kk: int) -> list[list]:
        """Coordinates of mu_{j,kk}(basis class) in H_k(T(I + e_j)), one list per class."""
        key = (I, k, j, kk)
        if key not in self._mu:
            src = self.homology(I, k)
            J = list(I)
            J[j - 1] += 1
            tgt = self.homology(tuple(J), k)
            self._mu[key] = [tgt.coordinates(mu_chain(j, kk, z)) for z in src.representatives]
        return self._mu[key]

    # tensor factors
    @lru_cache(maxsize=None)
    def _tensor_options(self, j: int, length: int, weight: int) -> tuple:
        A = self.inputs[j]
        out = []

        def rec(prefix, left, rem):
            if left == 0:
                if rem == 0:
                    out.append(tuple(prefix))
                return
            for b, d in enumerate(A.degrees):
                if d <= rem - (left - 1):
                    rec(prefix + [b], left - 1, rem - d)

        rec([], length, weight)
        return tuple(out)

    def _tensors(self, I, W):
        per = [self._tensor_options(j, I[j], W[j]) for j in range(self.K.m)]
        return list(itertools.product(*per))

    def _multidegrees(self, W):
        ranges = [range(1, w + 1) if w else range(0, 1) for w in W]
        return [I for I in itertools.product(*ranges)]

    def block(self, k: int, W: tuple):
        """``(elements, echelon basis of relations)`` for the block (k, W)."""
        key = (k, W)
        if key in self._blocks:
            return self._blocks[key]
        elements = []
        for I in self._multidegrees(W):
            tens = self._tensors(I, W)
            if not tens:
                continue
            h = self.homology(I, k)
            for c in range(len(h)):
                for x in tens:
                    elements.append((I, c, x))
        index = {e: i for i, e in enumerate(elements)}
        eb = EchelonBasis(self.p)
        if elements:
            for vec in self._relations(k, W, index):
                if vec:
                    eb.add(vec)
        self._blocks[key] = (elements, index, eb)
        return self._blocks[key]

    def _relations(self, k, W, index):
        m = self.K.m
        for I2 in self._multidegrees(W):
            for j in range(1, m + 1):
                if I2[j - 1] < 2:
                    continue
                I = list(I2)
                I[j - 1] -= 1
                I = tuple(I)
                h = self.homology(I, k)
                if not len(h):
                    continue
                tens = self._tensors(I2, W)
                if not tens:
                    continue
                A = self.inputs[j - 1]
                for kk in range(1, I[j - 1] + 1):
                    cols = self.mu_columns(I, k, j, kk)
                    for x2 in tens:
                        a, b = x2[j - 1][kk - 1], x2[j - 1][kk]
                        prod = A.multiply(a, b)
                        s = self._relation_sign(k, x2, j, kk)
                        for c in range(len(h)):
                            vec: dict = {}
                            for c2, coef in enumerate(cols[c]):
                                if coef:
                                    _acc(vec, index[(I2, c2, x2)], coef, self.p)
                            for z, coef in prod.items():
                                xs = list(x2)
                                xs[j - 1] = x2[j - 1][:kk - 1] + (z,) + x2[j - 1][kk + 1:]
                                _acc(vec, index[(I, c, tuple(xs))], -s * coef, self.p)
                            yield _integral(vec, self.p)

    def _relation_sign(self, k, x2, j, kk) -> int:
        if self.sign == "plus":
            return 1
        if self.sign == "koszul":
            # move y past the factors in front of the merged pair
            before = sum(self.inputs[c].degrees[b] for c in range(j - 1) for b in x2[c])
            before += sum(self.inputs[j - 1].degrees[b] for b in x2[j - 1][:kk - 1])
            return -1 if (k * before) % 2 else 1
        if self.sign == "minus":
            return -1
        raise ValueError(self.sign)

    def blocks(self):
        m = self.K.m
        for total in range(self.cutoff + 1):
            for k in range(total + 1):
                for W in _compositions(total - k, m):
                    yield k, W

    def dims(self) -> dict[int, int]:
        out = {d: 0 for d in range(self.cutoff + 1)}
        for k, W in self.blocks():
            elements, _, eb = self.block(k, W)
            out[k + sum(W)] += len(elements) - eb.rank
        return out

    def check_all_ones_injective(self) -> bool:
        """No nonzero combination of elements with I = (1, ..., 1) lies in the relation span."""
        ones = (1,) * self.K.m
        for k, W in self.blocks():
            elements, index, eb = self.block(k, W)
            sel = [i for i, e in enumerate(elements) if e[0] == ones]
            if not sel:
                continue
            trial = EchelonBasis(self.p)
            trial.rows = dict(eb.rows)
            for i in sel:
                if not trial.add({i: 1}):
                    return False
        return True

    # elements and products
    def element(self, I, k, coords, x) -> tuple:
        """A homogeneous element as ``(k, W, vector)``."""
        W = tuple(sum(self.inputs[j].degrees[b] for b in x[j]) for j in range(self.K.m))
        _, index, _ = self.block(k, W)
        vec = {}
        for c, v in enumerate(coords):
            if v:
                _acc(vec, index[(tuple(I), c, tuple(tuple(t) for t in x))], v, self.p)
        return k, W, vec

    def reduce(self, elem) -> dict:
        k, W, vec = elem
        _, _, eb = self.block(k, W)
        vec = _integral(vec, self.p)
        r, _, _ = eb.reduce(vec)
        return r

    def is_zero(self, elem) -> bool:
        return not self.reduce(elem)

    def class_product(self, e1, e2):
        """Product of two elements: concatenate chains, interleave tensor factors per colour."""
        k1, W1, v1 = e1
        k2, W2, v2 = e2
        els1 = self.block(k1, W1)[0]
        els2 = self.block(k2, W2)[0]
        k, W = k1 + k2, tuple(a + b for a, b in zip(W1, W2))
        if k + sum(W) > self.cutoff:
            raise ValueError("product exceeds the cutoff")
        _, index, _ = self.block(k, W)
        out: dict = {}
        for i1, c1 in v1.items():
            I1, a1, x1 = els1[i1]
            y1 = self.homology(I1, k1).representatives[a1]
            for i2, c2 in v2.items():
                I2, a2, x2 = els2[i2]
                y2 = self.homology(I2, k2).representatives[a2]
                I = tuple(a + b for a, b in zip(I1, I2))
                coords = self.homology(I, k).coordinates(concat_product(y1, y2))
                x, s = self._interleave(x1, x2)
                s *= -1 if (self._tensor_degree(x1) * k2) % 2 else 1
                for c, v in enumerate(coords):
                    if v:
                        _acc(out, index[(I, c, x)], s * c1 * c2 * v, self.p)
        return k, W, {i: v for i, v in out.items() if v}

    def _tensor_degree(self, x) -> int:
        return sum(self.inputs[j].degrees[b] for j in range(self.K.m) for b in x[j])

    def _interleave(self, x1, x2):
        """Reorder (x1 colours..., x2 colours...) into colourwise concatenation with its Koszul sign."""
        m = self.K.m
        sign = 0
        for j in range(m):
            dj = sum(self.inputs[j].degrees[b] for b in x2[j])
            later = sum(self.inputs[c].degrees[b] for c in range(j + 1, m) for b in x1[c])
            sign += dj * later
        x = tuple(tuple(x1[j]) + tuple(x2[j]) for j in range(m))
        return x, (-1 if sign % 2 else 1)

    def generator(self, j: int, b: int = 0):
        """The element x_j (x) a_b in multidegree e_j."""
        I = [0] * self.K.m
        I[j - 1] = 1
        x = [()] * self.K.m
        x[j - 1] = (b,)
        return self.element(I, 0, [1], x)


def _acc(vec, i, c, p):
    v = vec.get(i, 0) + c
    if p:
        v %= p
    if v:
        vec[i] = v
    else:
        vec.pop(i, None)


def _integral(vec, p):
    if p:
        return {i: int(v) % p for i, v in vec.items() if int(v) % p}
    den = 1
    for v in vec.values():
        d = Fraction(v).denominator
        den = den * d // _gcd(den, d)
    return {i: int(Fraction(v) * den) for i, v in vec.items() if v}


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for a in range(total + 1):
        for rest in _compositions(total - a, parts - 1):
            yield (a,) + rest


def loop_homology_dims(K: SimplicialComplex, inputs, characteristic: int = 0, cutoff: int = 6,
                       sign: str = "plus") -> dict[int, int]:
    """Graded dimensions of the loop homology of the polyhedral product through ``cutoff``."""
    return LoopAssembly(K, inputs, characteristic, cutoff, sign).dims()


def sphere_oracle_dims(K: SimplicialComplex, sphere_degrees, characteristic: int = 0,
                       cutoff: int = 6) -> dict[int, int]:
    """Cobar homology of the exterior face coalgebra with generator degrees ``sphere_degrees``.

    ``sphere_degrees[j]`` is the dimension of the j-th sphere (at least 2).
    """
    degs = list(sphere_degrees)
    if len(degs) != K.m or any(d < 2 for d in degs):
        raise ValueError("need one sphere dimension >= 2 per vertex")
    C = exterior_sr_coalgebra(K, degs)
    out = {d: 0 for d in range(cutoff + 1)}
    lowest = min(degs) - 1
    for I in multidegrees(K.m, cutoff // lowest):
        if sum((d - 1) * a for d, a in zip(degs, I)) > cutoff:
            continue
        cx = cobar_complex(C, I, max_degree=cutoff)
        for k, d in field_homology(cx, characteristic).items():
            if k <= cutoff:
                out[k] += d
    return out
