"""Truncated power series with exact rational coefficients."""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Sequence

from .simplicial import SimplicialComplex, vertices_of


class TruncatedSeries:
    """c_0 + c_1 t + ... + c_D t^D, exact through order D."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence, order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            cs = (cs + [Fraction(0)] * (order + 1))[:order + 1]
        if not cs:
            raise ValueError("series needs at least one coefficient")
        self.coeffs = cs

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1], order)

    @classmethod
    def monomial(cls, degree: int, order: int, coeff=1) -> "TruncatedSeries":
        cs = [0] * (order + 1)
        if degree <= order:
            cs[degree] = coeff
        return cls(cs)

    def _lift(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            if other.order != self.order:
                raise ValueError("series orders differ")
            return other
        return TruncatedSeries([other], self.order)

    def __add__(self, other):
        o = self._lift(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        D = self.order
        out = [Fraction(0)] * (D + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(D + 1 - i):
                    out[i + j] += a * o.coeffs[j]
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = TruncatedSeries.one(self.order)
        for _ in range(n):
            out = out * self
        return out

    def inverse(self) -> "TruncatedSeries":
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        D = self.order
        inv = [Fraction(0)] * (D + 1)
        inv[0] = 1 / c0
        for n in range(1, D + 1):
            s = sum(self.coeffs[i] * inv[n - i] for i in range(1, n + 1))
            inv[n] = -s / c0
        return TruncatedSeries(inv)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self):
        return f"TruncatedSeries({self.as_list()})"

    def as_list(self) -> list:
        return [int(c) if c.denominator == 1 else str(c) for c in self.coeffs]


def series_of_dims(dims: dict, order: int | None = None) -> TruncatedSeries:
    """Poincare series of graded dimensions ``{degree: dim}``."""
    D = max(dims) if order is None else order
    return TruncatedSeries([dims.get(d, 0) for d in range(D + 1)])


def inverse_of_dims(dims: dict, order: int | None = None) -> TruncatedSeries:
    return series_of_dims(dims, order).inverse()


def poly_series(n: int, order: int) -> TruncatedSeries:
    """1 / (1 - t^n)."""
    return TruncatedSeries([1 if d % n == 0 else 0 for d in range(order + 1)])


def exterior_series(n: int, order: int) -> TruncatedSeries:
    """1 + t^n."""
    return TruncatedSeries.one(order) + TruncatedSeries.monomial(n, order)


def _face_sum(faces, minus_ones, order):
    total = TruncatedSeries([0], order)
    for f in faces:
        term = TruncatedSeries.one(order)
        for v in vertices_of(f):
            term = term * minus_ones[v - 1]
        total = total + term
    return total


def flag_loop_series(K: SimplicialComplex, vertex_series: Sequence[TruncatedSeries], order: int) -> TruncatedSeries:
    """Inverse Poincare series of the loop space: sum over faces of prod (P_j^{-1} - 1)."""
    if not K.is_flag():
        raise ValueError("complex is not flag")
    if len(vertex_series) != K.m:
        raise ValueError("need one series per vertex")
    minus = []
    for P in vertex_series:
        P = TruncatedSeries(P.coeffs, order)
        if P.coeffs[0] != 1:
            raise ValueError("vertex series must start with 1")
        minus.append(P.inverse() - 1)
    return _face_sum(sorted(K.faces), minus, order)


def fatwedge_loop_series(m: int, s: int, vertex_series: Sequence[TruncatedSeries], order: int,
                         index_set: str = "all") -> TruncatedSeries:
    """prod P_i^{-1} + (-t)^{s-1} * sum over sigma with |sigma| >= s - 1 of prod (P_i^{-1} - 1).

    ``index_set`` selects whether sigma runs over all subsets of [m]
    ("all") or only over faces of the (s-2)-skeleton ("skeleton").
    """
    if m < 3 or s < 1:
        raise ValueError("need m >= 3 and s >= 1")
    if len(vertex_series) != m:
        raise ValueError("need one series per vertex")
    invs = [TruncatedSeries(P.coeffs, order).inverse() for P in vertex_series]
    prod = TruncatedSeries.one(order)
    for q in invs:
        prod = prod * q
    minus = [q - 1 for q in invs]
    if index_set == "all":
        sizes = range(max(s - 1, 0), m + 1)
    elif index_set == "skeleton":
        sizes = [s - 1] if s - 1 <= m else []
    else:
        raise ValueError(index_set)
    faces = []
    for size in sizes:
        for c in itertools.combinations(range(m), size):
            faces.append(sum(1 << v for v in c))
    corr = _face_sum(faces, minus, order)
    sign_t = TruncatedSeries.monomial(s - 1, order, (-1) ** (s - 1))
    return prod + sign_t * corr


def fatwedge_discrepancy(n: int, order: int, truth: dict | None = None):
    """Compare the fat-wedge formula at (m, s) = (3, 3) with the computed answer.

    The vertex spaces are (n+1)-spheres, so each P^{-1} is 1 - t^n.  The
    reference is ``truth`` (loop homology dims of the boundary of the
    2-simplex) when supplied, else the free product of k[u_1, u_2, u_3]
    and k[w] with deg w = 3n + 1.  Returns rows
    ``(index_set, formula coefficients, reference coefficients, equal)``.
    """
    P = [poly_series(n, order)] * 3
    if truth is not None:
        ref = series_of_dims(truth, order).inverse()
    else:
        a = TruncatedSeries.monomial(n, order)
        ref = (1 - a) ** 3 - TruncatedSeries.monomial(3 * n + 1, order)
    rows = []
    for index_set in ("all", "skeleton"):
        f = fatwedge_loop_series(3, 3, P, order, index_set)
        rows.append((index_set, f.as_list(), ref.as_list(), f == ref))
    return rows
