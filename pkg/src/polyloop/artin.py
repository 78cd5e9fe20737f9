"""Right-angled Artin monoid on the 1-skeleton of K.

Generators y_1..y_m; y_i and y_j commute exactly when {i, j} is an edge.
Elements are represented by their lexicographically least word.
"""

from __future__ import annotations

from typing import Sequence

from .simplicial import SimplicialComplex


class BudgetExceeded(RuntimeError):
    pass


def _commute(K: SimplicialComplex, a: int, b: int) -> bool:
    return a != b and K.has_edge(a, b)


def normal_form(K: SimplicialComplex, word: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically least word equivalent to ``word``.

    Repeatedly extracts the smallest letter whose first occurrence commutes
    with everything in front of it.
    """
    w = list(word)
    for a in w:
        if not 1 <= a <= K.m:
            raise ValueError(f"generator {a} out of range 1..{K.m}")
    out = []
    while w:
        best = None
        seen = []
        for i, a in enumerate(w):
            if a not in seen and all(_commute(K, a, b) for b in w[:i]):
                if best is None or a < w[best]:
                    best = i
            seen.append(a)
        out.append(w.pop(best))
    return tuple(out)


def is_normal(K: SimplicialComplex, word: Sequence[int]) -> bool:
    return tuple(word) == normal_form(K, word)


def equivalent(K: SimplicialComplex, u: Sequence[int], v: Sequence[int]) -> bool:
    return normal_form(K, u) == normal_form(K, v)


def _extensions(K, prefix, rem, budget, out):
    if not any(rem):
        out.append(tuple(prefix))
        if budget is not None and len(out) > budget:
            raise BudgetExceeded("too many monoid elements")
        return
    for a in range(1, K.m + 1):
        if rem[a - 1]:
            if not _can_append(K, prefix, a):
                continue
            rem[a - 1] -= 1
            prefix.append(a)
            _extensions(K, prefix, rem, budget, out)
            prefix.pop()
            rem[a - 1] += 1


def _can_append(K, prefix, a):
    """Whether prefix + (a,) stays lexicographically least.

    Appending a breaks minimality iff a could slide left past a strictly
    larger letter b, that is, a commutes with b and with everything after b.
    """
    for i in range(len(prefix) - 1, -1, -1):
        b = prefix[i]
        if not _commute(K, a, b):
            return True
        if b > a:
            return False
    return True


def normal_forms(K: SimplicialComplex, I: Sequence[int], budget: int | None = 10 ** 6) -> list[tuple[int, ...]]:
    """All normal forms with abelianization I, in lexicographic order."""
    if len(I) != K.m:
        raise ValueError("multidegree length mismatch")
    out = []
    _extensions(K, [], list(I), budget, out)
    return out


def count_by_multidegree(K: SimplicialComplex, I: Sequence[int], budget: int | None = 10 ** 6) -> int:
    return len(normal_forms(K, I, budget))


def word_of_letters(word) -> tuple[int, ...]:
    """Letters of a singleton-face word as generator indices."""
    out = []
    for s in word:
        if s & (s - 1):
            raise ValueError("word has a non-singleton letter")
        out.append(s.bit_length())
    return tuple(out)


def letters_to_word(letters: Sequence[int]) -> tuple[int, ...]:
    return tuple(1 << (a - 1) for a in letters)
