"""Independent reference implementations used to cross-check the library.

Nothing here imports the sign or multiplication code under test: blades are
plain generator tuples and signs come from bubble-sorting the concatenated
word.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

import sympy

from supersmooth.supernumber import Supernumber


def sort_word(word):
    """Bubble-sort a generator word; return (sign, sorted tuple) or None if a generator repeats."""
    if len(set(word)) != len(word):
        return None
    w = list(word)
    swaps = 0
    for i in range(len(w)):
        for j in range(len(w) - 1 - i):
            if w[j] > w[j + 1]:
                w[j], w[j + 1] = w[j + 1], w[j]
                swaps += 1
    return (-1) ** swaps, tuple(w)


def to_dense(X: Supernumber, L: int) -> dict:
    """All 2^L blades (including zeros) keyed by generator tuple."""
    dense = {}
    for r in range(L + 1):
        for bits in product((0, 1), repeat=L):
            if sum(bits) == r:
                dense[tuple(i + 1 for i, b in enumerate(bits) if b)] = Fraction(0)
    for I, v in X.items():
        dense[I.gens] = Fraction(v)
    return dense


def dense_mul(x: dict, y: dict, D: int) -> dict:
    out = {k: Fraction(0) for k in x}
    for J, a in x.items():
        if not a:
            continue
        for K, b in y.items():
            if not b:
                continue
            res = sort_word(J + K)
            if res is None or len(res[1]) > D:
                continue
            sign, I = res
            out[I] += sign * a * b
    return out


def from_dense(d: dict, L: int, D: int) -> Supernumber:
    return Supernumber({k: v for k, v in d.items() if v}, L, D)


def oracle_product(X: Supernumber, Y: Supernumber) -> Supernumber:
    L, D = max(X.L, Y.L), min(X.D, Y.D)
    return from_dense(dense_mul(to_dense(X, L), to_dense(Y, L), D), L, D)


def oracle_poly_eval(poly_terms: dict, xs: list[Supernumber], L: int, D: int) -> Supernumber:
    """Evaluate a polynomial directly in the algebra with the dense multiplier."""
    total = {k: Fraction(0) for k in to_dense(Supernumber.zero(L, D), L)}
    dense_x = [to_dense(x, L) for x in xs]
    for exps, c in poly_terms.items():
        term = to_dense(Supernumber.scalar(1, L, D), L)
        for dx, e in zip(dense_x, exps):
            for _ in range(e):
                term = dense_mul(term, dx, D)
        for k, v in term.items():
            total[k] += Fraction(c) * v
    return from_dense(total, L, D)


def sympy_annihilator_dim(m: int, n: int, L: int) -> int:
    """Nullity of the pairing map X -> (<E_c|X>)_c over all basis directions, via sympy."""
    coords = []
    for A in range(1, m + n + 1):
        parity = 0 if A <= m else 1
        for bits in product((0, 1), repeat=L):
            if sum(bits) % 2 == parity:
                coords.append((A, tuple(i + 1 for i, b in enumerate(bits) if b)))
    rows = []
    for A, J in coords:
        by_blade: dict = {}
        for col, (B, I) in enumerate(coords):
            if A != B:
                continue
            res = sort_word(J + I)
            if res is None:
                continue
            by_blade.setdefault(res[1], {})[col] = res[0]
        for entries in by_blade.values():
            rows.append([entries.get(c, 0) for c in range(len(coords))])
    if not rows:
        return len(coords)
    M = sympy.Matrix(rows)
    return len(coords) - M.rank()
