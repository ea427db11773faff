"""Seeded random generators for supernumbers, points, polynomials and superfields.

Every generator takes an explicit :class:`random.Random` so that runs are
reproducible from a single seed.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .gindex import all_masks
from .smoothfn import PolyMap
from .superfield import Superfield, odd_multis
from .supernumber import Supernumber
from .superspace import SuperPoint


def make_rng(seed: int | None) -> random.Random:
    return random.Random(seed)


def random_scalar(rng: random.Random, exact: bool = True, span: int = 5, nonzero: bool = False):
    while True:
        v = Fraction(rng.randint(-span, span), rng.randint(1, 4))
        if v or not nonzero:
            break
    if exact:
        return v.numerator if v.denominator == 1 else v
    return float(v)


def random_supernumber(rng: random.Random, L: int, D: int | None = None, n_terms: int | None = None,
                       parity: int | None = None, exact: bool = True, with_body: bool = True,
                       masks: list[int] | None = None) -> Supernumber:
    """Random sparse supernumber; ``n_terms`` defaults to a dense fill of up to 6 terms."""
    D = L if D is None else D
    pool = masks if masks is not None else all_masks(L, D, parity)
    if not with_body:
        pool = [k for k in pool if k]
    if not pool:
        return Supernumber.zero(L, D, exact)
    k = min(len(pool), rng.randint(0, 6) if n_terms is None else n_terms)
    chosen = rng.sample(pool, k)
    return Supernumber.from_masks({mask: random_scalar(rng, exact) for mask in chosen}, L, D, exact=exact)


def random_even(rng: random.Random, L: int, D: int | None = None, soul_terms: int = 2,
                exact: bool = True) -> Supernumber:
    """Even supernumber with a nonzero real body and a few soul terms."""
    D = L if D is None else D
    body = random_scalar(rng, exact, nonzero=True)
    soul = random_supernumber(rng, L, D, soul_terms, parity=0, exact=exact, with_body=False)
    return soul + Supernumber.from_masks({0: body}, L, D, exact=exact)


def random_odd(rng: random.Random, L: int, D: int | None = None, terms: int = 2,
               exact: bool = True) -> Supernumber:
    return random_supernumber(rng, L, D, terms, parity=1, exact=exact)


def random_point(rng: random.Random, m: int, n: int, L: int, D: int | None = None,
                 soul_terms: int = 2, exact: bool = True) -> SuperPoint:
    D = L if D is None else D
    even = [random_even(rng, L, D, soul_terms, exact) for _ in range(m)]
    odd = [random_odd(rng, L, D, soul_terms, exact) for _ in range(n)]
    return SuperPoint(even, odd, L, D)


def random_polymap(rng: random.Random, m: int, max_degree: int, n_terms: int = 3) -> PolyMap:
    terms = {}
    for _ in range(n_terms):
        deg = rng.randint(0, max_degree)
        exps = [0] * m
        for _ in range(deg if m else 0):
            exps[rng.randrange(m)] += 1
        terms[tuple(exps)] = random_scalar(rng, nonzero=True)
    return PolyMap(terms, m)


def random_superfield(rng: random.Random, m: int, n: int, max_degree: int = 3,
                      density: float = 0.6, n_terms: int = 3) -> Superfield:
    """Random polynomial superfield with scalar coefficients (at least one nonzero)."""
    coeffs = {}
    multis = odd_multis(n)
    for a in multis:
        if rng.random() < density:
            coeffs[a] = random_polymap(rng, m, max_degree, n_terms)
    if not any(not f.is_zero() for f in coeffs.values()):
        coeffs[rng.choice(multis)] = random_polymap(rng, m, max_degree, n_terms) + 1
    return Superfield(coeffs, m, n)
