"""Fresh generators above a skeleton, used to read off derivatives exactly.

With ``ε = σ_{L+1} σ_{L+2}`` we have ``ε² = 0`` and ``ε`` commutes with
everything, so ``g(X + εY) = g(X) + ε · dg(X; Y)`` for any polynomial-type
``g``.  The directional derivative is the coefficient block of blades that
contain both fresh generators.
"""

from __future__ import annotations

from .supernumber import Supernumber


def eps(L: int, D: int) -> Supernumber:
    """``σ_{L+1} σ_{L+2}`` living in skeleton ``L + 2`` with cutoff ``D + 2``."""
    return Supernumber.from_masks({0b11 << L: 1}, L + 2, D + 2)


def eps_coefficient(Z: Supernumber, L: int, D: int) -> Supernumber:
    """Coefficient of ``ε`` in ``Z``, projected back to skeleton ``L`` and cutoff ``D``.

    ``σ^K ε`` is already in ascending order for ``K ⊆ {1..L}``, so no sign is
    needed.
    """
    pair = 0b11 << L
    low = (1 << L) - 1
    terms = {}
    for mask, v in Z.mask_items():
        if mask & pair == pair and not mask & ~(pair | low):
            K = mask & low
            if K.bit_count() <= D:
                terms[K] = v
    return Supernumber._raw(terms, L, D, Z.exact, Z.tol)
