"""Grassmann basis monomials, rank encoding and product signs.

A :class:`GIndex` names a monomial ``σ^I = σ_{i1} σ_{i2} ... σ_{ik}`` with
``i1 < i2 < ... < ik``.  Internally the support is an integer bitmask where
bit ``k - 1`` marks generator ``σ_k``; the empty mask is the unit monomial.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

MAX_GENERATOR = 64

# Exact metric weights need 2**(1 + mask) which is infeasible for large masks.
MAX_METRIC_GENERATOR = 24


class DomainError(ValueError):
    """Raised when an index operation is applied outside its domain."""


def gens_of(mask: int) -> tuple[int, ...]:
    """Ascending generator positions of a bitmask."""
    out = []
    k = 1
    while mask:
        if mask & 1:
            out.append(k)
        mask >>= 1
        k += 1
    return tuple(out)


def mask_of(gens: Iterable[int]) -> int:
    mask = 0
    for g in gens:
        if not isinstance(g, int) or g < 1:
            raise DomainError(f"generator positions must be positive integers, got {g!r}")
        if g > MAX_GENERATOR:
            raise DomainError(f"generator {g} exceeds library bound {MAX_GENERATOR}")
        bit = 1 << (g - 1)
        if mask & bit:
            raise DomainError(f"duplicate generator {g}")
        mask |= bit
    return mask


@lru_cache(maxsize=1 << 16)
def merge_sign_mask(j: int, k: int) -> int:
    """Sign of ``σ^J σ^K`` relative to ``σ^{J∪K}`` for disjoint masks.

    Counts pairs ``(a in J, b in K)`` with ``a > b``; these are the
    transpositions needed to sort the concatenated word ``J‖K``.
    """
    inversions = 0
    while k:
        low = k & -k
        # bits of j strictly above the lowest remaining bit of k
        inversions += (j & ~((low << 1) - 1)).bit_count()
        k ^= low
    return -1 if inversions & 1 else 1


class GIndex:
    """Finite subset of generator positions identifying a basis monomial."""

    __slots__ = ("mask", "degree")

    def __init__(self, gens: Iterable[int] = ()):
        gens = list(gens)
        if any(b <= a for a, b in zip(gens, gens[1:])):
            raise DomainError(f"generator list must be strictly increasing: {gens}")
        self.mask = mask_of(gens)
        self.degree = len(gens)

    @classmethod
    def from_mask(cls, mask: int) -> "GIndex":
        if mask < 0 or mask >> MAX_GENERATOR:
            raise DomainError(f"mask {mask} outside the {MAX_GENERATOR}-generator bound")
        obj = cls.__new__(cls)
        obj.mask = mask
        obj.degree = mask.bit_count()
        return obj

    @property
    def gens(self) -> tuple[int, ...]:
        return gens_of(self.mask)

    @property
    def parity(self) -> int:
        return self.degree & 1

    def __iter__(self) -> Iterator[int]:
        return iter(self.gens)

    def __len__(self) -> int:
        return self.degree

    def __contains__(self, g: int) -> bool:
        return g >= 1 and bool(self.mask >> (g - 1) & 1)

    def __eq__(self, other) -> bool:
        if isinstance(other, GIndex):
            return self.mask == other.mask
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.mask)

    def __lt__(self, other: "GIndex") -> bool:
        return self.gens < other.gens

    def __repr__(self) -> str:
        return f"GIndex({list(self.gens)})"

    def __str__(self) -> str:
        return to_text(self)


def as_gindex(obj) -> GIndex:
    """Coerce a GIndex, a generator sequence, or an int (single generator)."""
    if isinstance(obj, GIndex):
        return obj
    if isinstance(obj, int):
        return GIndex((obj,))
    return GIndex(sorted(obj)) if _is_set_like(obj) else GIndex(obj)


def _is_set_like(obj) -> bool:
    return isinstance(obj, (set, frozenset))


EMPTY = GIndex()


def encode_rank(mu) -> int:
    """Rank ``r(μ) = (2^{μ1} + ... + 2^{μk}) / 2`` of a nonempty index."""
    mu = as_gindex(mu)
    if mu.degree == 0:
        raise DomainError("the empty index has no rank")
    # (1/2) Σ 2^{μ_i} = Σ 2^{μ_i - 1} is exactly the bitmask
    return mu.mask


def decode_rank(r: int) -> GIndex:
    """Inverse of :func:`encode_rank`."""
    if not isinstance(r, int) or r <= 0:
        raise DomainError(f"rank must be a positive integer, got {r!r}")
    return GIndex(gens_of(r))


def merge_sign(J, K) -> tuple[int, GIndex] | None:
    """Product ``σ^J σ^K = sign · σ^I``; ``None`` when the product vanishes."""
    J, K = as_gindex(J), as_gindex(K)
    if J.mask & K.mask:
        return None
    return merge_sign_mask(J.mask, K.mask), GIndex.from_mask(J.mask | K.mask)


def metric_weight(I) -> Fraction:
    """Weight ``2^{-r(I)}`` with ``r(I) = 1 + (1/2) Σ_k 2^k i_k``."""
    I = as_gindex(I)
    if I.mask >> MAX_METRIC_GENERATOR:
        raise OverflowError(
            f"exact metric weight needs generators <= {MAX_METRIC_GENERATOR}, got {I.gens}"
        )
    return Fraction(1, 1 << (1 + I.mask))


def metric_exponent(mask: int) -> int:
    return 1 + mask


def to_text(I) -> str:
    return "[" + ",".join(str(g) for g in as_gindex(I).gens) + "]"


def from_text(text: str) -> GIndex:
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise DomainError(f"index text must be bracketed, got {text!r}")
    body = s[1:-1].strip()
    if not body:
        return EMPTY
    try:
        return GIndex(int(p) for p in body.split(","))
    except ValueError as exc:
        raise DomainError(f"bad index text {text!r}") from exc


def all_masks(L: int, max_degree: int | None = None, parity: int | None = None) -> list[int]:
    """All masks within generators ``1..L`` in rank order, optionally filtered."""
    out = []
    for mask in range(1 << L):
        d = mask.bit_count()
        if max_degree is not None and d > max_degree:
            continue
        if parity is not None and d & 1 != parity:
            continue
        out.append(mask)
    return out


# multi-indices for odd variables (a ∈ {0,1}^n) and even variables (α ∈ N_0^m)

OddMulti = tuple[int, ...]
EvenMulti = tuple[int, ...]


def check_odd_multi(a: Sequence[int], n: int) -> OddMulti:
    a = tuple(int(v) for v in a)
    if len(a) != n or any(v not in (0, 1) for v in a):
        raise DomainError(f"odd multi-index must be a 0/1 vector of length {n}, got {a}")
    return a


def check_even_multi(alpha: Sequence[int], m: int) -> EvenMulti:
    alpha = tuple(int(v) for v in alpha)
    if len(alpha) != m or any(v < 0 for v in alpha):
        raise DomainError(f"even multi-index must be a nonnegative vector of length {m}")
    return alpha


def factorial_multi(alpha: Sequence[int]) -> int:
    out = 1
    for v in alpha:
        for k in range(2, v + 1):
            out *= k
    return out


def multi_indices(m: int, max_total: int) -> list[EvenMulti]:
    """All α ∈ N_0^m with |α| <= max_total, ordered by total degree then lexicographically."""
    out: list[EvenMulti] = []

    def rec(prefix: list[int], remaining: int, slots: int):
        if slots == 0:
            out.append(tuple(prefix))
            return
        for v in range(remaining + 1):
            rec(prefix + [v], remaining - v, slots - 1)

    rec([], max_total, m)
    out.sort(key=lambda a: (sum(a), a))
    return out
