"""Points of the skeleton superspace ``R_L^{m|n}`` and their real coordinates."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from . import scalars
from .gindex import DomainError, GIndex, all_masks, as_gindex, gens_of
from .supernumber import Parity, Supernumber, top_blade_mask


@dataclass(frozen=True)
class CoordIndex:
    """Real coordinate ``X_{A,I}``; slots ``1..m`` are even, ``m+1..m+n`` odd."""

    A: int
    I: GIndex

    def __post_init__(self):
        object.__setattr__(self, "I", as_gindex(self.I))

    def check(self, m: int, n: int) -> None:
        if not 1 <= self.A <= m + n:
            raise DomainError(f"slot {self.A} outside 1..{m + n}")
        want = 0 if self.A <= m else 1
        if self.I.parity != want:
            kind = "even" if want == 0 else "odd"
            raise DomainError(f"slot {self.A} is {kind}; index {list(self.I.gens)} has the wrong parity")

    def __str__(self):
        return f"X[{self.A},{list(self.I.gens)}]"


def _as_slot(s, L: int, D: int) -> Supernumber:
    if isinstance(s, Supernumber):
        return s.with_context(L, D)
    return Supernumber.scalar(s, L, D)


class SuperPoint:
    """A point ``X = (x, θ)`` with ``m`` even and ``n`` odd supernumber slots."""

    __slots__ = ("even", "odd", "L", "D")

    def __init__(self, even: Sequence[Supernumber], odd: Sequence[Supernumber] = (),
                 L: int | None = None, D: int | None = None, check: bool = True):
        even, odd = tuple(even), tuple(odd)
        slots = tuple(s for s in even + odd if isinstance(s, Supernumber))
        if L is None:
            L = max((s.L for s in slots), default=0)
        if D is None:
            D = min((s.D for s in slots), default=L)
        self.L, self.D = L, D
        self.even = tuple(_as_slot(s, L, D) for s in even)
        self.odd = tuple(_as_slot(s, L, D) for s in odd)
        if check:
            for j, x in enumerate(self.even, 1):
                if x.parity_of() is not Parity.EVEN:
                    raise DomainError(f"even slot x_{j} is not even: {x!r}")
                if not x.reality_check():
                    raise DomainError(f"even slot x_{j} has a non-real body")
            for k, t in enumerate(self.odd, 1):
                if not t.even.is_zero():
                    raise DomainError(f"odd slot θ_{k} is not odd: {t!r}")

    @property
    def m(self) -> int:
        return len(self.even)

    @property
    def n(self) -> int:
        return len(self.odd)

    @property
    def slots(self) -> tuple[Supernumber, ...]:
        return self.even + self.odd

    @property
    def exact(self) -> bool:
        return all(s.exact for s in self.slots if len(s))

    @classmethod
    def zero(cls, m: int, n: int, L: int, D: int | None = None, exact: bool = True) -> "SuperPoint":
        z = Supernumber.zero(L, D, exact)
        return cls([z] * m, [z] * n, L, D)

    def body(self) -> tuple:
        """Real body ``π_B(x)`` of the even slots."""
        return tuple(scalars.real_part(x.body) for x in self.even)

    def _map(self, fn) -> "SuperPoint":
        return SuperPoint([fn(x) for x in self.even], [fn(t) for t in self.odd], self.L, self.D, check=False)

    def with_context(self, L: int, D: int | None = None) -> "SuperPoint":
        D = min(L, self.D if D is None else D)
        return SuperPoint([x.with_context(L, D) for x in self.even],
                          [t.with_context(L, D) for t in self.odd], L, D, check=False)

    def skeleton_project(self, L2: int) -> "SuperPoint":
        return self.with_context(L2, min(self.D, L2))

    def to_float(self) -> "SuperPoint":
        return self._map(lambda s: s.to_float())

    def __add__(self, other: "SuperPoint") -> "SuperPoint":
        self._same_shape(other)
        L, D = max(self.L, other.L), min(self.D, other.D)
        return SuperPoint([a + b for a, b in zip(self.even, other.even)],
                          [a + b for a, b in zip(self.odd, other.odd)], L, D, check=False)

    def __sub__(self, other: "SuperPoint") -> "SuperPoint":
        return self + other.scale(-1)

    def scale(self, lam) -> "SuperPoint":
        """Left multiplication of every slot by a real scalar or even supernumber."""
        return self._map(lambda s: lam * s)

    def _same_shape(self, other: "SuperPoint"):
        if (self.m, self.n) != (other.m, other.n):
            raise DomainError(f"shape mismatch {self.m}|{self.n} vs {other.m}|{other.n}")

    def __eq__(self, other):
        if not isinstance(other, SuperPoint):
            return NotImplemented
        return (self.m, self.n) == (other.m, other.n) and all(
            a == b for a, b in zip(self.slots, other.slots))

    __hash__ = None

    def __repr__(self):
        return f"SuperPoint(even={list(self.even)}, odd={list(self.odd)}, L={self.L}, D={self.D})"


def point(even: Iterable, odd: Iterable = (), L: int = 0, D: int | None = None) -> SuperPoint:
    """Convenience constructor accepting scalars for even slots."""
    ev = [x if isinstance(x, Supernumber) else Supernumber.scalar(x, L, D) for x in even]
    return SuperPoint(ev, list(odd), L, D)


def coordinates(m: int, n: int, L: int, D: int | None = None, cap: int | None = None) -> list[CoordIndex]:
    """All coordinate indices ``(A, I)`` of the skeleton, in slot-then-rank order."""
    D = L if D is None else D
    out = []
    for A in range(1, m + n + 1):
        parity = 0 if A <= m else 1
        masks = all_masks(L, D, parity)
        if cap is not None:
            masks = masks[:cap]
        out.extend(CoordIndex(A, GIndex.from_mask(mask)) for mask in masks)
    return out


def basis_direction(c: CoordIndex, m: int, n: int, L: int, D: int | None = None) -> SuperPoint:
    """``E_{A,I} = σ^I e_A``."""
    c = c if isinstance(c, CoordIndex) else CoordIndex(*c)
    c.check(m, n)
    D = L if D is None else D
    if c.I.mask >> L or c.I.degree > D:
        raise DomainError(f"index {list(c.I.gens)} is outside skeleton L={L}, D={D}")
    z = Supernumber.zero(L, D)
    blade = Supernumber({c.I: 1}, L, D)
    slots = [blade if A == c.A else z for A in range(1, m + n + 1)]
    return SuperPoint(slots[:m], slots[m:], L, D)


def coord_get(X: SuperPoint, c: CoordIndex):
    c = c if isinstance(c, CoordIndex) else CoordIndex(*c)
    c.check(X.m, X.n)
    return X.slots[c.A - 1].proj_coeff(c.I)


def coord_set(X: SuperPoint, c: CoordIndex, value) -> SuperPoint:
    """Return a copy of ``X`` with coordinate ``X_{A,I}`` replaced.

    Body coordinates of even slots must be real; soul coordinates may be complex.
    """
    c = c if isinstance(c, CoordIndex) else CoordIndex(*c)
    c.check(X.m, X.n)
    if c.I.degree == 0 and scalars.imag_part(value) != 0:
        raise DomainError("body coordinates of even slots are real")
    slot = X.slots[c.A - 1]
    new = slot + Supernumber({c.I: value - slot.proj_coeff(c.I)}, X.L, X.D)
    slots = list(X.slots)
    slots[c.A - 1] = new
    return SuperPoint(slots[:X.m], slots[X.m:], X.L, X.D)


def pairing(Y: SuperPoint, X: SuperPoint) -> Supernumber:
    """``⟨Y|X⟩ = Σ y_j x_j + Σ ω_k θ_k``."""
    X._same_shape(Y)
    L, D = max(X.L, Y.L), min(X.D, Y.D)
    total = Supernumber.zero(L, D)
    for a, b in zip(Y.slots, X.slots):
        total = total + a * b
    return total


def dist_mn(X: SuperPoint, Y: SuperPoint | None = None):
    """Sum of per-slot metric distances of ``X - Y``."""
    Z = X if Y is None else X - Y
    total = 0
    for s in Z.slots:
        total = total + s.dist()
    return total


def annihilator_solve(m: int, n: int, L: int, D: int | None = None) -> list[SuperPoint]:
    """Basis of ``{X : ⟨Y|X⟩ = 0 for all Y}`` computed by exact row reduction.

    The pairing is real-bilinear in the coordinates ``X_{A,I}``, so it suffices to
    test against every basis direction ``E_{B,J}``.
    """
    D = L if D is None else D
    coords = coordinates(m, n, L, D)
    col_of = {(c.A, c.I.mask): idx for idx, c in enumerate(coords)}
    rows: list[dict[int, Fraction]] = []
    for cy in coords:
        Ey = basis_direction(cy, m, n, L, D)
        # output blade K -> row
        by_blade: dict[int, dict[int, Fraction]] = {}
        for cx in coords:
            if cx.A != cy.A:
                continue
            prod = Ey.slots[cy.A - 1] * Supernumber({cx.I: 1}, L, D)
            for K, v in prod.mask_items():
                by_blade.setdefault(K, {})[col_of[(cx.A, cx.I.mask)]] = Fraction(v)
        rows.extend(by_blade.values())
    null = _nullspace(rows, len(coords))
    basis = []
    for vec in null:
        pt = SuperPoint.zero(m, n, L, D)
        for idx, v in enumerate(vec):
            if v:
                pt = coord_set(pt, coords[idx], scalars.normalize(v))
        basis.append(pt)
    return basis


def _nullspace(rows: list[dict[int, Fraction]], ncols: int) -> list[list[Fraction]]:
    """Exact nullspace basis of a sparse rational matrix (reduced row echelon form)."""
    pivots: dict[int, dict[int, Fraction]] = {}
    for row in rows:
        row = {k: v for k, v in row.items() if v}
        # eliminate existing pivots
        for p, prow in pivots.items():
            if p in row:
                f = row[p]
                for k, v in prow.items():
                    row[k] = row.get(k, 0) - f * v
                row = {k: v for k, v in row.items() if v}
        if not row:
            continue
        p = min(row)
        inv = 1 / row[p]
        row = {k: v * inv for k, v in row.items()}
        for q, qrow in pivots.items():
            if p in qrow:
                f = qrow[p]
                for k, v in row.items():
                    qrow[k] = qrow.get(k, 0) - f * v
                pivots[q] = {k: v for k, v in qrow.items() if v}
        pivots[p] = row
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for p, prow in pivots.items():
            vec[p] = -prow.get(f, Fraction(0))
        basis.append(vec)
    return basis


def top_blade_odd_span(L: int) -> int:
    """Dimension of ``span{σ_1⋯σ_L}`` inside the odd part (1 iff L is odd)."""
    return 1 if L % 2 == 1 else 0


class Superdomain:
    """``π_B^{-1}(U) × R_od^n`` for a finite union ``U`` of open boxes in ``R^m``."""

    def __init__(self, boxes: Sequence[Sequence[tuple[float, float]]], n: int = 0):
        boxes = [tuple((lo, hi) for lo, hi in box) for box in boxes]
        if not boxes:
            raise ValueError("a superdomain needs at least one box")
        m = len(boxes[0])
        if any(len(b) != m for b in boxes):
            raise ValueError("all boxes must have the same dimension")
        for b in boxes:
            for lo, hi in b:
                if not lo < hi:
                    raise ValueError(f"empty interval ({lo}, {hi})")
        self.boxes = boxes
        self.m = m
        self.n = n

    @classmethod
    def whole(cls, m: int, n: int = 0) -> "Superdomain":
        inf = float("inf")
        return cls([[(-inf, inf)] * m], n)

    def contains_body(self, q: Sequence) -> bool:
        return any(all(lo < v < hi for v, (lo, hi) in zip(q, box)) for box in self.boxes)

    def contains(self, X: SuperPoint) -> bool:
        if X.m != self.m:
            return False
        return self.contains_body(X.body())

    __contains__ = contains

    def __repr__(self):
        return f"Superdomain(boxes={self.boxes}, n={self.n})"


def top_blade(L: int) -> Supernumber:
    return Supernumber.from_masks({top_blade_mask(L): 1}, L)


def blade_text(mask: int) -> str:
    return "".join(f"σ{g}" for g in gens_of(mask)) or "1"
