"""Sparse supernumbers in a finite skeleton with a degree cutoff.

A :class:`Supernumber` is ``X = Σ_I X_I σ^I`` with every ``I ⊆ {1..L}`` and
``|I| <= D``.  Products are computed in the quotient by the ideal of terms of
degree ``> D``, which is exact for every retained grade.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from . import scalars
from .gindex import (
    MAX_GENERATOR,
    MAX_METRIC_GENERATOR,
    GIndex,
    as_gindex,
    gens_of,
    mask_of,
    merge_sign_mask,
)
from .scalars import DEFAULT_TOL


class Parity(enum.Enum):
    EVEN = 0
    ODD = 1
    UNDEFINED = None

    def __str__(self):
        return self.name.lower()


class CarrierError(TypeError):
    """Raised when exact and float scalar carriers are mixed."""


def _key_to_mask(key) -> int:
    if isinstance(key, int) and not isinstance(key, bool):
        if key != 0:
            raise TypeError("integer keys are ambiguous; pass a generator tuple or use from_masks")
        return 0
    if isinstance(key, GIndex):
        return key.mask
    return mask_of(key)


class Supernumber:
    """Immutable sparse element of the skeleton algebra ``C_L`` truncated at degree ``D``.

    Args:
        terms: mapping from index (GIndex or generator tuple; 0 for the body) to scalar.
        L: skeleton bound (generators ``σ_1..σ_L``).
        D: degree cutoff, defaults to ``L``.
        exact: scalar carrier; inferred from the coefficients when omitted.
        tol: comparison tolerance used by the float carrier.
    """

    __slots__ = ("L", "D", "exact", "tol", "_terms")
    # keep numpy scalars from broadcasting over the blade mapping
    __array_ufunc__ = None

    def __init__(self, terms: Mapping | None = None, L: int = 0, D: int | None = None,
                 exact: bool | None = None, tol: float = DEFAULT_TOL):
        if not 0 <= L <= MAX_GENERATOR:
            raise ValueError(f"skeleton bound must lie in 0..{MAX_GENERATOR}, got {L}")
        D = L if D is None else D
        if not 0 <= D <= L:
            raise ValueError(f"cutoff must satisfy 0 <= D <= L, got D={D}, L={L}")
        clean: dict[int, object] = {}
        inferred = None
        for key, value in (terms or {}).items():
            if not scalars.is_scalar(value):
                raise TypeError(f"coefficient {value!r} is not a scalar")
            mask = _key_to_mask(key)
            if mask >> L:
                raise ValueError(f"index {gens_of(mask)} is outside skeleton L={L}")
            if mask.bit_count() > D:
                raise ValueError(f"index {gens_of(mask)} exceeds cutoff D={D}")
            v_exact = scalars.is_exact(value)
            if inferred is None:
                inferred = v_exact
            elif inferred != v_exact:
                raise CarrierError("mixed exact and float coefficients")
            if value == 0:
                continue
            clean[mask] = scalars.normalize(value) if v_exact else value
        if exact is None:
            exact = True if inferred is None else inferred
        elif inferred is not None and inferred != exact and clean:
            if exact:
                raise CarrierError("float coefficients supplied to an exact supernumber")
            clean = {k: scalars.to_float(v) for k, v in clean.items()}
        self.L = L
        self.D = D
        self.exact = exact
        self.tol = tol
        self._terms = clean

    @classmethod
    def from_masks(cls, terms: Mapping[int, object], L: int, D: int | None = None,
                   exact: bool | None = None, tol: float = DEFAULT_TOL) -> "Supernumber":
        """Build from raw bitmask keys (bit ``k-1`` marks ``σ_k``)."""
        return cls({GIndex.from_mask(k): v for k, v in terms.items()}, L, D, exact, tol)

    @classmethod
    def _raw(cls, terms: dict, L: int, D: int, exact: bool, tol: float) -> "Supernumber":
        obj = cls.__new__(cls)
        obj.L, obj.D, obj.exact, obj.tol = L, D, exact, tol
        obj._terms = terms
        return obj

    # construction helpers

    @classmethod
    def zero(cls, L: int, D: int | None = None, exact: bool = True) -> "Supernumber":
        return cls({}, L, D, exact=exact)

    @classmethod
    def scalar(cls, c, L: int, D: int | None = None) -> "Supernumber":
        return cls({0: c}, L, D)

    @classmethod
    def generator(cls, i: int, L: int, D: int | None = None) -> "Supernumber":
        return cls({(i,): 1}, L, D)

    @classmethod
    def blade(cls, gens: Iterable[int], coef=1, L: int | None = None,
              D: int | None = None) -> "Supernumber":
        gens = tuple(gens)
        L = max(gens, default=0) if L is None else L
        return cls({as_gindex(gens): coef}, L, D)

    # basic access

    def items(self) -> Iterator[tuple[GIndex, object]]:
        for mask in sorted(self._terms):
            yield GIndex.from_mask(mask), self._terms[mask]

    def mask_items(self):
        return self._terms.items()

    @property
    def terms(self) -> dict[GIndex, object]:
        return dict(self.items())

    def __len__(self):
        return len(self._terms)

    def __getitem__(self, key):
        return self.proj_coeff(key)

    def proj_coeff(self, I) -> object:
        """Coefficient ``X_I`` (zero when absent)."""
        return self._terms.get(as_gindex(I).mask, 0 if self.exact else 0.0)

    def is_zero(self) -> bool:
        if self.exact:
            return not self._terms
        return all(abs(v) <= self.tol for v in self._terms.values())

    def __bool__(self):
        return not self.is_zero()

    @property
    def max_degree(self) -> int:
        return max((m.bit_count() for m in self._terms), default=0)

    @property
    def support_bound(self) -> int:
        """Largest generator position used (0 for a pure scalar)."""
        return max((m.bit_length() for m in self._terms), default=0)

    # carrier management

    def _context(self, other: "Supernumber") -> tuple[int, int, bool, float]:
        if self.exact != other.exact and self._terms and other._terms:
            raise CarrierError("cannot combine exact and float supernumbers")
        if self._terms and other._terms:
            exact = self.exact
        elif self._terms:
            exact = self.exact
        elif other._terms:
            exact = other.exact
        else:
            exact = self.exact and other.exact
        tol = max(self.tol, other.tol)
        return max(self.L, other.L), min(self.D, other.D), exact, tol

    def _coerce(self, other) -> "Supernumber | None":
        if isinstance(other, Supernumber):
            return other
        if scalars.is_scalar(other):
            if self.exact and not scalars.is_exact(other) and self._terms:
                raise CarrierError("float scalar combined with exact supernumber")
            if not self.exact and scalars.is_exact(other):
                other = scalars.to_float(other)
            return Supernumber({0: other} if other != 0 else {}, self.L, self.D,
                               exact=scalars.is_exact(other), tol=self.tol)
        return None

    def to_float(self, tol: float | None = None) -> "Supernumber":
        return Supernumber._raw({k: scalars.to_float(v) for k, v in self._terms.items()},
                                self.L, self.D, False, self.tol if tol is None else tol)

    def to_exact(self) -> "Supernumber":
        terms = {k: scalars.to_exact(v) for k, v in self._terms.items()}
        return Supernumber._raw({k: v for k, v in terms.items() if v != 0},
                                self.L, self.D, True, self.tol)

    def chop(self, tol: float | None = None) -> "Supernumber":
        """Drop float coefficients with magnitude at most ``tol``."""
        tol = self.tol if tol is None else tol
        return Supernumber._raw({k: v for k, v in self._terms.items() if abs(v) > tol},
                                self.L, self.D, self.exact, self.tol)

    def with_context(self, L: int | None = None, D: int | None = None) -> "Supernumber":
        """Re-home into skeleton ``L`` with cutoff ``D``, dropping terms that no longer fit."""
        L = self.L if L is None else L
        D = min(L, self.D if D is None else D)
        terms = {k: v for k, v in self._terms.items() if not k >> L and k.bit_count() <= D}
        return Supernumber._raw(terms, L, D, self.exact, self.tol)

    # arithmetic

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        L, D, exact, tol = self._context(o)
        out = {k: v for k, v in self._terms.items() if k.bit_count() <= D}
        for k, v in o._terms.items():
            if k.bit_count() > D:
                continue
            s = out.get(k, 0) + v
            if s == 0:
                out.pop(k, None)
            else:
                out[k] = scalars.normalize(s) if exact else s
        return Supernumber._raw(out, L, D, exact, tol)

    __radd__ = __add__

    def __neg__(self):
        return Supernumber._raw({k: -v for k, v in self._terms.items()},
                                self.L, self.D, self.exact, self.tol)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _multiply(self, o)

    def __rmul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _multiply(o, self)

    def __truediv__(self, other):
        if scalars.is_scalar(other):
            if self.exact and scalars.is_exact(other):
                inv = 1 / (Fraction(other) if isinstance(other, int) else other)
            else:
                inv = 1 / scalars.to_float(other)
            return self * inv
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = Supernumber._raw({0: 1 if self.exact else 1.0}, self.L, self.D, self.exact, self.tol)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_blade(self, mask: int, coef=1, left: bool = True) -> "Supernumber":
        """Fast product with a single monomial ``coef·σ^mask`` on the left or right."""
        D, out = self.D, {}
        deg = mask.bit_count()
        for k, v in self._terms.items():
            if k & mask or k.bit_count() + deg > D:
                continue
            s = merge_sign_mask(mask, k) if left else merge_sign_mask(k, mask)
            out[k | mask] = s * coef * v
        if self.exact:
            out = {k: scalars.normalize(v) for k, v in out.items() if v != 0}
        return Supernumber._raw(out, max(self.L, mask.bit_length()), D, self.exact, self.tol)

    # comparison

    def __eq__(self, other):
        if scalars.is_scalar(other):
            other = Supernumber({(): other}, self.L, self.D)
        if not isinstance(other, Supernumber):
            return NotImplemented
        if self.exact and other.exact:
            return self._terms == other._terms
        tol = max(self.tol if not self.exact else 0, other.tol if not other.exact else 0)
        keys = set(self._terms) | set(other._terms)
        return all(abs(scalars.to_float(self._terms.get(k, 0)) - scalars.to_float(other._terms.get(k, 0))) <= tol
                   for k in keys)

    __hash__ = None

    def max_abs_diff(self, other: "Supernumber") -> float:
        keys = set(self._terms) | set(other._terms)
        return max((abs(scalars.to_float(self._terms.get(k, 0)) - scalars.to_float(other._terms.get(k, 0)))
                    for k in keys), default=0.0)

    # projections

    @property
    def body(self):
        return self._terms.get(0, 0 if self.exact else 0.0)

    @property
    def soul(self) -> "Supernumber":
        return Supernumber._raw({k: v for k, v in self._terms.items() if k},
                                self.L, self.D, self.exact, self.tol)

    def grade_project(self, j: int) -> "Supernumber":
        return Supernumber._raw({k: v for k, v in self._terms.items() if k.bit_count() == j},
                                self.L, self.D, self.exact, self.tol)

    def parity_project(self, p: Parity | int) -> "Supernumber":
        p = Parity(p) if not isinstance(p, Parity) else p
        if p is Parity.UNDEFINED:
            raise ValueError("cannot project onto the undefined parity")
        return Supernumber._raw({k: v for k, v in self._terms.items() if k.bit_count() & 1 == p.value},
                                self.L, self.D, self.exact, self.tol)

    @property
    def even(self) -> "Supernumber":
        return self.parity_project(Parity.EVEN)

    @property
    def odd(self) -> "Supernumber":
        return self.parity_project(Parity.ODD)

    def parity_of(self) -> Parity:
        """Parity of a homogeneous element; zero counts as even."""
        ev = self.even
        od = self.odd
        if od.is_zero():
            return Parity.EVEN
        if ev.is_zero():
            return Parity.ODD
        return Parity.UNDEFINED

    def skeleton_project(self, L2: int) -> "Supernumber":
        """Natural projection ``p_{L2}``: drop every term using a generator above ``L2``."""
        if L2 > self.L:
            raise ValueError(f"cannot project skeleton {self.L} onto larger skeleton {L2}")
        return self.with_context(L2, min(self.D, L2))

    def truncate(self, D2: int) -> "Supernumber":
        if D2 > self.D:
            raise ValueError(f"cannot raise cutoff from {self.D} to {D2}")
        return self.with_context(self.L, D2)

    def reality_check(self) -> bool:
        return scalars.imag_part(self.body) == 0

    def conjugate(self) -> "Supernumber":
        """Coefficient-wise complex conjugate."""
        return Supernumber._raw({k: v.conjugate() if hasattr(v, "conjugate") else v
                                 for k, v in self._terms.items()},
                                self.L, self.D, self.exact, self.tol)

    def dist(self, other: "Supernumber | None" = None):
        """Fréchet metric ``Σ_I 2^{-r(I)} |X_I| / (1 + |X_I|)`` (of ``self - other``)."""
        X = self if other is None else self - other
        if X.exact and all(isinstance(v, (int, Fraction)) for v in X._terms.values()):
            total = Fraction(0)
            for k, v in X._terms.items():
                if k >> MAX_METRIC_GENERATOR:
                    raise OverflowError("exact metric weight needs generators <= "
                                        f"{MAX_METRIC_GENERATOR}")
                a = abs(Fraction(v))
                total += Fraction(1, 1 << (1 + k)) * a / (1 + a)
            return total
        total = 0.0
        for k, v in X._terms.items():
            a = abs(v)
            if 1 + k > 1074:
                continue
            total += 2.0 ** -(1 + k) * a / (1 + a)
        return total

    def nilpotency_check(self, power: int) -> bool:
        return (self ** power).is_zero()

    def min_degree(self) -> int:
        return min((m.bit_count() for m in self._terms), default=0)

    # display

    def __repr__(self):
        if not self._terms:
            return f"Supernumber(0; L={self.L}, D={self.D})"
        parts = []
        for mask in sorted(self._terms, key=lambda k: (k.bit_count(), gens_of(k))):
            v = self._terms[mask]
            blade = "".join(f"σ{g}" for g in gens_of(mask))
            parts.append(f"({v}){blade}" if blade else f"({v})")
        return " + ".join(parts) + f"  [L={self.L}, D={self.D}]"


def _multiply(X: Supernumber, Y: Supernumber) -> Supernumber:
    L, D, exact, tol = X._context(Y)
    out: dict[int, object] = {}
    yitems = [(k, v, k.bit_count()) for k, v in Y._terms.items()]
    for j, a in X._terms.items():
        dj = j.bit_count()
        for k, b, dk in yitems:
            if j & k or dj + dk > D:
                continue
            i = j | k
            term = a * b if merge_sign_mask(j, k) > 0 else -(a * b)
            out[i] = out.get(i, 0) + term
    if exact:
        out = {k: scalars.normalize(v) for k, v in out.items() if v != 0}
    else:
        out = {k: v for k, v in out.items() if v != 0}
    return Supernumber._raw(out, L, D, exact, tol)


def sigma(i: int, L: int, D: int | None = None) -> Supernumber:
    """The generator ``σ_i`` as a supernumber of skeleton ``L``."""
    return Supernumber.generator(i, L, D)


def top_blade_mask(L: int) -> int:
    return (1 << L) - 1


def add(X, Y):
    return X + Y


def mul(X, Y):
    return X * Y


def dist(X: Supernumber, Y: Supernumber | None = None):
    return X.dist(Y)
