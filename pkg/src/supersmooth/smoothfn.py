"""Coefficient functions on R^m with exact partial-derivative oracles.

Grassmann continuation needs every ``∂^α f`` at a body point, exactly.  The
maps here carry that oracle explicitly; nothing is differentiated numerically
except in :func:`finite_diff_check`, which exists to validate oracles.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from math import comb
from typing import Mapping, Sequence

from . import scalars
from .gindex import GIndex, as_gindex, check_even_multi
from .supernumber import Supernumber


class EvaluationError(ValueError):
    """Raised when a map is evaluated outside its domain."""


class SmoothMap:
    """Base class: a smooth map ``R^m -> C`` with an exact derivative oracle."""

    m: int = 0
    max_order: float = math.inf

    def __call__(self, q: Sequence):
        raise NotImplementedError

    def partial(self, alpha: Sequence[int]) -> "SmoothMap":
        raise NotImplementedError

    def d(self, j: int) -> "SmoothMap":
        """First partial derivative in variable ``j`` (1-based)."""
        alpha = [0] * self.m
        alpha[j - 1] = 1
        return self.partial(alpha)

    def is_zero(self) -> bool:
        return False

    @property
    def is_polynomial(self) -> bool:
        return False

    def _check_point(self, q):
        if len(q) != self.m:
            raise EvaluationError(f"expected a point in R^{self.m}, got {len(q)} coordinates")

    def __add__(self, other):
        if isinstance(other, SmoothMap):
            return SumMap([(1, self), (1, other)])
        if scalars.is_scalar(other):
            return SumMap([(1, self), (1, PolyMap.const(other, self.m))])
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return SumMap([(-1, self)])

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, c):
        if scalars.is_scalar(c):
            return SumMap([(c, self)])
        return NotImplemented


class PolyMap(SmoothMap):
    """Multivariate polynomial with exact coefficients, keyed by exponent tuples."""

    def __init__(self, terms: Mapping[Sequence[int], object], m: int):
        self.m = m
        clean = {}
        for exps, c in terms.items():
            exps = check_even_multi(exps, m)
            if c != 0:
                prev = clean.get(exps, 0)
                s = prev + c
                if s == 0:
                    clean.pop(exps, None)
                else:
                    clean[exps] = scalars.normalize(s) if scalars.is_exact(s) else s
        self.terms = clean

    @classmethod
    def const(cls, c, m: int) -> "PolyMap":
        return cls({(0,) * m: c}, m)

    @classmethod
    def var(cls, j: int, m: int) -> "PolyMap":
        e = [0] * m
        e[j - 1] = 1
        return cls({tuple(e): 1}, m)

    @classmethod
    def monomial(cls, exps: Sequence[int], coef=1) -> "PolyMap":
        return cls({tuple(exps): coef}, len(exps))

    @property
    def is_polynomial(self) -> bool:
        return True

    @property
    def degree(self) -> int:
        """Total degree (``-1`` for the zero polynomial)."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    def __call__(self, q):
        self._check_point(q)
        total = 0
        for exps, c in self.terms.items():
            t = c
            for v, e in zip(q, exps):
                if e:
                    t = t * v ** e
            total = total + t
        return scalars.normalize(total) if scalars.is_exact(total) else total

    def partial(self, alpha) -> "PolyMap":
        alpha = check_even_multi(alpha, self.m)
        out = {}
        for exps, c in self.terms.items():
            if any(e < a for e, a in zip(exps, alpha)):
                continue
            coef = c
            for e, a in zip(exps, alpha):
                for k in range(a):
                    coef = coef * (e - k)
            new = tuple(e - a for e, a in zip(exps, alpha))
            out[new] = out.get(new, 0) + coef
        return PolyMap(out, self.m)

    def __add__(self, other):
        if isinstance(other, PolyMap):
            self._same_arity(other)
            out = dict(self.terms)
            for e, c in other.terms.items():
                out[e] = out.get(e, 0) + c
            return PolyMap(out, self.m)
        if scalars.is_scalar(other):
            return self + PolyMap.const(other, self.m)
        return SmoothMap.__add__(self, other)

    __radd__ = __add__

    def __neg__(self):
        return PolyMap({e: -c for e, c in self.terms.items()}, self.m)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, PolyMap):
            self._same_arity(other)
            out: dict = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    out[e] = out.get(e, 0) + c1 * c2
            return PolyMap(out, self.m)
        if scalars.is_scalar(other):
            return PolyMap({e: c * other for e, c in self.terms.items()}, self.m)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "PolyMap":
        out = PolyMap.const(1, self.m)
        for _ in range(k):
            out = out * self
        return out

    def compose_affine(self, A: Sequence[Sequence], b: Sequence) -> "PolyMap":
        """``q ↦ f(A q + b)`` where ``A`` is ``m × m'`` and the result has arity ``m'``."""
        if len(A) != self.m or len(b) != self.m:
            raise ValueError("affine map has the wrong output dimension")
        m2 = len(A[0]) if A else 0
        images = []
        for row, off in zip(A, b):
            img = PolyMap.const(off, m2)
            for j, a in enumerate(row, 1):
                if a != 0:
                    img = img + PolyMap.var(j, m2) * a
            images.append(img)
        out = PolyMap({}, m2)
        for exps, c in self.terms.items():
            t = PolyMap.const(c, m2)
            for img, e in zip(images, exps):
                t = t * img ** e
            out = out + t
        return out

    def _same_arity(self, other):
        if self.m != other.m:
            raise ValueError(f"arity mismatch {self.m} vs {other.m}")

    def __eq__(self, other):
        if isinstance(other, PolyMap):
            return self.m == other.m and self.terms == other.terms
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        if not self.terms:
            return "PolyMap(0)"
        parts = []
        for exps, c in sorted(self.terms.items()):
            mono = "*".join(f"q{j}^{e}" if e > 1 else f"q{j}" for j, e in enumerate(exps, 1) if e)
            parts.append(f"{c}*{mono}" if mono else f"{c}")
        return "PolyMap(" + " + ".join(parts) + ")"


_KINDS = ("exp", "sin", "cos", "log", "inv_pow")


class AnalyticPrimitive(SmoothMap):
    """``scale · g(c·q + offset)`` with ``g`` one of exp, sin, cos, log, s^{-k}.

    The derivative cycle closes inside the family: exp → exp, sin → cos,
    cos → −sin, log → s^{-1}, s^{-k} → −k s^{-k-1}.
    """

    def __init__(self, kind: str, coeffs: Sequence, offset=0, scale=1, power: int = 1):
        if kind not in _KINDS:
            raise ValueError(f"unknown primitive {kind!r}; expected one of {_KINDS}")
        self.kind = kind
        self.coeffs = tuple(coeffs)
        self.m = len(self.coeffs)
        self.offset = offset
        self.scale = scale
        self.power = power

    def argument(self, q):
        s = self.offset
        for c, v in zip(self.coeffs, q):
            s = s + c * v
        return s

    def in_domain(self, q) -> bool:
        s = self.argument(q)
        if self.kind == "log":
            return scalars.imag_part(s) == 0 and scalars.real_part(s) > 0
        if self.kind == "inv_pow":
            return s != 0
        return True

    def __call__(self, q):
        self._check_point(q)
        s = self.argument(q)
        exact = scalars.is_exact(s) and scalars.is_exact(self.scale)
        if self.kind == "log":
            if scalars.imag_part(s) != 0 or scalars.real_part(s) <= 0:
                raise EvaluationError(f"log is undefined at argument {s}")
            if exact and s == 1:
                return 0
            val = math.log(float(s))
        elif self.kind == "inv_pow":
            if s == 0:
                raise EvaluationError("reciprocal power is undefined at argument 0")
            if exact:
                base = Fraction(s) if isinstance(s, int) else s
                return scalars.normalize(self.scale * (1 / base) ** self.power)
            val = scalars.to_float(s) ** (-self.power)
        elif exact and s == 0:
            return scalars.normalize(self.scale * {"exp": 1, "sin": 0, "cos": 1}[self.kind])
        else:
            z = scalars.to_float(s)
            fn = {"exp": (math.exp, cmath.exp), "sin": (math.sin, cmath.sin),
                  "cos": (math.cos, cmath.cos)}[self.kind]
            val = fn[1](z) if isinstance(z, complex) else fn[0](z)
        return scalars.to_float(self.scale) * val

    def _derivative(self, j: int) -> SmoothMap:
        c = self.coeffs[j - 1]
        if c == 0:
            return PolyMap({}, self.m)
        k, sc = self.kind, self.scale * c
        if k == "exp":
            return AnalyticPrimitive("exp", self.coeffs, self.offset, sc)
        if k == "sin":
            return AnalyticPrimitive("cos", self.coeffs, self.offset, sc)
        if k == "cos":
            return AnalyticPrimitive("sin", self.coeffs, self.offset, -sc)
        if k == "log":
            return AnalyticPrimitive("inv_pow", self.coeffs, self.offset, sc, 1)
        return AnalyticPrimitive("inv_pow", self.coeffs, self.offset, -self.power * sc, self.power + 1)

    def partial(self, alpha) -> SmoothMap:
        alpha = check_even_multi(alpha, self.m)
        f: SmoothMap = self
        for j, a in enumerate(alpha, 1):
            for _ in range(a):
                if isinstance(f, PolyMap):
                    return f.partial(alpha)
                f = f._derivative(j)
        return f

    def __repr__(self):
        extra = f", power={self.power}" if self.kind == "inv_pow" else ""
        return (f"AnalyticPrimitive({self.kind!r}, coeffs={list(self.coeffs)}, "
                f"offset={self.offset}, scale={self.scale}{extra})")


class SumMap(SmoothMap):
    """Finite linear combination ``Σ c_i f_i`` of smooth maps."""

    def __init__(self, parts: Sequence[tuple[object, SmoothMap]]):
        flat = []
        for c, f in parts:
            if isinstance(f, SumMap):
                flat.extend((c * c2, f2) for c2, f2 in f.parts)
            else:
                flat.append((c, f))
        if not flat:
            raise ValueError("SumMap needs at least one part")
        arities = {f.m for _, f in flat}
        if len(arities) != 1:
            raise ValueError(f"arity mismatch among parts: {arities}")
        self.m = arities.pop()
        self.parts = tuple(flat)

    @property
    def is_polynomial(self) -> bool:
        return all(f.is_polynomial for _, f in self.parts)

    def __call__(self, q):
        self._check_point(q)
        total = 0
        for c, f in self.parts:
            total = total + c * f(q)
        return scalars.normalize(total) if scalars.is_exact(total) else total

    def partial(self, alpha) -> SmoothMap:
        parts = [(c, f.partial(alpha)) for c, f in self.parts]
        parts = [(c, f) for c, f in parts if not f.is_zero()]
        if not parts:
            return PolyMap({}, self.m)
        if all(isinstance(f, PolyMap) for _, f in parts):
            out = PolyMap({}, self.m)
            for c, f in parts:
                out = out + f * c
            return out
        return SumMap(parts)

    def is_zero(self) -> bool:
        return all(f.is_zero() for _, f in self.parts)

    def __repr__(self):
        return "SumMap(" + " + ".join(f"{c}*{f!r}" for c, f in self.parts) + ")"


class SupernumberValuedMap:
    """``f(q) = Σ_I f_I(q) σ^I`` with smooth scalar components."""

    def __init__(self, components: Mapping, m: int | None = None):
        comps = {}
        for key, f in components.items():
            comps[as_gindex(key)] = f
        if m is None:
            m = next(iter(comps.values())).m if comps else 0
        if any(f.m != m for f in comps.values()):
            raise ValueError("all components need the same arity")
        self.m = m
        self.components = comps

    @property
    def is_polynomial(self) -> bool:
        return all(f.is_polynomial for f in self.components.values())

    @property
    def parities(self) -> set[int]:
        return {I.parity for I, f in self.components.items() if not f.is_zero()}

    @property
    def is_homogeneous(self) -> bool:
        return len(self.parities) <= 1

    @property
    def support_bound(self) -> int:
        return max((I.mask.bit_length() for I in self.components), default=0)

    def value(self, q, L: int, D: int | None = None) -> Supernumber:
        terms = {I: f(q) for I, f in self.components.items()}
        exact = all(scalars.is_exact(v) for v in terms.values())
        if not exact:
            terms = {I: scalars.to_float(v) for I, v in terms.items()}
        D = L if D is None else D
        return Supernumber({I: v for I, v in terms.items() if I.degree <= D}, L, D)

    def partial(self, alpha) -> "SupernumberValuedMap":
        return SupernumberValuedMap({I: f.partial(alpha) for I, f in self.components.items()}, self.m)

    def is_zero(self) -> bool:
        return all(f.is_zero() for f in self.components.values())

    def __rmul__(self, c):
        if scalars.is_scalar(c):
            return SupernumberValuedMap({I: c * f for I, f in self.components.items()}, self.m)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, SupernumberValuedMap):
            return NotImplemented
        return self.m == other.m and self.components == other.components

    __hash__ = None

    def __repr__(self):
        return "SupernumberValuedMap({" + ", ".join(
            f"{list(I.gens)}: {f!r}" for I, f in self.components.items()) + "})"


def eval_map(f: SmoothMap, q):
    """Evaluate ``f`` at ``q`` (raises :class:`EvaluationError` outside its domain)."""
    return f(q)


def partial(f, alpha):
    return f.partial(alpha)


def finite_diff_check(f: SmoothMap, alpha: Sequence[int], q: Sequence, h) -> float:
    """``|central-difference estimate of ∂^α f(q) - oracle value|``.

    Uses the order-``α_j`` central stencil in each variable with nodes at
    half-integer multiples of ``h`` for odd orders.  With exact ``q`` and ``h``
    and a polynomial ``f`` the whole computation stays exact.
    """
    alpha = check_even_multi(alpha, f.m)
    exact = all(scalars.is_exact(v) for v in q) and f.is_polynomial
    if exact:
        h = scalars.to_exact(h)
    else:
        q = [scalars.to_float(v) for v in q]
        h = float(h)
    stencil = [((), 1)]
    for j, a in enumerate(alpha):
        if a == 0:
            continue
        new = []
        for offsets, w in stencil:
            for k in range(a + 1):
                shift = (Fraction(a, 2) - k) if exact else (a / 2 - k)
                new.append((offsets + ((j, shift),), w * (-1) ** k * comb(a, k)))
        stencil = new
    order = sum(alpha)
    est = 0
    for offsets, w in stencil:
        pt = list(q)
        for j, s in offsets:
            pt[j] = pt[j] + s * h
        est = est + w * f(pt)
    est = est / h ** order
    return abs(est - f.partial(alpha)(q))
