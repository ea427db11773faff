"""Supersmooth functions ``u(x, θ) = Σ_a θ^a f̃_a(x)`` and their derivatives.

Odd derivatives follow the left convention: to differentiate in ``θ_s``, move
``θ_s`` to the front of ``θ^a`` and drop it, picking up ``(-1)^{l(a)}`` with
``l(a) = Σ_{j<s} a_j``.  The right-ordered form ``Σ_a f̃_a(x) θ^a`` uses the
mirror rule with ``r(a) = Σ_{j>s} a_j``.

Directional derivatives of superfields are computed exactly: evaluate at
``X + εY`` with a fresh nilpotent ``ε`` and read off the ``ε`` coefficient.
Black-box functions fall back to interpolation (if their polynomial degree
along lines is declared) or to central differences.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Mapping, Sequence

from . import scalars
from .continuation import ContinuationMismatch, TaylorResult, grassmann_continue
from .fresh import eps, eps_coefficient
from .gindex import (
    MAX_GENERATOR,
    DomainError,
    check_odd_multi,
    factorial_multi,
    merge_sign_mask,
    multi_indices,
)
from .smoothfn import EvaluationError, PolyMap, SmoothMap, SupernumberValuedMap
from .supernumber import Supernumber
from .superspace import CoordIndex, Superdomain, SuperPoint, basis_direction

DEFAULT_FD_STEP = 1e-5


class ConfigurationError(ValueError):
    """Raised when a computation needs more generators than are available."""


def odd_multis(n: int) -> list[tuple[int, ...]]:
    """All ``a ∈ {0,1}^n`` ordered by ``|a|`` then lexicographically."""
    return sorted(itertools.product((0, 1), repeat=n), key=lambda a: (sum(a), a))


def theta_power(thetas: Sequence[Supernumber], a: Sequence[int], L: int, D: int) -> Supernumber:
    """``θ^a = θ_1^{a_1} ⋯ θ_n^{a_n}`` in that order."""
    out = Supernumber.scalar(1, L, D)
    if not all(t.exact for t in thetas):
        out = out.to_float()
    for t, bit in zip(thetas, a):
        if bit:
            out = out * t
    return out


def _demote_pair(a: Supernumber, b: Supernumber) -> tuple[Supernumber, Supernumber]:
    if a.exact != b.exact:
        return (a.to_float() if a.exact else a), (b.to_float() if b.exact else b)
    return a, b


def _lmul(a: Supernumber, b: Supernumber) -> Supernumber:
    a, b = _demote_pair(a, b)
    return a * b


def _ladd(a: Supernumber, b: Supernumber) -> Supernumber:
    a, b = _demote_pair(a, b)
    return a + b


def _coef_parities(f) -> set[int]:
    if isinstance(f, SupernumberValuedMap):
        return f.parities
    return {0}


class Superfield:
    """``u = Σ_a θ^a f̃_a(x)`` (left form) or ``Σ_a f̃_a(x) θ^a`` (right form).

    Args:
        coeffs: mapping from odd multi-index ``a`` to a SmoothMap, a
            SupernumberValuedMap, or a scalar constant.
        m, n: numbers of even and odd variables.
        side: ``"left"`` (default) or ``"right"`` ordering of ``θ^a``.
        domain: optional superdomain restricting the body of ``x``.
    """

    def __init__(self, coeffs: Mapping, m: int, n: int, side: str = "left",
                 domain: Superdomain | None = None):
        if side not in ("left", "right"):
            raise ValueError("side must be 'left' or 'right'")
        clean = {}
        for a, f in coeffs.items():
            a = check_odd_multi(a, n)
            if scalars.is_scalar(f):
                f = PolyMap.const(f, m)
            if f.m != m:
                raise DomainError(f"coefficient at {a} has arity {f.m}, expected {m}")
            if not f.is_zero():
                clean[a] = f
        self.m, self.n, self.side, self.domain = m, n, side, domain
        self.coeffs: dict[tuple[int, ...], object] = dict(sorted(clean.items(), key=lambda kv: (sum(kv[0]), kv[0])))
        if any(isinstance(f, SupernumberValuedMap) for f in clean.values()) and not self.is_homogeneous:
            warnings.warn("superfield with supernumber-valued coefficients is not homogeneous",
                          stacklevel=2)

    # structure

    @classmethod
    def from_terms(cls, terms: Sequence[tuple[Sequence[int], object]], m: int, n: int, **kw) -> "Superfield":
        """Build from ``(a, f)`` pairs, adding coefficients that share an ``a``."""
        acc: dict = {}
        for a, f in terms:
            a = tuple(a)
            acc[a] = acc[a] + f if a in acc else f
        return cls(acc, m, n, **kw)

    def term_parities(self) -> set[int]:
        return {(sum(a) + p) % 2 for a, f in self.coeffs.items() for p in _coef_parities(f)}

    @property
    def is_homogeneous(self) -> bool:
        return len(self.term_parities()) <= 1

    @property
    def parity(self) -> int | None:
        ps = self.term_parities()
        if not ps:
            return 0
        return ps.pop() if len(ps) == 1 else None

    @property
    def is_polynomial(self) -> bool:
        return all(f.is_polynomial for f in self.coeffs.values())

    @property
    def total_degree(self) -> float:
        """``max_a (deg f_a + |a|)``; infinite for non-polynomial coefficients."""
        best = -1
        for a, f in self.coeffs.items():
            if isinstance(f, PolyMap):
                best = max(best, f.degree + sum(a))
            elif isinstance(f, SupernumberValuedMap) and f.is_polynomial:
                deg = max((c.degree for c in f.components.values() if isinstance(c, PolyMap)), default=-1)
                best = max(best, deg + sum(a))
            else:
                return float("inf")
        return best

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, Superfield):
            return NotImplemented
        if (self.m, self.n, self.side) != (other.m, other.n, other.side):
            return False
        if self.coeffs.keys() != other.coeffs.keys():
            return False
        return all(f == other.coeffs[a] or f is other.coeffs[a] for a, f in self.coeffs.items())

    __hash__ = None

    def __repr__(self):
        body = ", ".join(f"{list(a)}: {f!r}" for a, f in self.coeffs.items())
        return f"Superfield(m={self.m}, n={self.n}, side={self.side!r}, {{{body}}})"

    # evaluation

    def __call__(self, X: SuperPoint) -> Supernumber:
        return self.eval(X)

    def eval(self, X: SuperPoint) -> Supernumber:
        """``Σ_a θ^a f̃_a(x)`` (or the right-ordered sum) at ``X``."""
        if (X.m, X.n) != (self.m, self.n):
            raise DomainError(f"point has shape {X.m}|{X.n}, superfield expects {self.m}|{self.n}")
        if self.domain is not None and not self.domain.contains(X):
            raise EvaluationError(f"body {X.body()} lies outside the superdomain")
        L, D = X.L, X.D
        total = Supernumber.zero(L, D, X.exact)
        for a, f in self.coeffs.items():
            val = grassmann_continue(f, X.even, L, D)
            th = theta_power(X.odd, a, L, D)
            term = _lmul(th, val) if self.side == "left" else _lmul(val, th)
            total = _ladd(total, term)
        return total

    def continued_coefficients(self, x, L: int | None = None, D: int | None = None) -> dict:
        """``{a: f̃_a(x)}`` for every ``a ∈ {0,1}^n`` (zeros included)."""
        xs = list(x.even) if isinstance(x, SuperPoint) else list(x)
        L = max((s.L for s in xs), default=0) if L is None else L
        D = min((s.D for s in xs), default=L) if D is None else D
        out = {}
        for a in odd_multis(self.n):
            f = self.coeffs.get(a)
            out[a] = grassmann_continue(f, xs, L, D) if f is not None else Supernumber.zero(L, D)
        return out

    # derivatives

    def partial_even(self, j: int) -> "Superfield":
        if not 1 <= j <= self.m:
            raise DomainError(f"even variable index {j} outside 1..{self.m}")
        alpha = tuple(int(k == j) for k in range(1, self.m + 1))
        return Superfield({a: f.partial(alpha) for a, f in self.coeffs.items()},
                          self.m, self.n, self.side, self.domain)

    def partial_even_multi(self, alpha: Sequence[int]) -> "Superfield":
        return Superfield({a: f.partial(tuple(alpha)) for a, f in self.coeffs.items()},
                          self.m, self.n, self.side, self.domain)

    def _odd_derivative(self, s: int, side: str) -> "Superfield":
        if not 1 <= s <= self.n:
            raise DomainError(f"odd variable index {s} outside 1..{self.n}")
        if self.side != side:
            raise ValueError(f"{side} derivative needs the {side}-ordered form; convert first")
        out = {}
        for a, f in self.coeffs.items():
            if not a[s - 1]:
                continue
            count = sum(a[: s - 1]) if side == "left" else sum(a[s:])
            b = a[: s - 1] + (0,) + a[s:]
            out[b] = f if count % 2 == 0 else -1 * f
        return Superfield(out, self.m, self.n, self.side, self.domain)

    def partial_odd_left(self, s: int) -> "Superfield":
        """Left derivative ``∂_{θ_s} u``."""
        return self._odd_derivative(s, "left")

    def partial_odd_right(self, s: int) -> "Superfield":
        """Right derivative ``u ∂⃖_{θ_s}`` of a right-ordered superfield."""
        return self._odd_derivative(s, "right")

    def partial_odd_multi(self, a: Sequence[int]) -> "Superfield":
        """``∂_θ^a u``: left derivatives applied in the order θ_1, θ_2, …"""
        u = self
        for s, bit in enumerate(a, 1):
            if bit:
                u = u.partial_odd_left(s)
        return u

    def _reordered(self, side: str) -> "Superfield":
        if self.side == side:
            return self
        out = {}
        for a, f in self.coeffs.items():
            k = sum(a)
            if isinstance(f, SupernumberValuedMap):
                comps = {I: (g if (k * I.degree) % 2 == 0 else -1 * g) for I, g in f.components.items()}
                out[a] = SupernumberValuedMap(comps, f.m)
            else:
                out[a] = f
        return Superfield(out, self.m, self.n, side, self.domain)

    def to_right(self) -> "Superfield":
        """Same function written as ``Σ_a f̃_a(x) θ^a``.

        ``θ^a σ^I = (-1)^{|a||I|} σ^I θ^a`` and the continued scalar parts are
        even, so only supernumber-valued coefficients pick up signs.
        """
        return self._reordered("right")

    def to_left(self) -> "Superfield":
        return self._reordered("left")


def as_blackbox(F) -> Callable[[SuperPoint], Supernumber]:
    return F.eval if isinstance(F, Superfield) else F


@dataclass
class BlackBox:
    """An evaluable map from superpoints to supernumbers.

    Args:
        fn: the map itself; it must accept points of any skeleton it is
            evaluated on and return a Supernumber.
        m, n: shape of the input superspace.
        t_degree: if set, ``t ↦ fn(X + tY)`` is promised to be a polynomial of
            at most this degree, enabling exact derivatives by interpolation.
        name: label used in reports.
        max_skeleton: largest skeleton ``fn`` can be evaluated on.
    """

    fn: Callable[[SuperPoint], Supernumber]
    m: int
    n: int
    t_degree: int | None = None
    name: str = "blackbox"
    max_skeleton: int = MAX_GENERATOR

    def __call__(self, X: SuperPoint) -> Supernumber:
        return self.fn(X)

    def eval(self, X: SuperPoint) -> Supernumber:
        return self.fn(X)


def _shape(F) -> tuple[int, int]:
    return F.m, F.n


def _lagrange_derivative_weights(nodes: Sequence[int]) -> list[Fraction]:
    """Weights ``w_k`` with ``p'(0) = Σ w_k p(t_k)`` for polynomials of degree ``< len(nodes)``."""
    weights = []
    for k, tk in enumerate(nodes):
        total = Fraction(0)
        for i, ti in enumerate(nodes):
            if i == k:
                continue
            prod = Fraction(1, tk - ti)
            for j, tj in enumerate(nodes):
                if j not in (i, k):
                    prod *= Fraction(-tj, tk - tj)
            total += prod
        weights.append(total)
    return weights


def _shift(X: SuperPoint, Y: SuperPoint, t) -> SuperPoint:
    return X + Y.scale(t)


def directional_derivative(F, X: SuperPoint, Y: SuperPoint, fd_step: float = DEFAULT_FD_STEP,
                           richardson: bool = True) -> tuple[Supernumber, str]:
    """``d/dt F(X + tY)`` at ``t = 0`` and the method used to obtain it.

    Methods: ``"nilpotent"`` (superfields, exact), ``"interpolation"``
    (black boxes with a declared degree along lines, exact), ``"finite-difference"``
    (central differences, float, optionally with one Richardson level).
    """
    L, D = max(X.L, Y.L), min(X.D, Y.D)
    X, Y = X.with_context(L, D), Y.with_context(L, D)
    if isinstance(F, Superfield):
        e = eps(L, D)
        Xe = X.with_context(L + 2, D + 2)
        Ye = Y.with_context(L + 2, D + 2).scale(e)
        return eps_coefficient(F.eval(Xe + Ye), L, D), "nilpotent"
    t_degree = getattr(F, "t_degree", None)
    if t_degree is not None and X.exact and Y.exact:
        d = max(t_degree, 1)
        nodes = list(range(-(d // 2), d - d // 2 + 1))
        weights = _lagrange_derivative_weights(nodes)
        total = Supernumber.zero(L, D)
        for tk, w in zip(nodes, weights):
            if w:
                total = total + F(_shift(X, Y, tk)).with_context(L, D) * scalars.normalize(w)
        return total, "interpolation"
    Xf, Yf = X.to_float(), Y.to_float()

    def central(h):
        up = F(_shift(Xf, Yf, h)).with_context(L, D).to_float()
        down = F(_shift(Xf, Yf, -h)).with_context(L, D).to_float()
        return (up - down) * (1.0 / (2 * h))

    est = central(fd_step)
    if richardson:
        est = (central(fd_step / 2) * 4.0 - est) * (1.0 / 3.0)
    return est, "finite-difference"


def _check_agreement(lhs: Supernumber, rhs: Supernumber, what: str):
    if lhs.exact and rhs.exact:
        ok = lhs == rhs
    else:
        scale = max(1.0, max((abs(v) for _, v in rhs.mask_items()), default=0.0))
        ok = lhs.max_abs_diff(rhs) <= max(lhs.tol, rhs.tol) * scale
    if not ok:
        raise ContinuationMismatch(f"{what}: {lhs!r} != {rhs!r}")


def gateaux_derivative(u: Superfield, X: SuperPoint, Y: SuperPoint) -> Supernumber:
    """``Σ_j y_j ∂_{x_j}u(X) + Σ_s ω_s ∂_{θ_s}u(X)``, cross-checked against ``d/dt u(X+tY)``."""
    if (Y.m, Y.n) != (u.m, u.n):
        raise DomainError("direction has the wrong shape")
    L, D = max(X.L, Y.L), min(X.D, Y.D)
    X, Y = X.with_context(L, D), Y.with_context(L, D)
    left = u.to_left()
    rhs = Supernumber.zero(L, D, X.exact and Y.exact)
    for j, y in enumerate(Y.even, 1):
        if len(y):
            rhs = _ladd(rhs, _lmul(y, left.partial_even(j).eval(X)))
    for s, w in enumerate(Y.odd, 1):
        if len(w):
            rhs = _ladd(rhs, _lmul(w, left.partial_odd_left(s).eval(X)))
    lhs, _ = directional_derivative(u, X, Y)
    _check_agreement(lhs, rhs, "Gateaux derivative and partial-derivative sum disagree")
    return rhs


def coord_partial(F, X: SuperPoint, c: CoordIndex | tuple, fd_step: float = DEFAULT_FD_STEP,
                  richardson: bool = True) -> Supernumber:
    """``∂F/∂X_{A,I} = d/dt F(X + t σ^I e_A)`` at ``t = 0``."""
    c = c if isinstance(c, CoordIndex) else CoordIndex(*c)
    m, n = _shape(F)
    E = basis_direction(c, m, n, X.L, X.D)
    return directional_derivative(F, X, E, fd_step, richardson)[0]


def taylor_superfield(u: Superfield, X: SuperPoint, Y: SuperPoint, N: int) -> TaylorResult:
    """``Σ_{|α|+|a|<=N} (1/α!) y^α ω^a ∂_x^α ∂_θ^a u(X)`` against ``u(X + Y)``.

    ``∂_θ^a`` applies the left derivatives in ``θ_1`` first, and
    ``ω^a = ω_1^{a_1} ⋯ ω_n^{a_n}``.
    """
    L, D = max(X.L, Y.L), min(X.D, Y.D)
    X, Y = X.with_context(L, D), Y.with_context(L, D)
    left = u.to_left()
    total = Supernumber.zero(L, D, X.exact and Y.exact)
    for a in odd_multis(u.n):
        if sum(a) > N:
            continue
        ua = left.partial_odd_multi(a)
        if ua.is_zero():
            continue
        wa = theta_power(Y.odd, a, L, D)
        if wa.is_zero():
            continue
        for alpha in multi_indices(u.m, N - sum(a)):
            uaa = ua.partial_even_multi(alpha)
            if uaa.is_zero():
                continue
            term = wa
            for j, k in enumerate(alpha):
                for _ in range(k):
                    term = _lmul(Y.even[j], term)
            term = _lmul(term, uaa.eval(X))
            fact = factorial_multi(alpha)
            term = term / fact if term.exact else term * (1.0 / fact)
            total = _ladd(total, term)
    target = u.eval(X + Y)
    target, total = _demote_pair(target, total)
    return TaylorResult(total, target, target - total)


def superfield_extract(F, x, n: int, budget: int | None = None,
                       L: int | None = None, D: int | None = None) -> dict[tuple[int, ...], Supernumber]:
    """Recover ``{a: f̃_a(x)}`` from evaluations of ``F`` with fresh odd arguments.

    Evaluates ``F`` at ``(x, θ*)`` with ``θ*_k = σ_{L+k}`` in skeleton ``L + n``
    and cutoff ``D + n``.  Since ``θ*^a σ^J = (-1)^{|a||J|} σ^{J ∪ A}`` for the
    fresh support ``A`` of ``a``, each coefficient of ``f̃_a(x)`` is a signed
    read-off of one coefficient of the output.

    Raises:
        ConfigurationError: fewer than ``n`` fresh generators are available.
    """
    xs = list(x.even) if isinstance(x, SuperPoint) else list(x)
    L = max((s.L for s in xs), default=0) if L is None else L
    D = min((s.D for s in xs), default=L) if D is None else D
    budget = n if budget is None else budget
    cap = min(MAX_GENERATOR, getattr(F, "max_skeleton", MAX_GENERATOR))
    if budget < n or L + n > cap:
        raise ConfigurationError(f"need {n} fresh generators above L={L} (budget {budget}, cap {cap})")
    L2, D2 = L + n, D + n
    thetas = [Supernumber.from_masks({1 << (L + k): 1}, L2, D2) for k in range(n)]
    Xs = SuperPoint([s.with_context(L2, D2) for s in xs], thetas, L2, D2)
    Z = as_blackbox(F)(Xs)
    low = (1 << L) - 1
    out: dict[tuple[int, ...], dict[int, object]] = {a: {} for a in odd_multis(n)}
    for mask, v in Z.mask_items():
        fresh = mask >> L
        a = tuple((fresh >> k) & 1 for k in range(n))
        J = mask & low
        if J.bit_count() > D:
            continue
        sign = -1 if (sum(a) * J.bit_count()) % 2 else 1
        out[a][J] = v if sign > 0 else -v
    return {a: Supernumber._raw(t, L, D, Z.exact, Z.tol) for a, t in out.items()}


def integrate_path(phi: Callable, a, b, degree: int | None = None) -> Supernumber:
    """``∫_a^b φ(t) dt`` for a supernumber-valued path, componentwise.

    With ``degree`` declared (each component is a polynomial in ``t`` of at
    most that degree) the integral is exact: ``φ`` is sampled at ``degree + 1``
    rational nodes and the interpolant integrated in closed form.  Otherwise
    the components are integrated with adaptive quadrature.
    """
    if degree is not None:
        a, b = scalars.to_exact(a), scalars.to_exact(b)
        k = max(degree, 0)
        nodes = [a + (b - a) * Fraction(i, max(k, 1)) for i in range(k + 1)] if k else [a]
        weights = _interp_integral_weights(nodes, a, b)
        total = None
        for t, w in zip(nodes, weights):
            term = phi(t) * scalars.normalize(w)
            total = term if total is None else total + term
        return total
    from scipy.integrate import quad_vec

    a, b = float(a), float(b)
    probe = [phi(a + (b - a) * s) for s in (0.0, 0.25, 0.5, 0.75, 1.0)]
    L, D = max(p.L for p in probe), min(p.D for p in probe)
    keys = sorted({k for p in probe for k, _ in p.mask_items()})

    def vec(t):
        p = phi(t).with_context(L, D)
        out = []
        for k in keys:
            v = complex(scalars.to_float(p._terms.get(k, 0)))
            out.extend((v.real, v.imag))
        return out

    import numpy as np

    res, _ = quad_vec(lambda t: np.asarray(vec(t)), a, b)
    terms = {}
    for i, k in enumerate(keys):
        re, im = float(res[2 * i]), float(res[2 * i + 1])
        terms[k] = complex(re, im) if im else re
    return Supernumber._raw({k: v for k, v in terms.items() if v != 0}, L, D, False, scalars.DEFAULT_TOL)


def _interp_integral_weights(nodes: Sequence[Fraction], a, b) -> list[Fraction]:
    """``∫_a^b ℓ_k(t) dt`` for the Lagrange basis on ``nodes``."""
    weights = []
    for k, tk in enumerate(nodes):
        poly = [Fraction(1)]  # coefficients, lowest degree first
        for j, tj in enumerate(nodes):
            if j == k:
                continue
            den = tk - tj
            new = [Fraction(0)] * (len(poly) + 1)
            for i, c in enumerate(poly):
                new[i] += -tj * c / den
                new[i + 1] += c / den
            poly = new
        weights.append(sum(c * (Fraction(b) ** (i + 1) - Fraction(a) ** (i + 1)) / (i + 1)
                           for i, c in enumerate(poly)))
    return weights


def iter_coordinate_derivatives(F, X: SuperPoint, coords: Sequence[CoordIndex],
                                fd_step: float = DEFAULT_FD_STEP,
                                richardson: bool = True) -> Iterator[tuple[CoordIndex, Supernumber | Exception, str]]:
    """Yield ``(c, ∂F/∂X_c, method)``; evaluation failures are yielded as the exception."""
    m, n = _shape(F)
    for c in coords:
        try:
            E = basis_direction(c, m, n, X.L, X.D)
            d, method = directional_derivative(F, X, E, fd_step, richardson)
        except (EvaluationError, ArithmeticError) as exc:
            yield c, exc, "skipped"
            continue
        yield c, d, method


__all__ = [
    "BlackBox",
    "ConfigurationError",
    "DEFAULT_FD_STEP",
    "Superfield",
    "coord_partial",
    "directional_derivative",
    "gateaux_derivative",
    "integrate_path",
    "odd_multis",
    "superfield_extract",
    "taylor_superfield",
    "theta_power",
]
