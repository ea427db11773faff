"""Grassmann continuation of smooth maps to even supernumber arguments.

For ``x = x_B + x_S`` with real body and nilpotent soul,

    f̃(x) = Σ_{|α| <= ⌊D/2⌋} (1/α!) ∂^α f(x_B) x_S^α.

Every soul factor of an even slot has degree at least 2, so multi-indices
with ``|α| > ⌊D/2⌋`` contribute nothing at cutoff ``D``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import scalars
from .fresh import eps, eps_coefficient
from .gindex import DomainError, factorial_multi, multi_indices
from .smoothfn import AnalyticPrimitive, EvaluationError, PolyMap, SmoothMap, SupernumberValuedMap
from .supernumber import Parity, Supernumber
from .superspace import SuperPoint


class ContinuationMismatch(AssertionError):
    """Two independent routes to the same continued quantity disagreed."""


def _even_args(x) -> list[Supernumber]:
    if isinstance(x, SuperPoint):
        return list(x.even)
    if isinstance(x, Supernumber):
        return [x]
    return list(x)


def _context(xs: Sequence[Supernumber], L, D) -> tuple[int, int]:
    if L is None:
        L = max((s.L for s in xs), default=0)
    if D is None:
        D = min((s.D for s in xs), default=L)
    return L, min(D, L)


def _check_even(xs, require_real: bool):
    for j, s in enumerate(xs, 1):
        if s.parity_of() is not Parity.EVEN:
            raise DomainError(f"argument x_{j} is not even")
        if require_real and not s.reality_check():
            raise DomainError(f"argument x_{j} has a non-real body")


def _continue_scalar(f: SmoothMap, xs: list[Supernumber], L: int, D: int,
                     require_real: bool = True) -> Supernumber:
    if len(xs) != f.m:
        raise DomainError(f"map has arity {f.m} but {len(xs)} arguments were given")
    _check_even(xs, require_real)
    xs = [s.with_context(L, D) for s in xs]
    q = [scalars.real_part(s.body) if require_real else s.body for s in xs]
    souls = [s.soul for s in xs]
    order = D // 2
    if isinstance(f, PolyMap):
        order = min(order, max(f.degree, 0))
    coefs = []
    for alpha in multi_indices(f.m, order):
        if any(a and souls[j].is_zero() for j, a in enumerate(alpha)):
            continue
        c = f.partial(alpha)(q)
        if c != 0:
            coefs.append((alpha, c, factorial_multi(alpha)))
    exact = all(s.exact or not len(s) for s in xs) and all(scalars.is_exact(c) for _, c, _ in coefs)
    if not exact:
        souls = [s.to_float() for s in souls]
    tol = min((s.tol for s in xs), default=scalars.DEFAULT_TOL)
    powers: dict[tuple[int, int], Supernumber] = {}

    def soul_power(j: int, k: int) -> Supernumber:
        if (j, k) not in powers:
            powers[(j, k)] = souls[j] if k == 1 else soul_power(j, k - 1) * souls[j]
        return powers[(j, k)]

    total = Supernumber.zero(L, D, exact)
    total.tol = tol
    for alpha, c, fact in coefs:
        if exact:
            scale = Fraction(1, fact) * (Fraction(c) if isinstance(c, int) else c)
            term = Supernumber({(): scalars.normalize(scale)}, L, D)
        else:
            term = Supernumber({(): scalars.to_float(c) / fact}, L, D, tol=tol)
        for j, a in enumerate(alpha):
            if a:
                term = term * soul_power(j, a)
        total = total + term
    return total


def grassmann_continue(f, x, L: int | None = None, D: int | None = None) -> Supernumber:
    """Continue ``f`` to the even supernumber arguments ``x``.

    Args:
        f: a SmoothMap, or a SupernumberValuedMap continued componentwise.
        x: even supernumbers (a sequence, a single supernumber, or a SuperPoint's
            even slots).
        L, D: result context; inferred from ``x`` when omitted.

    Raises:
        EvaluationError: the body of ``x`` lies outside the domain of ``f``.
    """
    xs = _even_args(x)
    L, D = _context(xs, L, D)
    if isinstance(f, SupernumberValuedMap):
        if f.support_bound > L:
            raise DomainError(f"component generators exceed skeleton L={L}")
        total = None
        for I, fI in sorted(f.components.items(), key=lambda kv: kv[0].mask):
            if I.degree > D:
                continue
            part = Supernumber.from_masks({I.mask: 1}, L, D) * _continue_scalar(fI, xs, L, D)
            total = part if total is None else total + part
        return total if total is not None else Supernumber.zero(L, D)
    return _continue_scalar(f, xs, L, D)


def _agree(a: Supernumber, b: Supernumber) -> bool:
    if a.exact and b.exact:
        return a == b
    scale = max(1.0, max((abs(v) for _, v in a.mask_items()), default=0.0))
    return a.max_abs_diff(b) <= a.tol * scale


def continuation_partial(f, x, j: int) -> Supernumber:
    """``∂_{x_j} f̃(x)``, computed two ways and checked for agreement.

    The first route continues ``∂_{q_j} f``.  The second differentiates the
    continued map itself along ``e_j`` using a fresh nilpotent ``ε``.
    """
    xs = _even_args(x)
    L, D = _context(xs, L=None, D=None)
    if not 1 <= j <= len(xs):
        raise DomainError(f"variable index {j} outside 1..{len(xs)}")
    if isinstance(f, SupernumberValuedMap):
        fj = f.partial(tuple(int(k == j) for k in range(1, f.m + 1)))
    else:
        fj = f.d(j)
    via_oracle = grassmann_continue(fj, xs, L, D)
    e = eps(L, D)
    shifted = [s.with_context(L + 2, D + 2) + (e if k == j else 0) for k, s in enumerate(xs, 1)]
    via_series = eps_coefficient(grassmann_continue(f, shifted, L + 2, D + 2), L, D)
    if not _agree(via_oracle, via_series):
        raise ContinuationMismatch(f"∂_x{j} routes disagree: {via_oracle!r} vs {via_series!r}")
    return via_oracle


@dataclass(frozen=True)
class TaylorResult:
    """Partial sum of a Taylor expansion and its defect against the true value."""

    partial_sum: Supernumber
    target: Supernumber
    defect: Supernumber

    @property
    def exact(self) -> bool:
        return self.defect.is_zero()


def taylor_expand_continued(f, x, y, N: int) -> TaylorResult:
    """``Σ_{|α|<=N} (1/α!) ∂^α f̃(x) y^α`` compared with ``f̃(x + y)``."""
    xs, ys = _even_args(x), _even_args(y)
    if len(xs) != len(ys):
        raise DomainError("base point and increment have different arity")
    _check_even(ys, True)
    L, D = _context(list(xs) + list(ys), None, None)
    m = len(xs)
    total = None
    for alpha in multi_indices(m, N):
        fa = f.partial(alpha)
        if fa.is_zero():
            continue
        term = grassmann_continue(fa, xs, L, D)
        for j, a in enumerate(alpha):
            for _ in range(a):
                term = term * ys[j]
        term = term / factorial_multi(alpha) if term.exact else term * (1.0 / factorial_multi(alpha))
        total = term if total is None else total + term
    if total is None:
        total = Supernumber.zero(L, D)
    target = grassmann_continue(f, [a + b for a, b in zip(xs, ys)], L, D)
    return TaylorResult(total, target, target - total)


def continue_analytic(f: AnalyticPrimitive | SmoothMap, z: Supernumber) -> Supernumber:
    """``Σ_n (1/n!) f^{(n)}(z_B) z_S^n`` for a one-variable map and even ``z``.

    Complex bodies are allowed here, unlike :func:`grassmann_continue`.
    """
    if f.m != 1:
        raise DomainError("continue_analytic needs a map of one variable")
    return _continue_scalar(f, [z], z.L, z.D, require_real=False)


__all__ = [
    "ContinuationMismatch",
    "EvaluationError",
    "TaylorResult",
    "continuation_partial",
    "continue_analytic",
    "grassmann_continue",
    "taylor_expand_continued",
]
