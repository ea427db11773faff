"""Canonical test maps: superfield examples and functions that break the CR system.

The black boxes here are defined on every skeleton and declare their
polynomial degree along lines, so their coordinate derivatives are exact.
"""

from __future__ import annotations

from typing import Callable

from .gindex import GIndex
from .smoothfn import PolyMap
from .superfield import BlackBox, Superfield
from .supernumber import Supernumber
from .superspace import SuperPoint


def mixed_example() -> Superfield:
    """``u = θ_1 θ_2 + x_1 θ_2`` on ``R^{1|2}``."""
    return Superfield({(1, 1): 1, (0, 1): PolyMap.var(1, 1)}, 1, 2)


def square_plus_odd() -> Superfield:
    """``u = x_1² + θ_1 x_2`` on ``R^{2|1}``."""
    return Superfield({(0,): PolyMap({(2, 0): 1}, 2), (1,): PolyMap.var(2, 2)}, 2, 1)


def _scalar_out(X: SuperPoint, value) -> Supernumber:
    return Supernumber({(): value}, X.L, X.D, exact=X.exact)


def body_coordinate(m: int = 1, n: int = 0) -> BlackBox:
    """``F(X) = X_{1,0̃}``: the real body coordinate of ``x_1`` as a scalar output."""
    return BlackBox(lambda X: _scalar_out(X, X.even[0].body), m, n, t_degree=1, name="body-coordinate")


def conjugate_like(m: int = 1, n: int = 0) -> BlackBox:
    """``F(X) = x_B - x_S`` for the first even slot: flips the sign of the soul."""

    def fn(X: SuperPoint) -> Supernumber:
        x = X.even[0]
        return x.body - x.soul if len(x.soul) else x

    return BlackBox(fn, m, n, t_degree=1, name="conjugate-like")


def soul_killing() -> BlackBox:
    """``F(x, θ) = (π_B x_1)² + θ_1``: the even slot only enters through its body."""

    def fn(X: SuperPoint) -> Supernumber:
        b = X.even[0].body
        return X.odd[0] + b * b

    return BlackBox(fn, 1, 1, t_degree=2, name="soul-killing")


def coefficient_to_body(m: int = 1, n: int = 0) -> BlackBox:
    """``F(X) = X_{1,[1,2]}`` placed at the unit blade of the output."""
    idx = GIndex((1, 2))

    def fn(X: SuperPoint) -> Supernumber:
        return _scalar_out(X, X.even[0].proj_coeff(idx) if X.L >= 2 else 0)

    return BlackBox(fn, m, n, t_degree=1, name="coefficient-to-body")


def constant_map(value=3, m: int = 1, n: int = 0) -> BlackBox:
    return BlackBox(lambda X: _scalar_out(X, value), m, n, t_degree=0, name="constant")


def right_multiplication(u: Supernumber) -> Callable[[Supernumber], Supernumber]:
    """Even-linear odd map ``X ↦ X·u``."""
    return lambda X: X * u


def coefficient_swap_map() -> Callable[[Supernumber], Supernumber]:
    """``f(X_1 σ_1 + X_2 σ_2 + …) = X_1 σ_2`` on skeleton 2.

    Even-linear on the odd part of the two-generator algebra, yet not a right
    multiplication: ``σ_1 f(σ_1) = σ_1 σ_2 ≠ 0``.
    """

    def f(X: Supernumber) -> Supernumber:
        return Supernumber({(2,): X.proj_coeff((1,))}, max(X.L, 2), exact=X.exact)

    return f


NON_CR_FIXTURES: dict[str, Callable[[], BlackBox]] = {
    "body-coordinate": body_coordinate,
    "conjugate-like": conjugate_like,
    "soul-killing": soul_killing,
}

BLACKBOX_FIXTURES: dict[str, Callable[..., BlackBox]] = {
    **NON_CR_FIXTURES,
    "coefficient-to-body": coefficient_to_body,
    "constant": constant_map,
}
