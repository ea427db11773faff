from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import even_supernumbers
from oracles import oracle_poly_eval
from supersmooth.continuation import (
    continuation_partial,
    continue_analytic,
    grassmann_continue,
    taylor_expand_continued,
)
from supersmooth.gindex import DomainError
from supersmooth.sampling import make_rng, random_polymap
from supersmooth.smoothfn import AnalyticPrimitive, EvaluationError, PolyMap, SupernumberValuedMap
from supersmooth.supernumber import Supernumber

s = Supernumber({(1, 2): 1}, 4)
q2 = PolyMap({(2,): 1}, 1)
q3 = PolyMap({(3,): 1}, 1)


def test_continuation_examples():
    q = Fraction(5, 2)
    assert grassmann_continue(q2, [q + s]) == q * q + 2 * q * s
    assert grassmann_continue(q3, [2 + s]) == 8 + 12 * s
    assert grassmann_continue(PolyMap.const(7, 1), [2 + s]) == 7
    x = 3 + s + Supernumber({(3, 4): 2}, 4)
    assert grassmann_continue(PolyMap.var(1, 1), [x]) == x


def test_continuation_domain_error():
    with pytest.raises(EvaluationError):
        grassmann_continue(AnalyticPrimitive("log", [1]), [Supernumber.zero(2) + s.with_context(2)])
    with pytest.raises(DomainError):
        grassmann_continue(q2, [Supernumber({(1,): 1}, 2)])


def test_continuation_partial_examples():
    x = 3 + s
    assert continuation_partial(q2, [x], 1) == 2 * x
    x1, x2 = 2 + s, 5 + Supernumber({(3, 4): 1}, 4)
    assert continuation_partial(PolyMap({(1, 1): 1}, 2), [x1, x2], 2) == x1
    assert continuation_partial(PolyMap.const(4, 1), [x], 1).is_zero()


def test_taylor_examples():
    x, y = 2 + s, 1 + Supernumber({(3, 4): 1}, 4)
    assert taylor_expand_continued(q3, [x], [y], 3).exact
    res = taylor_expand_continued(q3, [x], [y], 2)
    assert res.defect == y * y * y
    zero = Supernumber.zero(4)
    for N in range(4):
        r = taylor_expand_continued(q3, [x], [zero], N)
        assert r.partial_sum == grassmann_continue(q3, [x])


def test_continue_analytic_examples():
    exp = AnalyticPrimitive("exp", [1])
    assert continue_analytic(exp, s) == 1 + s
    z = 0.5 + s.to_float()
    prod = continue_analytic(exp, z) * continue_analytic(AnalyticPrimitive("exp", [-1]), z)
    assert prod == Supernumber({(): 1.0}, 4)
    assert continue_analytic(AnalyticPrimitive("sin", [1]), Supernumber.zero(4)).is_zero()


def test_continuation_body_compatibility():
    f = AnalyticPrimitive("cos", [1, 2], offset=Fraction(1, 3))
    x = [Fraction(1, 4) + s, 1 + Supernumber({(1, 3): 1}, 4)]
    val = grassmann_continue(f, x)
    assert val.body == pytest.approx(f([Fraction(1, 4), 1]))


def test_supernumber_valued_continuation():
    g = SupernumberValuedMap({(): q2, (3,): PolyMap.var(1, 1)})
    x = 2 + s
    expect = grassmann_continue(q2, [x]) + Supernumber({(3,): 1}, 4) * x
    assert grassmann_continue(g, [x]) == expect


def _even_args(data, m, L, D):
    return [data.draw(even_supernumbers(L, D)) for _ in range(m)]


@given(st.data())
def test_homomorphism_on_polynomials(data):
    rng = make_rng(data.draw(st.integers(0, 10 ** 6)))
    m, L = data.draw(st.integers(1, 3)), data.draw(st.integers(2, 6))
    D = data.draw(st.integers(2, L))
    f, g = random_polymap(rng, m, 3), random_polymap(rng, m, 2)
    xs = _even_args(data, m, L, D)
    assert grassmann_continue(f * g, xs) == grassmann_continue(f, xs) * grassmann_continue(g, xs)
    assert grassmann_continue(f + g, xs) == grassmann_continue(f, xs) + grassmann_continue(g, xs)
    # independent oracle: evaluate the polynomial in the algebra directly
    assert grassmann_continue(f, xs) == oracle_poly_eval(f.terms, xs, L, D)


@given(st.data())
def test_partial_commutes_with_continuation(data):
    rng = make_rng(data.draw(st.integers(0, 10 ** 6)))
    m, L = data.draw(st.integers(1, 3)), data.draw(st.integers(2, 6))
    f = random_polymap(rng, m, 5)
    xs = _even_args(data, m, L, L)
    for j in range(1, m + 1):
        continuation_partial(f, xs, j)  # raises on disagreement


def test_partial_commutes_for_analytic_builtins():
    xs = [Fraction(1, 3) + s, Fraction(1, 2) + Supernumber({(1, 3): 1, (2, 4): -1}, 4)]
    for kind in ("exp", "sin", "cos", "log", "inv_pow"):
        f = AnalyticPrimitive(kind, [1, 2], offset=1)
        for j in (1, 2):
            g = f
            for _ in range(3):
                continuation_partial(g, xs, j)
                g = g.d(j)


def test_zero_polynomial_continues_to_zero():
    zero = PolyMap({(1, 1): 1}, 2) - PolyMap({(1, 1): 1}, 2)
    xs = [2 + s, 1 + Supernumber({(3, 4): 3}, 4)]
    assert grassmann_continue(zero, xs).is_zero()


@given(st.data())
def test_directional_derivative_formula(data):
    rng = make_rng(data.draw(st.integers(0, 10 ** 6)))
    m, L = data.draw(st.integers(1, 2)), data.draw(st.integers(2, 5))
    f = random_polymap(rng, m, 4)
    xs = _even_args(data, m, L, L)
    ys = _even_args(data, m, L, L)
    # d/dt f~(x + t y) at 0 from the polynomial-in-t expansion: exact Lagrange derivative
    nodes = list(range(-3, 4))
    vals = [grassmann_continue(f, [x + t * y for x, y in zip(xs, ys)]) for t in nodes]
    from supersmooth.superfield import _lagrange_derivative_weights

    deriv = Supernumber.zero(L)
    for w, v in zip(_lagrange_derivative_weights(nodes), vals):
        deriv = deriv + v * w
    rhs = Supernumber.zero(L)
    for j, y in enumerate(ys, 1):
        rhs = rhs + y * grassmann_continue(f.d(j), xs)
    assert deriv == rhs
