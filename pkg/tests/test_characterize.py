import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import supernumbers
from supersmooth.characterize import (
    canonical_mod_ambiguity,
    cr_check,
    dual_represent,
    equivalence_suite,
    g1_witness,
    projectability_check,
    random_roundtrip_suite,
    solve_sigma,
)
from supersmooth.continuation import continue_analytic
from supersmooth.fixtures import (
    NON_CR_FIXTURES,
    body_coordinate,
    coefficient_swap_map,
    coefficient_to_body,
    constant_map,
    mixed_example,
    right_multiplication,
    square_plus_odd,
)
from supersmooth.sampling import make_rng, random_point, random_superfield
from supersmooth.smoothfn import AnalyticPrimitive, PolyMap
from supersmooth.superfield import BlackBox, Superfield
from supersmooth.supernumber import Supernumber, sigma
from supersmooth.superspace import SuperPoint


def point(even, odd=(), L=4):
    return SuperPoint(list(even), list(odd), L, L)


X1 = point([2 + sigma(1, 4) * sigma(2, 4)])


def test_cr_examples():
    res = cr_check(Superfield({(): PolyMap.var(1, 1)}, 1, 0), X1)
    assert res.passed and res.residual == 0
    res = cr_check(body_coordinate(), X1)
    assert res.status == "fail" and res.residual > 0
    assert {f["slot"] for f in res.witnesses["failures"]} == {1}
    assert all(f["I"] != "[]" and len(f["I"].strip("[]").split(",")) % 2 == 0
               for f in res.witnesses["failures"])


@given(st.integers(0, 10 ** 6), st.integers(2, 5))
@settings(max_examples=25)
def test_cr_passes_on_polynomial_superfields(seed, L):
    rng = make_rng(seed)
    u = random_superfield(rng, rng.randint(1, 2), rng.randint(0, 2))
    res = cr_check(u, random_point(rng, u.m, u.n, L))
    assert res.passed and res.residual == 0


def test_cr_passes_on_continued_analytic_map():
    def fn(X):
        return continue_analytic(AnalyticPrimitive("exp", [1]), X.even[0].to_float())

    F = BlackBox(fn, 1, 0, name="exp")
    res = cr_check(F, X1)
    assert res.passed and res.residual <= 1e-6
    assert res.witnesses["methods"] == ["finite-difference"]


@pytest.mark.parametrize("name", sorted(NON_CR_FIXTURES))
def test_cr_fails_on_non_examples(name):
    F = NON_CR_FIXTURES[name]()
    X = point([Fraction(3) + sigma(1, 4) * sigma(2, 4)], [sigma(3, 4)] * F.n)
    res = cr_check(F, X)
    assert res.status == "fail" and res.residual > 0
    for f in res.witnesses["failures"]:
        assert f["slot"] == 1 and f["J"] == "[]"


def test_g1_examples():
    X = point([Fraction(2)], [sigma(1, 4)])
    res, wit = g1_witness(Superfield({(1,): 1}, 1, 1), X)
    assert res.passed and wit[2] == 1
    u = Superfield({(): PolyMap({(2,): 1}, 1)}, 1, 0)
    res, wit = g1_witness(u, X1)
    assert res.passed and wit[1] == 2 * X1.even[0]


def test_g1_infeasible_for_coefficient_swap():
    swap = coefficient_swap_map()
    F = BlackBox(lambda X: swap(X.odd[0]), 0, 1, t_degree=1)
    res, _ = g1_witness(F, point([], [sigma(1, 2)], L=2))
    assert res.status == "fail" and res.witnesses["pair"] == [1, 1]


def test_solve_sigma_examples():
    s1, s2 = sigma(1, 2), sigma(2, 2)
    sol = solve_sigma([s1 * s2, Supernumber.zero(2)], 2)
    assert sol.feasible and sol.F == s2 and "[1,2]" in sol.ambiguity
    sol = solve_sigma([Supernumber.zero(3)] * 3, 3)
    assert sol.feasible and sol.F.is_zero()
    sol = solve_sigma([s2, Supernumber.zero(2)], 2)
    assert not sol.feasible and sol.witness_pair == (1, 1)


@given(st.data())
def test_solve_sigma_roundtrip(data):
    L = data.draw(st.integers(1, 6))
    F = data.draw(supernumbers(L, L))
    sol = solve_sigma([sigma(i, L) * F for i in range(1, L + 1)], L)
    assert sol.feasible
    assert sol.F == canonical_mod_ambiguity(F)


@given(st.data())
def test_solve_sigma_rejects_incompatible(data):
    L = data.draw(st.integers(2, 5))
    F = data.draw(supernumbers(L, L))
    A = [sigma(i, L) * F for i in range(1, L + 1)]
    i = data.draw(st.integers(1, L))
    # a blade without σ_i breaks σ_i A_i = 0
    j = data.draw(st.integers(1, L).filter(lambda k: k != i))
    A[i - 1] = A[i - 1] + sigma(j, L)
    sol = solve_sigma(A, L)
    assert not sol.feasible
    a, b = sol.witness_pair
    assert not (sigma(b, L) * A[a - 1] + sigma(a, L) * A[b - 1]).is_zero()


def test_dual_examples():
    u = 1 + sigma(1, 4) * sigma(2, 4)
    res = dual_represent(right_multiplication(u), 4)
    assert res.representable and res.u == canonical_mod_ambiguity(u)
    res = dual_represent(lambda X: Supernumber.zero(3), 3)
    assert res.representable and res.u.is_zero()
    res = dual_represent(coefficient_swap_map(), 2)
    assert res.status == "infeasible"
    assert res.witness["pair"] == [1, 1] and "1*[1,2]" in res.witness["reason"]


def test_dual_linearity_failure():
    res = dual_represent(lambda X: X * X.proj_coeff((1,)) if X.L else X, 3)
    assert res.status == "linearity-failure"


def test_projectability_examples():
    assert projectability_check(mixed_example(), [(2, 4), (3, 5)], samples=3).passed
    assert projectability_check(constant_map(), [(1, 3)], samples=3).passed
    assert projectability_check(coefficient_to_body(), [(2, 4)], samples=5).passed
    res = projectability_check(coefficient_to_body(), [(1, 3)], samples=5)
    assert res.status == "fail" and res.witnesses["failure_count"] > 0


def test_equivalence_suite_examples():
    rng = make_rng(0)
    for u in (mixed_example(), square_plus_odd()):
        pts = [random_point(rng, u.m, u.n, 4) for _ in range(2)]
        rep = equivalence_suite(u, pts)
        assert rep.passed, rep.table()
    rep = equivalence_suite(body_coordinate(), [X1])
    assert not rep.passed
    assert [c.status for c in rep.checks if c.name.endswith("cr_check")] == ["fail"]


@given(st.integers(0, 10 ** 6))
@settings(max_examples=20)
def test_witnesses_match_partials(seed):
    rng = make_rng(seed)
    u = random_superfield(rng, rng.randint(1, 2), rng.randint(1, 3))
    X = random_point(rng, u.m, u.n, rng.randint(2, 5))
    res, wit = g1_witness(u, X)
    assert res.passed
    for j in range(1, u.m + 1):
        assert wit[j] == u.partial_even(j)(X)
    for s in range(1, u.n + 1):
        assert canonical_mod_ambiguity(wit[u.m + s]) == canonical_mod_ambiguity(u.partial_odd_left(s)(X))


def test_report_is_deterministic_json():
    a = random_roundtrip_suite(seed=11, count=4)
    b = random_roundtrip_suite(seed=11, count=4)
    assert a.dumps() == b.dumps()
    parsed = json.loads(a.dumps())
    assert parsed["passed"] and {c["anchor"] for c in parsed["checks"]} >= {"cauchy-riemann", "g1-witness"}
    assert "overall: PASS" in a.table()
