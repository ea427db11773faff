import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import supernumbers
from supersmooth import jsonio
from supersmooth.fixtures import mixed_example
from supersmooth.sampling import make_rng, random_point, random_superfield
from supersmooth.scalars import GaussianRational
from supersmooth.smoothfn import AnalyticPrimitive, PolyMap, SumMap, SupernumberValuedMap
from supersmooth.superfield import BlackBox
from supersmooth.supernumber import Supernumber


def roundtrip(obj):
    return json.loads(jsonio.dumps(obj))


@given(st.data())
def test_supernumber_roundtrip(data):
    L = data.draw(st.integers(0, 8))
    X = data.draw(supernumbers(L, data.draw(st.integers(0, L))))
    assert jsonio.supernumber_from_json(roundtrip(jsonio.supernumber_to_json(X))) == X


def test_float_and_complex_supernumbers():
    X = Supernumber({(): 0.1, (1, 2): -3e-7}, 3)
    back = jsonio.supernumber_from_json(roundtrip(jsonio.supernumber_to_json(X)))
    assert not back.exact and back.max_abs_diff(X) == 0
    Z = Supernumber({(): GaussianRational(Fraction(1, 2), 3)}, 2)
    assert jsonio.supernumber_from_json(roundtrip(jsonio.supernumber_to_json(Z))) == Z


def test_point_roundtrip():
    X = random_point(make_rng(3), 2, 2, 5)
    assert jsonio.point_from_json(roundtrip(jsonio.point_to_json(X))) == X


@pytest.mark.parametrize("f", [
    PolyMap({(2, 1): Fraction(3, 4), (0, 0): -1}, 2),
    AnalyticPrimitive("inv_pow", [1, 2], offset=3, scale=Fraction(1, 2), power=3),
    SumMap([(2, AnalyticPrimitive("sin", [1])), (1, PolyMap.var(1, 1))]),
    SupernumberValuedMap({(1,): PolyMap.var(1, 1), (2, 3, 4): AnalyticPrimitive("exp", [1])}),
])
def test_function_roundtrip(f):
    back = jsonio.function_from_json(roundtrip(jsonio.function_to_json(f)))
    assert jsonio.function_to_json(back) == jsonio.function_to_json(f)


def test_superfield_roundtrip_and_forms():
    u = random_superfield(make_rng(9), 2, 3)
    assert jsonio.superfield_from_json(roundtrip(jsonio.superfield_to_json(u))) == u
    forms = jsonio.superfield_forms(mixed_example())
    assert forms["left"]["side"] == "left" and forms["right"]["side"] == "right"


def test_blackbox_reference():
    F = jsonio.evaluable_from_json({"kind": "blackbox", "name": "soul-killing"})
    assert isinstance(F, BlackBox) and (F.m, F.n) == (1, 1)
    assert jsonio.evaluable_to_json(F)["name"] == "soul-killing"


@pytest.mark.parametrize("obj, fragment", [
    ({"L": 2}, "missing key 'terms'"),
    ({"L": 2, "terms": [{"gens": [3]}]}, "supernumber"),
    ({"L": 2, "terms": [{"gens": [1], "re": "x"}]}, "terms[0].re"),
    ({"L": 2, "terms": [{"gens": [1]}, {"gens": [1]}]}, "duplicate"),
])
def test_supernumber_errors(obj, fragment):
    with pytest.raises(jsonio.SpecError, match=fragment.replace("[", r"\[").replace("]", r"\]")):
        jsonio.supernumber_from_json(obj)


def test_function_errors():
    with pytest.raises(jsonio.SpecError, match="unknown function kind"):
        jsonio.function_from_json({"kind": "tan"})
    with pytest.raises(jsonio.SpecError, match="expected 2 exponents"):
        jsonio.function_from_json({"kind": "poly", "m": 2, "terms": [{"exps": [1]}]})
    with pytest.raises(jsonio.SpecError, match="unknown black box"):
        jsonio.evaluable_from_json({"kind": "blackbox", "name": "nope"})


def test_odd_maps():
    f, L, D = jsonio.odd_map_from_json({"kind": "coefficient-linear", "L": 2,
                                        "images": [{"gens": [1], "value": {"L": 2, "terms": [{"gens": [2]}]}}]})
    X = Supernumber({(1,): 5, (2,): 7}, 2)
    assert (L, D) == (2, 2) and f(X) == Supernumber({(2,): 5}, 2)
    g, _, _ = jsonio.odd_map_from_json({"kind": "right-multiply", "L": 3,
                                        "u": {"L": 3, "terms": [{"gens": []}, {"gens": [2, 3]}]}})
    assert g(X.with_context(3)) == X.with_context(3) * Supernumber({(): 1, (2, 3): 1}, 3)


def test_dumps_is_canonical():
    assert jsonio.dumps({"b": 1, "a": [2]}) == '{\n  "a": [\n    2\n  ],\n  "b": 1\n}\n'
