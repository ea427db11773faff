"""JSON formats for supernumbers, points, function specs, superfields and odd maps.

Scalars are written as strings: rationals as ``"p/q"`` (or integers) in exact
mode, ``repr`` of the float otherwise.  Exact values round-trip bit-exactly.
"""

from __future__ import annotations

import json
from typing import Any, Callable

from . import scalars
from .fixtures import BLACKBOX_FIXTURES
from .gindex import GIndex, as_gindex
from .smoothfn import AnalyticPrimitive, PolyMap, SmoothMap, SumMap, SupernumberValuedMap
from .superfield import BlackBox, Superfield
from .supernumber import Supernumber
from .superspace import SuperPoint


class SpecError(ValueError):
    """Malformed JSON input; the message names the offending location."""


def _need(obj: dict, key: str, where: str):
    if not isinstance(obj, dict):
        raise SpecError(f"{where}: expected an object, got {type(obj).__name__}")
    if key not in obj:
        raise SpecError(f"{where}: missing key {key!r}")
    return obj[key]


def _scalar(text, exact: bool, where: str):
    try:
        return scalars.parse_scalar(text, exact)
    except (ValueError, TypeError) as exc:
        raise SpecError(f"{where}: {exc}") from exc


def scalar_pair(v) -> tuple[str, str]:
    re, im = scalars.real_part(v), scalars.imag_part(v)
    return scalars.format_scalar(re), scalars.format_scalar(im)


# supernumbers


def supernumber_to_json(X: Supernumber) -> dict:
    terms = []
    for I, v in X.items():
        re, im = scalar_pair(v)
        terms.append({"gens": list(I.gens), "re": re, "im": im})
    return {"L": X.L, "D": X.D, "mode": "exact" if X.exact else "float", "terms": terms}


def supernumber_from_json(obj: Any, exact: bool | None = None, where: str = "supernumber") -> Supernumber:
    L = _need(obj, "L", where)
    D = obj.get("D", L)
    if exact is None:
        exact = obj.get("mode", "exact") != "float"
    terms = {}
    for k, t in enumerate(_need(obj, "terms", where)):
        w = f"{where}.terms[{k}]"
        gens = _need(t, "gens", w)
        # a bare blade means coefficient 1
        re = _scalar(t.get("re", "0" if "im" in t else "1"), exact, w + ".re")
        im = _scalar(t.get("im", "0"), exact, w + ".im")
        v = scalars.make_complex(re, im, exact) if im else re
        try:
            key = GIndex(gens)
        except ValueError as exc:
            raise SpecError(f"{w}.gens: {exc}") from exc
        if key in terms:
            raise SpecError(f"{w}: duplicate index {gens}")
        terms[key] = v
    try:
        return Supernumber(terms, L, D, exact=exact)
    except (ValueError, TypeError) as exc:
        raise SpecError(f"{where}: {exc}") from exc


# points


def point_to_json(X: SuperPoint) -> dict:
    return {"m": X.m, "n": X.n, "L": X.L, "D": X.D,
            "even": [supernumber_to_json(s) for s in X.even],
            "odd": [supernumber_to_json(s) for s in X.odd]}


def point_from_json(obj: Any, exact: bool | None = None, where: str = "point") -> SuperPoint:
    even = [supernumber_from_json(s, exact, f"{where}.even[{k}]") for k, s in enumerate(obj.get("even", []))]
    odd = [supernumber_from_json(s, exact, f"{where}.odd[{k}]") for k, s in enumerate(obj.get("odd", []))]
    if "m" in obj and obj["m"] != len(even) or "n" in obj and obj["n"] != len(odd):
        raise SpecError(f"{where}: declared shape {obj.get('m')}|{obj.get('n')} does not match the slots")
    slots = even + odd
    L = obj.get("L", max((s.L for s in slots), default=0))
    D = obj.get("D", min((s.D for s in slots), default=L))
    try:
        return SuperPoint(even, odd, L, D)
    except ValueError as exc:
        raise SpecError(f"{where}: {exc}") from exc


def points_from_json(obj: Any, exact: bool | None = None) -> list[SuperPoint]:
    if isinstance(obj, dict) and "points" in obj:
        obj = obj["points"]
    if isinstance(obj, dict):
        obj = [obj]
    return [point_from_json(p, exact, f"points[{k}]") for k, p in enumerate(obj)]


# functions


def function_to_json(f) -> dict:
    if isinstance(f, PolyMap):
        terms = [{"exps": list(e), "coef": scalars.format_scalar(c)} for e, c in sorted(f.terms.items())]
        return {"kind": "poly", "m": f.m, "terms": terms}
    if isinstance(f, AnalyticPrimitive):
        out = {"kind": f.kind, "affine": {"coeffs": [scalars.format_scalar(c) for c in f.coeffs],
                                          "offset": scalars.format_scalar(f.offset)},
               "scale": scalars.format_scalar(f.scale)}
        if f.kind == "inv_pow":
            out["power"] = f.power
        return out
    if isinstance(f, SumMap):
        return {"kind": "sum", "parts": [{"coef": scalars.format_scalar(c), "fn": function_to_json(g)}
                                         for c, g in f.parts]}
    if isinstance(f, SupernumberValuedMap):
        return {"kind": "supernumber-valued", "m": f.m,
                "components": [{"gens": list(I.gens), "fn": function_to_json(g)}
                               for I, g in sorted(f.components.items(), key=lambda kv: kv[0].mask)]}
    raise TypeError(f"cannot serialize {type(f).__name__}")


def function_from_json(obj: Any, where: str = "fn"):
    kind = _need(obj, "kind", where)
    if kind == "poly":
        m = _need(obj, "m", where)
        terms = {}
        for k, t in enumerate(_need(obj, "terms", where)):
            exps = tuple(_need(t, "exps", f"{where}.terms[{k}]"))
            if len(exps) != m:
                raise SpecError(f"{where}.terms[{k}].exps: expected {m} exponents")
            terms[exps] = terms.get(exps, 0) + _scalar(t.get("coef", "1"), True, f"{where}.terms[{k}].coef")
        return PolyMap(terms, m)
    if kind in ("exp", "sin", "cos", "log", "inv_pow"):
        aff = _need(obj, "affine", where)
        coeffs = [_scalar(c, True, f"{where}.affine.coeffs") for c in _need(aff, "coeffs", where + ".affine")]
        offset = _scalar(aff.get("offset", "0"), True, f"{where}.affine.offset")
        scale = _scalar(obj.get("scale", "1"), True, f"{where}.scale")
        return AnalyticPrimitive(kind, coeffs, offset, scale, int(obj.get("power", 1)))
    if kind == "sum":
        parts = [(_scalar(p.get("coef", "1"), True, f"{where}.parts[{k}].coef"),
                  function_from_json(_need(p, "fn", f"{where}.parts[{k}]"), f"{where}.parts[{k}].fn"))
                 for k, p in enumerate(_need(obj, "parts", where))]
        return SumMap(parts)
    if kind == "supernumber-valued":
        comps = {}
        for k, c in enumerate(_need(obj, "components", where)):
            comps[as_gindex(_need(c, "gens", f"{where}.components[{k}]"))] = function_from_json(
                _need(c, "fn", f"{where}.components[{k}]"), f"{where}.components[{k}].fn")
        return SupernumberValuedMap(comps, obj.get("m"))
    raise SpecError(f"{where}: unknown function kind {kind!r}")


# superfields and black boxes


def superfield_to_json(u: Superfield) -> dict:
    return {"m": u.m, "n": u.n, "side": u.side,
            "coeffs": [{"a": list(a), "fn": function_to_json(f)} for a, f in u.coeffs.items()]}


def superfield_forms(u: Superfield) -> dict:
    """Both orderings, as emitted in reports."""
    return {"left": superfield_to_json(u.to_left()), "right": superfield_to_json(u.to_right())}


def superfield_from_json(obj: Any, where: str = "superfield") -> Superfield:
    m, n = _need(obj, "m", where), _need(obj, "n", where)
    coeffs = {}
    for k, c in enumerate(_need(obj, "coeffs", where)):
        a = tuple(_need(c, "a", f"{where}.coeffs[{k}]"))
        if a in coeffs:
            raise SpecError(f"{where}.coeffs[{k}]: duplicate multi-index {list(a)}")
        coeffs[a] = function_from_json(_need(c, "fn", f"{where}.coeffs[{k}]"), f"{where}.coeffs[{k}].fn")
    try:
        return Superfield(coeffs, m, n, side=obj.get("side", "left"))
    except ValueError as exc:
        raise SpecError(f"{where}: {exc}") from exc


def evaluable_from_json(obj: Any, where: str = "function"):
    """A Superfield, or a named black-box fixture ``{"kind": "blackbox", "name": ...}``."""
    if isinstance(obj, dict) and obj.get("kind") == "blackbox":
        name = _need(obj, "name", where)
        if name not in BLACKBOX_FIXTURES:
            raise SpecError(f"{where}: unknown black box {name!r}; known: {sorted(BLACKBOX_FIXTURES)}")
        kwargs = {k: obj[k] for k in ("m", "n") if k in obj}
        try:
            return BLACKBOX_FIXTURES[name](**kwargs)
        except TypeError as exc:
            raise SpecError(f"{where}: {exc}") from exc
    return superfield_from_json(obj, where)


def evaluable_to_json(F) -> dict:
    if isinstance(F, Superfield):
        return superfield_to_json(F)
    if isinstance(F, BlackBox):
        return {"kind": "blackbox", "name": F.name, "m": F.m, "n": F.n}
    raise TypeError(f"cannot serialize {type(F).__name__}")


# odd maps for the duality construction


def odd_map_from_json(obj: Any, exact: bool | None = None,
                      where: str = "map") -> tuple[Callable[[Supernumber], Supernumber], int, int]:
    """Returns ``(f, L, D)``.

    Kinds: ``right-multiply`` (``f(X) = X·u``) and ``coefficient-linear``
    (``f(X) = Σ_I X_I v_I`` over listed odd blades ``I``).
    """
    kind = _need(obj, "kind", where)
    L = _need(obj, "L", where)
    D = obj.get("D", L)
    if kind == "right-multiply":
        u = supernumber_from_json(_need(obj, "u", where), exact, where + ".u").with_context(L, D)
        return (lambda X: X * u), L, D
    if kind == "coefficient-linear":
        images = []
        for k, img in enumerate(_need(obj, "images", where)):
            w = f"{where}.images[{k}]"
            I = as_gindex(_need(img, "gens", w))
            v = supernumber_from_json(_need(img, "value", w), exact, w + ".value").with_context(L, D)
            images.append((I, v))

        def f(X: Supernumber) -> Supernumber:
            total = Supernumber.zero(L, D, X.exact)
            for I, v in images:
                c = X.proj_coeff(I)
                if c != 0:
                    total = total + v * c
            return total

        return f, L, D
    raise SpecError(f"{where}: unknown map kind {kind!r}")


def dumps(obj: Any) -> str:
    """Deterministic JSON text (sorted keys, two-space indent, trailing newline)."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def function_spec(f: SmoothMap | SupernumberValuedMap) -> dict:
    return function_to_json(f)
