"""Command-line front end.

Every input argument is a path to a JSON file, ``-`` for standard input, or
an inline JSON document.  Algebra commands print canonical JSON; check
commands print a table and write the JSON report to ``--out``.

Exit codes: 0 pass, 1 check failure, 2 usage, parse or evaluation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass
from pathlib import Path

from . import jsonio
from .characterize import (
    FLOAT_TOL,
    Report,
    coordinate_derivatives,
    cr_check,
    dual_represent,
    equivalence_suite,
    g1_witness,
    projectability_check,
    random_roundtrip_suite,
    solve_sigma,
)
from .continuation import grassmann_continue
from .gindex import MAX_GENERATOR, DomainError, from_text
from .smoothfn import EvaluationError
from .superfield import (
    DEFAULT_FD_STEP,
    ConfigurationError,
    Superfield,
    coord_partial,
    directional_derivative,
    superfield_extract,
    taylor_superfield,
)
from .supernumber import CarrierError, Supernumber
from .superspace import CoordIndex, SuperPoint

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    """Settings shared by all subcommands.

    Attributes:
        skeleton: generator bound ``L`` inputs are re-homed to (``None`` keeps theirs).
        cutoff: degree cutoff ``D`` (``None`` keeps theirs).
        mode: ``"exact"`` or ``"float"`` scalar carrier.
        tol: float-mode tolerance for check residuals.
        fd_step: finite-difference step for black boxes without a degree declaration.
        coord_cap: per-slot cap on enumerated coordinates.
        seed: seed for every randomized step.
        suite: check selection for ``suite``.
        out: report path.
    """

    skeleton: int | None = None
    cutoff: int | None = None
    mode: str = "exact"
    tol: float = FLOAT_TOL
    fd_step: float = DEFAULT_FD_STEP
    coord_cap: int | None = None
    seed: int = 0
    suite: str = "all"
    out: str | None = None

    def validate(self):
        if self.skeleton is not None and not 0 <= self.skeleton <= MAX_GENERATOR:
            raise UsageError(f"--skeleton must lie in 0..{MAX_GENERATOR}")
        if self.cutoff is not None:
            if self.cutoff < 0:
                raise UsageError("--cutoff must be nonnegative")
            if self.skeleton is not None and self.cutoff > self.skeleton:
                raise UsageError("--cutoff must not exceed --skeleton")
        if self.mode not in ("exact", "float"):
            raise UsageError("--mode must be exact or float")
        if self.tol <= 0:
            raise UsageError("--tol must be positive")
        if self.fd_step <= 0:
            raise UsageError("--fd-step must be positive")

    @property
    def exact(self) -> bool:
        return self.mode == "exact"

    def public(self) -> dict:
        d = asdict(self)
        d.pop("out")
        return d


# input helpers


def _load(arg: str):
    if arg == "-":
        text, src = sys.stdin.read(), "<stdin>"
    elif arg.lstrip().startswith(("{", "[")):
        text, src = arg, "<inline>"
    else:
        try:
            text, src = Path(arg).read_text(), arg
        except OSError as exc:
            raise UsageError(f"cannot read {arg}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{src}: JSON parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc


def _rehome_sn(X: Supernumber, cfg: RunConfig, what: str) -> Supernumber:
    if cfg.skeleton is not None and X.support_bound > cfg.skeleton:
        raise UsageError(f"{what} uses generator {X.support_bound} beyond --skeleton {cfg.skeleton}")
    L = X.L if cfg.skeleton is None else cfg.skeleton
    D = min(L, X.D if cfg.cutoff is None else cfg.cutoff)
    X = X.with_context(L, D)
    return X if cfg.exact else X.to_float()


def _rehome_pt(X: SuperPoint, cfg: RunConfig, what: str) -> SuperPoint:
    ev = [_rehome_sn(s, cfg, f"{what}.even[{k}]") for k, s in enumerate(X.even)]
    od = [_rehome_sn(s, cfg, f"{what}.odd[{k}]") for k, s in enumerate(X.odd)]
    L = X.L if cfg.skeleton is None else cfg.skeleton
    D = min(L, X.D if cfg.cutoff is None else cfg.cutoff)
    return SuperPoint(ev, od, L, D)


def _supernumber(arg: str, cfg: RunConfig, what: str) -> Supernumber:
    return _rehome_sn(jsonio.supernumber_from_json(_load(arg), None, what), cfg, what)


def _point(arg: str, cfg: RunConfig, what: str = "point") -> SuperPoint:
    obj = _load(arg)
    if isinstance(obj, list):
        sns = [jsonio.supernumber_from_json(s, None, f"{what}[{k}]") for k, s in enumerate(obj)]
        return _rehome_pt(SuperPoint(sns, []), cfg, what)
    return _rehome_pt(jsonio.point_from_json(obj, None, what), cfg, what)


def _points(arg: str, cfg: RunConfig) -> list[SuperPoint]:
    return [_rehome_pt(p, cfg, f"points[{k}]") for k, p in enumerate(jsonio.points_from_json(_load(arg)))]


def _emit_json(obj, cfg: RunConfig):
    text = jsonio.dumps(obj)
    sys.stdout.write(text)
    if cfg.out:
        Path(cfg.out).write_text(text)


def _emit_report(report: Report, cfg: RunConfig) -> int:
    print(report.table())
    if cfg.out:
        Path(cfg.out).write_text(report.dumps())
    return EXIT_PASS if report.passed else EXIT_FAIL


def _note_promotion(*xs: Supernumber):
    Ls = {x.L for x in xs}
    Ds = {x.D for x in xs}
    if len(Ls) > 1 or len(Ds) > 1:
        print(f"note: skeleton/cutoff mismatch {sorted(Ls)}/{sorted(Ds)}; "
              f"result uses L={max(Ls)}, D={min(Ds)}", file=sys.stderr)


# commands


def cmd_mul(args, cfg):
    X, Y = _supernumber(args.x, cfg, "x"), _supernumber(args.y, cfg, "y")
    _note_promotion(X, Y)
    _emit_json(jsonio.supernumber_to_json(X * Y), cfg)
    return EXIT_PASS


def cmd_add(args, cfg):
    X, Y = _supernumber(args.x, cfg, "x"), _supernumber(args.y, cfg, "y")
    _note_promotion(X, Y)
    _emit_json(jsonio.supernumber_to_json(X + Y), cfg)
    return EXIT_PASS


def cmd_dist(args, cfg):
    X = _supernumber(args.x, cfg, "x")
    Y = _supernumber(args.y, cfg, "y") if args.y else None
    d = X.dist(Y)
    _emit_json({"dist": jsonio.scalars.format_scalar(d)}, cfg)
    return EXIT_PASS


def cmd_project(args, cfg):
    X = _supernumber(args.x, cfg, "x")
    if args.target > X.L:
        raise UsageError(f"cannot project skeleton {X.L} onto larger skeleton {args.target}")
    _emit_json(jsonio.supernumber_to_json(X.skeleton_project(args.target)), cfg)
    return EXIT_PASS


def cmd_continue(args, cfg):
    f = jsonio.function_from_json(_load(args.fn))
    X = _point(args.point, cfg)
    _emit_json(jsonio.supernumber_to_json(grassmann_continue(f, X.even, X.L, X.D)), cfg)
    return EXIT_PASS


def _evaluable(arg):
    return jsonio.evaluable_from_json(_load(arg))


def _parse_coord(text: str) -> CoordIndex:
    try:
        slot, idx = text.split(":", 1)
        return CoordIndex(int(slot), from_text(idx))
    except ValueError as exc:
        raise UsageError(f"bad coordinate {text!r}; expected e.g. 1:[1,2]") from exc


def cmd_derive(args, cfg):
    F = _evaluable(args.function)
    X = _point(args.point, cfg)
    chosen = [v is not None for v in (args.coord, args.direction, args.even, args.odd)]
    if sum(chosen) != 1:
        raise UsageError("choose exactly one of --coord, --direction, --even, --odd")
    if args.coord:
        val = coord_partial(F, X, _parse_coord(args.coord), cfg.fd_step)
    elif args.direction:
        val, _ = directional_derivative(F, X, _point(args.direction, cfg, "direction"), cfg.fd_step)
    else:
        if not isinstance(F, Superfield):
            raise UsageError("--even/--odd need a superfield input")
        val = (F.partial_even(args.even) if args.even else F.to_left().partial_odd_left(args.odd)).eval(X)
    _emit_json(jsonio.supernumber_to_json(val), cfg)
    return EXIT_PASS


def cmd_taylor(args, cfg):
    u = jsonio.superfield_from_json(_load(args.superfield))
    X, Y = _point(args.point, cfg), _point(args.direction, cfg, "direction")
    res = taylor_superfield(u, X, Y, args.order)
    _emit_json({"order": args.order, "partial_sum": jsonio.supernumber_to_json(res.partial_sum),
                "target": jsonio.supernumber_to_json(res.target),
                "defect": jsonio.supernumber_to_json(res.defect), "exact": res.exact}, cfg)
    return EXIT_PASS


def cmd_extract(args, cfg):
    F = _evaluable(args.function)
    X = _point(args.point, cfg)
    coeffs = superfield_extract(F, X.even, F.n, args.budget, X.L, X.D)
    _emit_json({"coefficients": [{"a": list(a), "value": jsonio.supernumber_to_json(v)}
                                 for a, v in coeffs.items()]}, cfg)
    return EXIT_PASS


def _report(title, cfg, F=None) -> Report:
    rep = Report(title, config=cfg.public())
    if isinstance(F, Superfield):
        rep.config["superfield"] = jsonio.superfield_forms(F)
    elif F is not None:
        rep.config["function"] = jsonio.evaluable_to_json(F)
    return rep


def cmd_cr_check(args, cfg):
    F = _evaluable(args.function)
    rep = _report("cr-check", cfg, F)
    for k, X in enumerate(_points(args.points, cfg)):
        res = cr_check(F, X, cfg.coord_cap, cfg.tol, cfg.fd_step)
        res.name = f"p{k}:cr_check"
        rep.add(res)
    return _emit_report(rep, cfg)


def cmd_witness(args, cfg):
    F = _evaluable(args.function)
    rep = _report("witness", cfg, F)
    for k, X in enumerate(_points(args.points, cfg)):
        res, _ = g1_witness(F, X, cfg.coord_cap, cfg.tol, cfg.fd_step)
        res.name = f"p{k}:g1_witness"
        rep.add(res)
    return _emit_report(rep, cfg)


def cmd_solve_sigma(args, cfg):
    obj = _load(args.input)
    comps = [jsonio.supernumber_from_json(a, None, f"A[{k}]") for k, a in enumerate(jsonio._need(obj, "A", "input"))]
    L = obj.get("L", len(comps))
    D = obj.get("D", L)
    comps = [c.with_context(L, D) if cfg.exact else c.with_context(L, D).to_float() for c in comps]
    sol = solve_sigma(comps, L, D)
    out = {"feasible": sol.feasible, "ambiguity": sol.ambiguity, "detail": sol.detail,
           "witness_pair": list(sol.witness_pair) if sol.witness_pair else None,
           "F": jsonio.supernumber_to_json(sol.F) if sol.F is not None else None}
    _emit_json(out, cfg)
    return EXIT_PASS if sol.feasible else EXIT_FAIL


def cmd_dual(args, cfg):
    f, L, D = jsonio.odd_map_from_json(_load(args.map), None if cfg.exact else False)
    res = dual_represent(f, L, D)
    out = {"status": res.status, "ambiguity": res.ambiguity, "witness": res.witness,
           "u": jsonio.supernumber_to_json(res.u) if res.u is not None else None}
    _emit_json(out, cfg)
    return EXIT_PASS if res.representable else EXIT_FAIL


SUITES = ("all", "cr", "witness", "gateaux", "extract", "projectability", "random")


def cmd_suite(args, cfg):
    if args.function is None or cfg.suite == "random":
        rep = random_roundtrip_suite(cfg.seed, count=args.count, cap=cfg.coord_cap)
        rep.config.update(cfg.public())
        return _emit_report(rep, cfg)
    F = _evaluable(args.function)
    rep = _report("suite", cfg, F)
    if cfg.suite == "projectability":
        pairs = [(1, 3), (2, 4)] if args.pairs is None else [tuple(map(int, p.split(","))) for p in args.pairs]
        rep.add(projectability_check(F, pairs, seed=cfg.seed))
        return _emit_report(rep, cfg)
    if args.points is None:
        raise UsageError("suite needs a points file unless --suite random or projectability is selected")
    full = equivalence_suite(F, _points(args.points, cfg), cfg.seed, cfg.coord_cap, cfg.tol, cfg.fd_step)
    wanted = {"all": None, "cr": "cauchy-riemann", "witness": "g1-witness",
              "gateaux": "gateaux-factorization", "extract": "superfield-expansion"}[cfg.suite]
    rep.extend(c for c in full.checks if wanted is None or c.anchor == wanted)
    return _emit_report(rep, cfg)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--skeleton", type=int, help="generator bound L (default: taken from inputs)")
    common.add_argument("--cutoff", type=int, help="degree cutoff D (default: taken from inputs)")
    common.add_argument("--mode", choices=("exact", "float"), default="exact", help="scalar carrier (default exact)")
    common.add_argument("--tol", type=float, default=FLOAT_TOL, help="float-mode check tolerance (default 1e-6)")
    common.add_argument("--fd-step", type=float, default=DEFAULT_FD_STEP,
                        help="finite-difference step for black boxes (default 1e-5)")
    common.add_argument("--coord-cap", type=int, help="max coordinates enumerated per slot (default: all)")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized steps (default 0)")
    common.add_argument("--suite", choices=SUITES, default="all", help="check selection for 'suite'")
    common.add_argument("--out", help="write the JSON result or report here")

    p = argparse.ArgumentParser(prog="supersmooth", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=fn)
        return sp

    for name, fn in (("mul", cmd_mul), ("add", cmd_add)):
        sp = add(name, fn, f"{name} two supernumbers")
        sp.add_argument("x")
        sp.add_argument("y")
    sp = add("dist", cmd_dist, "metric distance to zero or between two supernumbers")
    sp.add_argument("x")
    sp.add_argument("y", nargs="?")
    sp = add("project", cmd_project, "skeleton projection onto generators 1..target")
    sp.add_argument("x")
    sp.add_argument("target", type=int)
    sp = add("continue", cmd_continue, "Grassmann continuation of a JSON function at a point")
    sp.add_argument("fn")
    sp.add_argument("point")
    sp = add("derive", cmd_derive, "coordinate, directional or partial derivative at a point")
    sp.add_argument("function")
    sp.add_argument("point")
    sp.add_argument("--coord", help="coordinate as slot:[gens], e.g. 1:[1,2]")
    sp.add_argument("--direction", help="direction point for a Gateaux derivative")
    sp.add_argument("--even", type=int, help="even variable index for ∂_x")
    sp.add_argument("--odd", type=int, help="odd variable index for the left ∂_θ")
    sp = add("taylor", cmd_taylor, "Taylor partial sum of a superfield and its defect")
    sp.add_argument("superfield")
    sp.add_argument("point")
    sp.add_argument("direction")
    sp.add_argument("--order", type=int, required=True)
    sp = add("extract", cmd_extract, "recover superfield coefficients with fresh generators")
    sp.add_argument("function")
    sp.add_argument("point")
    sp.add_argument("--budget", type=int, help="fresh generators available (default n)")
    sp = add("cr-check", cmd_cr_check, "verify the Cauchy-Riemann system")
    sp.add_argument("function")
    sp.add_argument("points")
    sp = add("witness", cmd_witness, "recover superdifferentiability witnesses")
    sp.add_argument("function")
    sp.add_argument("points")
    sp = add("solve-sigma", cmd_solve_sigma, "solve A_i = σ_i F")
    sp.add_argument("input")
    sp = add("dual", cmd_dual, "represent an even-linear odd map as a right multiplication")
    sp.add_argument("map")
    sp = add("suite", cmd_suite, "consolidated checks, or a seeded random round-trip suite")
    sp.add_argument("function", nargs="?")
    sp.add_argument("points", nargs="?")
    sp.add_argument("--count", type=int, default=20, help="random superfields for --suite random (default 20)")
    sp.add_argument("--pairs", nargs="*", help="skeleton pairs L,L' for projectability (default 1,3 2,4)")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(args.skeleton, args.cutoff, args.mode, args.tol, args.fd_step,
                    args.coord_cap, args.seed, args.suite, args.out)
    try:
        cfg.validate()
        return args.func(args, cfg)
    except (UsageError, jsonio.SpecError, EvaluationError, DomainError, ConfigurationError,
            CarrierError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
