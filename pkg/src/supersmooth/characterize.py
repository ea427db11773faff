"""Checks that tie together superdifferentiability, the CR system and superfields.

Every check returns a :class:`CheckResult`; :class:`Report` collects them and
renders deterministic JSON plus a plain-text table.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from . import scalars
from .continuation import ContinuationMismatch
from .gindex import all_masks, gens_of, merge_sign_mask, to_text, GIndex
from .sampling import make_rng, random_point, random_superfield, random_supernumber
from .superfield import (
    DEFAULT_FD_STEP,
    Superfield,
    directional_derivative,
    gateaux_derivative,
    iter_coordinate_derivatives,
    superfield_extract,
    theta_power,
)
from .supernumber import Supernumber
from .superspace import SuperPoint, coordinates

FLOAT_TOL = 1e-6


def _fmt(v) -> str | None:
    if v is None:
        return None
    return scalars.format_scalar(v)


def supernumber_text(X: Supernumber) -> str:
    """Compact deterministic text such as ``3 + 2*[1,2]``."""
    if not len(X):
        return "0"
    parts = []
    for I, v in X.items():
        c = _fmt(v) if scalars.imag_part(v) == 0 else repr(complex(v))
        parts.append(c if I.degree == 0 else f"{c}*{to_text(I)}")
    return " + ".join(parts)


@dataclass
class CheckResult:
    """Outcome of one check.

    Attributes:
        name: check identifier.
        anchor: short tag naming the property being checked.
        status: ``"pass"``, ``"fail"`` or ``"skipped"``.
        residual: largest metric distance of a defect (exact or float).
        witnesses: check-specific data (failing pairs, recovered witnesses, ...).
        detail: one-line human-readable note.
    """

    name: str
    anchor: str
    status: str
    residual: object = 0
    witnesses: dict = field(default_factory=dict)
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "anchor": self.anchor,
            "status": self.status,
            "residual": _fmt(self.residual),
            "witnesses": self.witnesses,
            "detail": self.detail,
        }


@dataclass
class Report:
    title: str
    checks: list[CheckResult] = field(default_factory=list)
    config: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def add(self, check: CheckResult) -> CheckResult:
        self.checks.append(check)
        return check

    def extend(self, checks: Iterable[CheckResult]):
        self.checks.extend(checks)

    def to_json(self) -> dict:
        return {
            "title": self.title,
            "passed": self.passed,
            "config": self.config,
            "checks": [c.to_json() for c in self.checks],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"

    def table(self) -> str:
        rows = [("check", "anchor", "status", "residual", "detail")]
        for c in self.checks:
            rows.append((c.name, c.anchor, c.status, _fmt(c.residual) or "", c.detail))
        widths = [max(len(r[i]) for r in rows) for i in range(4)]
        lines = [f"# {self.title}"]
        for r in rows:
            lines.append("  ".join(s.ljust(w) for s, w in zip(r[:4], widths)) + "  " + r[4])
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def _residual(defect: Supernumber):
    if defect.exact:
        try:
            return defect.dist()
        except OverflowError:
            return defect.to_float().dist()
    return defect.dist()


def _is_zero(defect: Supernumber, exact: bool, tol: float) -> bool:
    if exact:
        return defect.exact and not len(defect)
    return defect.dist() <= tol


def _max(a, b):
    return b if b > a else a


# coordinate derivatives


@dataclass
class CoordinateData:
    derivatives: dict[tuple[int, int], Supernumber]
    skipped: list[dict]
    methods: set[str]
    L: int
    D: int
    m: int
    n: int

    @property
    def exact(self) -> bool:
        return self.methods <= {"nilpotent", "interpolation"} and all(
            d.exact for d in self.derivatives.values())


def coordinate_derivatives(F, X: SuperPoint, cap: int | None = None, fd_step: float = DEFAULT_FD_STEP,
                           richardson: bool = True) -> CoordinateData:
    """``∂F/∂X_{A,I}`` for every coordinate within the skeleton (optionally capped per slot)."""
    coords = coordinates(F.m, F.n, X.L, X.D, cap)
    derivs, skipped, methods = {}, [], set()
    for c, d, method in iter_coordinate_derivatives(F, X, coords, fd_step, richardson):
        if isinstance(d, Exception):
            skipped.append({"slot": c.A, "I": to_text(c.I), "reason": str(d)})
            continue
        methods.add(method)
        derivs[(c.A, c.I.mask)] = d
    return CoordinateData(derivs, skipped, methods, X.L, X.D, F.m, F.n)


def cr_check(F, X: SuperPoint, cap: int | None = None, tol: float = FLOAT_TOL,
             fd_step: float = DEFAULT_FD_STEP, richardson: bool = True,
             data: CoordinateData | None = None, max_listed: int = 50) -> CheckResult:
    """Verify the coordinate CR system at ``X``.

    Even slots: ``∂F/∂X_{A,I} = σ^I ∂F/∂X_{A,0̃}`` for every even ``I``.
    Odd slots: ``σ^K ∂F/∂X_{A,J} + σ^J ∂F/∂X_{A,K} = 0`` for all odd ``J, K``.
    Exact derivatives must give identically zero defects; otherwise the
    metric size of each defect must stay within ``tol``.
    """
    data = data or coordinate_derivatives(F, X, cap, fd_step, richardson)
    exact = data.exact
    d = data.derivatives
    if not exact:
        d = {k: v.to_float() for k, v in d.items()}
    residual = Fraction(0) if exact else 0.0
    failures: list[dict] = []
    checked = 0
    for A in range(1, data.m + data.n + 1):
        keys = sorted(I for (B, I) in d if B == A)
        if A <= data.m:
            base = d.get((A, 0))
            if base is None:
                continue
            for I in keys:
                if I == 0:
                    continue
                defect = d[(A, I)] - base.mul_blade(I, 1, left=True)
                checked += 1
                r = _residual(defect)
                residual = _max(residual, r)
                if not _is_zero(defect, exact, tol):
                    failures.append({"slot": A, "I": to_text(GIndex.from_mask(I)), "J": "[]",
                                     "residual": _fmt(r)})
        else:
            for i, J in enumerate(keys):
                for K in keys[i:]:
                    defect = d[(A, J)].mul_blade(K, 1, left=True) + d[(A, K)].mul_blade(J, 1, left=True)
                    checked += 1
                    r = _residual(defect)
                    residual = _max(residual, r)
                    if not _is_zero(defect, exact, tol):
                        failures.append({"slot": A, "I": to_text(GIndex.from_mask(J)),
                                         "J": to_text(GIndex.from_mask(K)), "residual": _fmt(r)})
    status = "fail" if failures else "pass"
    if not checked and data.skipped:
        status = "skipped"
    witnesses = {
        "failures": failures[:max_listed],
        "failure_count": len(failures),
        "pairs_checked": checked,
        "skipped": data.skipped,
        "mode": "exact" if exact else "float",
        "methods": sorted(data.methods),
    }
    detail = f"{checked} pairs, {len(failures)} failing, {len(data.skipped)} skipped"
    return CheckResult("cr_check", "cauchy-riemann", status, residual, witnesses, detail)


# solve-sigma


@dataclass
class SigmaSolution:
    """Result of solving ``A_i = σ_i F``.

    Attributes:
        feasible: whether a solution exists.
        F: canonical solution (undetermined blades set to zero) or ``None``.
        witness_pair: first ``(i, j)`` with ``σ_j A_i + σ_i A_j ≠ 0``.
        ambiguity: description of the undetermined part of ``F``.
        detail: free-form explanation.
    """

    feasible: bool
    F: Supernumber | None = None
    witness_pair: tuple[int, int] | None = None
    ambiguity: str = ""
    detail: str = ""
    defect: Supernumber | None = None


def ambiguity_text(L: int, D: int) -> str:
    if D >= L:
        return f"F + λ·{to_text(GIndex.from_mask((1 << L) - 1))} for any scalar λ (top blade)"
    return f"F + any combination of blades of degree {D}"


def canonical_mod_ambiguity(F: Supernumber) -> Supernumber:
    """Zero the blades that ``σ_i F`` cannot see: those of degree ``D`` (the top blade if ``D = L``)."""
    return Supernumber._raw({k: v for k, v in F.mask_items() if k.bit_count() < F.D or k == 0 and F.D == 0},
                            F.L, F.D, F.exact, F.tol)


def _close(a, b, exact: bool, tol: float) -> bool:
    if exact:
        return a == b
    return abs(scalars.to_float(a) - scalars.to_float(b)) <= tol


def solve_sigma(A: Sequence[Supernumber], L: int | None = None, D: int | None = None) -> SigmaSolution:
    """Find ``F`` with ``σ_i F = A_i`` for ``i = 1..L``.

    Compatibility ``σ_j A_i + σ_i A_j = 0`` (for ``i <= j``) is checked first;
    the first violating pair is returned as the certificate.  Each coefficient
    ``F_J`` is then read off from ``(A_i)_{J ∪ {i}}`` for any ``i ∉ J`` and
    cross-checked over all such ``i``.
    """
    A = list(A)
    L = len(A) if L is None else L
    if len(A) != L:
        raise ValueError(f"expected {L} components, got {len(A)}")
    D = min((a.D for a in A), default=L) if D is None else D
    for i, a in enumerate(A, 1):
        if a.support_bound > L:
            raise ValueError(f"A_{i} uses generators beyond skeleton L={L}")
    A = [a.with_context(L, D) for a in A]
    exact = all(a.exact or not len(a) for a in A)
    if not exact:
        A = [a.to_float() for a in A]
    tol = max((a.tol for a in A), default=scalars.DEFAULT_TOL)
    for i in range(1, L + 1):
        for j in range(i, L + 1):
            bi, bj = 1 << (i - 1), 1 << (j - 1)
            lhs = A[i - 1].mul_blade(bj, 1, left=True)
            if i != j:
                lhs = lhs + A[j - 1].mul_blade(bi, 1, left=True)
            if not lhs.is_zero():
                return SigmaSolution(False, witness_pair=(i, j), defect=lhs,
                                     detail=f"σ_{j}A_{i} + σ_{i}A_{j} = {supernumber_text(lhs)} ≠ 0")
    values: dict[int, object] = {}
    for i, a in enumerate(A, 1):
        bit = 1 << (i - 1)
        for K, v in a.mask_items():
            if K & bit:
                J = K ^ bit
                values.setdefault(J, v * merge_sign_mask(bit, J))
    for J, v in values.items():
        for i in range(1, L + 1):
            bit = 1 << (i - 1)
            if J & bit or J.bit_count() + 1 > D:
                continue
            other = A[i - 1].proj_coeff(GIndex.from_mask(J | bit)) * merge_sign_mask(bit, J)
            if not _close(v, other, exact, tol * 10):
                return SigmaSolution(False, detail=f"inconsistent read-off of F_{to_text(GIndex.from_mask(J))} "
                                                   f"from A_{i}: {v} vs {other}")
    F = Supernumber._raw({J: v for J, v in values.items() if J.bit_count() < D and v != 0},
                         L, D, exact, tol)
    for i, a in enumerate(A, 1):
        if not (F.mul_blade(1 << (i - 1), 1, left=True) - a).is_zero():
            raise AssertionError(f"compatible input but σ_{i}F ≠ A_{i}; this should be unreachable")
    return SigmaSolution(True, F=F, ambiguity=ambiguity_text(L, D))


# witnesses for superdifferentiability


def g1_witness(F, X: SuperPoint, cap: int | None = None, tol: float = FLOAT_TOL,
               fd_step: float = DEFAULT_FD_STEP, data: CoordinateData | None = None) -> tuple[CheckResult, dict]:
    """Recover ``F_A`` with ``dF(X; Y) = Σ_A Y_A F_A``.

    Even slots use ``F_A = ∂F/∂X_{A,0̃}``.  Odd slots solve ``σ_i F_A = ∂F/∂X_{A,(i)}``.
    The witnesses are then verified against every coordinate derivative.

    Returns:
        ``(result, witnesses)`` where ``witnesses`` maps slot ``A`` to ``F_A``.
    """
    data = data or coordinate_derivatives(F, X, cap, fd_step)
    d = data.derivatives
    L, D = data.L, data.D
    exact = data.exact
    if not exact:
        d = {k: v.to_float() for k, v in d.items()}
    wit: dict[int, Supernumber] = {}
    info: dict = {"ambiguity": {}}
    for A in range(1, data.m + data.n + 1):
        if A <= data.m:
            if (A, 0) not in d:
                return CheckResult("g1_witness", "g1-witness", "skipped", 0, {},
                                   f"slot {A} body direction unavailable"), wit
            wit[A] = d[(A, 0)]
            continue
        comps = []
        for i in range(1, L + 1):
            comps.append(d.get((A, 1 << (i - 1)), Supernumber.zero(L, D, exact)))
        sol = solve_sigma(comps, L, D)
        if not sol.feasible:
            witnesses = {"slot": A, "pair": list(sol.witness_pair) if sol.witness_pair else None,
                         "reason": sol.detail}
            return CheckResult("g1_witness", "g1-witness", "fail", 0, witnesses,
                               f"slot {A} infeasible: {sol.detail}"), wit
        wit[A] = sol.F
        info["ambiguity"][str(A)] = sol.ambiguity
    residual = Fraction(0) if exact else 0.0
    bad = []
    for (A, I), dv in sorted(d.items()):
        defect = dv - wit[A].mul_blade(I, 1, left=True)
        r = _residual(defect)
        residual = _max(residual, r)
        if not _is_zero(defect, exact, tol):
            bad.append({"slot": A, "I": to_text(GIndex.from_mask(I)), "residual": _fmt(r)})
    info["witnesses"] = {str(A): supernumber_text(w) for A, w in wit.items()}
    info["failures"] = bad[:50]
    status = "fail" if bad else "pass"
    detail = f"{len(wit)} witnesses, {len(bad)} coordinates not factored"
    return CheckResult("g1_witness", "g1-witness", status, residual, info, detail), wit


# self-duality


@dataclass
class DualResult:
    """Outcome of representing an even-linear odd map as a right multiplication."""

    status: str  # representable | infeasible | linearity-failure | representation-failure
    u: Supernumber | None = None
    witness: dict = field(default_factory=dict)
    ambiguity: str = ""

    @property
    def representable(self) -> bool:
        return self.status == "representable"


def _blade(mask: int, L: int, D: int) -> Supernumber:
    return Supernumber.from_masks({mask: 1}, L, D)


def dual_represent(f: Callable[[Supernumber], Supernumber], L: int, D: int | None = None) -> DualResult:
    """Try to write ``f(X) = X · u_f`` on the odd part of skeleton ``L``.

    Steps: check even-linearity on basis products ``f(σ^E σ^O) = σ^E f(σ^O)``;
    solve ``σ_i u = f(σ_i)``; verify ``f(σ^I) = σ^I u`` on every odd blade.
    """
    D = L if D is None else D
    odd = all_masks(L, D, 1)
    images = {O: f(_blade(O, L, D)).with_context(L, D) for O in odd}
    for E in all_masks(L, D, 0):
        if E == 0:
            continue
        for O in odd:
            if E & O or E.bit_count() + O.bit_count() > D:
                continue
            sign = merge_sign_mask(E, O)
            lhs = f(_blade(E | O, L, D) * sign).with_context(L, D)
            rhs = images[O].mul_blade(E, 1, left=True)
            if not (lhs - rhs).is_zero():
                return DualResult("linearity-failure", witness={
                    "even": to_text(GIndex.from_mask(E)), "odd": to_text(GIndex.from_mask(O)),
                    "lhs": supernumber_text(lhs), "rhs": supernumber_text(rhs)})
    fi = [images[1 << (i - 1)] for i in range(1, L + 1)]
    sol = solve_sigma(fi, L, D)
    if not sol.feasible:
        i, j = sol.witness_pair if sol.witness_pair else (None, None)
        wit = {"pair": [i, j], "reason": sol.detail}
        if i is not None and i == j:
            prod = fi[i - 1].mul_blade(1 << (i - 1), 1, left=True)
            wit["reason"] = f"σ_{i}·f(σ_{i}) = {supernumber_text(prod)} ≠ 0"
        return DualResult("infeasible", witness=wit)
    u = sol.F
    for O in odd:
        if not (images[O] - u.mul_blade(O, 1, left=True)).is_zero():
            return DualResult("representation-failure", u=u, witness={
                "blade": to_text(GIndex.from_mask(O)), "image": supernumber_text(images[O])})
    return DualResult("representable", u=u, ambiguity=sol.ambiguity)


# projectability


def _perturb_above(rng, X: SuperPoint, L_low: int) -> SuperPoint:
    """Add random terms to every slot that each involve some generator above ``L_low``."""
    L, D = X.L, X.D
    high = [k for k in all_masks(L, D) if k >> L_low]

    def bump(s: Supernumber, parity: int) -> Supernumber:
        pool = [k for k in high if k.bit_count() % 2 == parity and k]
        if not pool:
            return s
        return s + random_supernumber(rng, L, D, 2, exact=s.exact or not len(s), masks=pool)

    return SuperPoint([bump(x, 0) for x in X.even], [bump(t, 1) for t in X.odd], L, D)


def projectability_check(F, skeleton_pairs: Sequence[tuple[int, int]], samples: int = 5,
                         seed: int = 0) -> CheckResult:
    """For ``Z, W`` with ``p_L(Z) = p_L(W)`` in skeleton ``L'``, require ``p_L(F(Z)) = p_L(F(W))``."""
    rng = make_rng(seed)
    failures = []
    residual = Fraction(0)
    for L_low, L_high in skeleton_pairs:
        if not L_low < L_high:
            raise ValueError(f"need L < L', got ({L_low}, {L_high})")
        for _ in range(samples):
            Z = random_point(rng, F.m, F.n, L_high)
            W = _perturb_above(rng, Z, L_low)
            fz = as_callable(F)(Z).skeleton_project(L_low)
            fw = as_callable(F)(W).skeleton_project(L_low)
            defect = fz - fw
            r = _residual(defect)
            residual = _max(residual, r)
            if not defect.is_zero():
                failures.append({"L": L_low, "L_prime": L_high, "difference": supernumber_text(defect)})
    status = "fail" if failures else "pass"
    return CheckResult("projectability", "projectable", status, residual,
                       {"failures": failures[:20], "failure_count": len(failures),
                        "pairs": [list(p) for p in skeleton_pairs], "samples": samples},
                       f"{len(skeleton_pairs) * samples} samples, {len(failures)} failing")


def as_callable(F):
    return F.eval if isinstance(F, Superfield) else F


# consolidated suite


def _point_direction(rng, X: SuperPoint) -> SuperPoint:
    return random_point(rng, X.m, X.n, X.L, X.D, soul_terms=2, exact=X.exact)


def equivalence_suite(F, points: Sequence[SuperPoint], seed: int = 0, cap: int | None = None,
                      tol: float = FLOAT_TOL, fd_step: float = DEFAULT_FD_STEP,
                      title: str = "equivalence suite", label: str = "") -> Report:
    """Run the CR, witness, Gâteaux and expansion checks at each point.

    For a :class:`Superfield`, the recovered witnesses are also compared with
    the evaluated partial derivatives, and the extracted coefficients with the
    continued coefficients.
    """
    rng = make_rng(seed)
    report = Report(title, config={"seed": seed, "cap": cap, "tol": tol, "fd_step": fd_step})
    prefix = f"{label}:" if label else ""
    for k, X in enumerate(points):
        tag = f"{prefix}p{k}"
        data = coordinate_derivatives(F, X, cap, fd_step)
        cr = cr_check(F, X, cap, tol, fd_step, data=data)
        cr.name = f"{tag}:cr_check"
        report.add(cr)
        g1, wit = g1_witness(F, X, cap, tol, fd_step, data=data)
        g1.name = f"{tag}:g1_witness"
        if isinstance(F, Superfield) and g1.status == "pass":
            _compare_witnesses(F, X, wit, g1)
        report.add(g1)
        report.add(_gateaux_check(F, X, wit, rng, tag, tol, fd_step, g1.status == "pass"))
        report.add(_expansion_check(F, X, tag))
    return report


def _compare_witnesses(u: Superfield, X: SuperPoint, wit: dict, result: CheckResult):
    left = u.to_left()
    mism = []
    for A, w in wit.items():
        if A <= u.m:
            expect = left.partial_even(A).eval(X)
        else:
            expect = left.partial_odd_left(A - u.m).eval(X)
        expect = expect.with_context(w.L, w.D)
        if not (canonical_mod_ambiguity(expect) - canonical_mod_ambiguity(w)).is_zero():
            mism.append({"slot": A, "witness": supernumber_text(w), "expected": supernumber_text(expect)})
    result.witnesses["partials_match"] = not mism
    if mism:
        result.status = "fail"
        result.witnesses["partial_mismatches"] = mism
        result.detail += "; witnesses differ from evaluated partial derivatives"


def _gateaux_check(F, X, wit, rng, tag, tol, fd_step, have_witness) -> CheckResult:
    Y = _point_direction(rng, X)
    name = f"{tag}:gateaux"
    if isinstance(F, Superfield):
        try:
            gateaux_derivative(F, X, Y)
        except ContinuationMismatch as exc:
            return CheckResult(name, "gateaux-factorization", "fail", 0, {}, str(exc))
    if not have_witness:
        return CheckResult(name, "gateaux-factorization", "skipped", 0, {}, "no witnesses to factor through")
    lhs, method = directional_derivative(F, X, Y, fd_step)
    rhs = None
    for A, w in wit.items():
        term = Y.slots[A - 1] * (w if w.exact == Y.exact else (w.to_float() if w.exact else w))
        rhs = term if rhs is None else rhs + term
    if rhs is None:
        rhs = Supernumber.zero(X.L, X.D)
    if lhs.exact != rhs.exact:
        lhs, rhs = lhs.to_float(), rhs.to_float()
    defect = lhs - rhs
    exact = lhs.exact
    r = _residual(defect)
    ok = _is_zero(defect, exact, tol)
    return CheckResult(name, "gateaux-factorization", "pass" if ok else "fail", r,
                       {"method": method}, "dF(X;Y) = Σ Y_A F_A at a random direction")


def _expansion_check(F, X: SuperPoint, tag: str) -> CheckResult:
    name = f"{tag}:extract"
    coeffs = superfield_extract(F, X.even, X.n, L=X.L, D=X.D)
    witnesses = {"coefficients": {"".join(map(str, a)) or "-": supernumber_text(v) for a, v in coeffs.items()}}
    if isinstance(F, Superfield):
        expect = F.to_left().continued_coefficients(X.even, X.L, X.D)
        bad = [a for a in coeffs if not (coeffs[a] - expect[a]).is_zero()]
        if bad:
            witnesses["mismatch"] = ["".join(map(str, a)) for a in bad]
            return CheckResult(name, "superfield-expansion", "fail", 0, witnesses,
                               "extracted coefficients differ from the continued ones")
    # the recovered expansion must reproduce F at the point itself
    total = None
    for a, v in coeffs.items():
        term = theta_power(X.odd, a, X.L, X.D)
        if term.exact != v.exact:
            term, v = term.to_float(), v.to_float() if v.exact else v
        term = term * v
        total = term if total is None else total + term
    value = as_callable(F)(X)
    if total is not None and total.exact != value.exact:
        total, value = total.to_float(), value.to_float()
    defect = value - total if total is not None else value
    r = _residual(defect)
    ok = defect.is_zero()
    return CheckResult(name, "superfield-expansion", "pass" if ok else "fail", r, witnesses,
                       "Σ θ^a f̃_a(x) recovered with fresh generators reproduces F(X)")


def random_roundtrip_suite(seed: int, count: int = 20, m_max: int = 2, n_max: int = 3,
                           L_range: tuple[int, int] = (2, 6), max_degree: int = 3,
                           points_per_field: int = 1, cap: int | None = None) -> Report:
    """Equivalence suite over ``count`` seeded random polynomial superfields."""
    rng = make_rng(seed)
    report = Report("random superfield round-trip",
                    config={"seed": seed, "count": count, "m_max": m_max, "n_max": n_max,
                            "L_range": list(L_range), "max_degree": max_degree})
    for k in range(count):
        m, n = rng.randint(0, m_max), rng.randint(0, n_max)
        if m + n == 0:
            m = 1
        L = rng.randint(*L_range)
        u = random_superfield(rng, m, n, max_degree)
        pts = [random_point(rng, m, n, L, soul_terms=2) for _ in range(points_per_field)]
        sub = equivalence_suite(u, pts, seed=rng.randrange(1 << 30), cap=cap, label=f"u{k}")
        report.extend(sub.checks)
    return report


__all__ = [
    "CheckResult",
    "CoordinateData",
    "DualResult",
    "Report",
    "SigmaSolution",
    "canonical_mod_ambiguity",
    "coordinate_derivatives",
    "cr_check",
    "dual_represent",
    "equivalence_suite",
    "g1_witness",
    "projectability_check",
    "random_roundtrip_suite",
    "solve_sigma",
    "supernumber_text",
]
