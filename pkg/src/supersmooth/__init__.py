"""Finite-skeleton Grassmann algebras and the calculus of supersmooth functions.

The package is layered bottom-up:

- :mod:`.gindex`: basis monomials, rank encoding, product signs.
- :mod:`.supernumber`: sparse supernumbers with a skeleton bound and cutoff.
- :mod:`.superspace`: superpoints, real coordinates, pairing, annihilator.
- :mod:`.smoothfn`: coefficient maps with exact derivative oracles.
- :mod:`.continuation`: Grassmann continuation and its Taylor expansion.
- :mod:`.superfield`: superfields, odd/even derivatives, extraction.
- :mod:`.characterize`: CR checks, witnesses, solve-sigma, duality, suites.
- :mod:`.cli`: the ``supersmooth`` command.
"""

from .characterize import (
    CheckResult,
    Report,
    cr_check,
    dual_represent,
    equivalence_suite,
    g1_witness,
    projectability_check,
    random_roundtrip_suite,
    solve_sigma,
)
from .continuation import (
    continuation_partial,
    continue_analytic,
    grassmann_continue,
    taylor_expand_continued,
)
from .gindex import (
    DomainError,
    GIndex,
    decode_rank,
    encode_rank,
    merge_sign,
    metric_weight,
)
from .scalars import GaussianRational
from .smoothfn import (
    AnalyticPrimitive,
    EvaluationError,
    PolyMap,
    SmoothMap,
    SumMap,
    SupernumberValuedMap,
    finite_diff_check,
)
from .superfield import (
    BlackBox,
    ConfigurationError,
    Superfield,
    coord_partial,
    gateaux_derivative,
    integrate_path,
    superfield_extract,
    taylor_superfield,
)
from .supernumber import CarrierError, Parity, Supernumber, sigma
from .superspace import (
    CoordIndex,
    Superdomain,
    SuperPoint,
    annihilator_solve,
    basis_direction,
    coord_get,
    coord_set,
    dist_mn,
    pairing,
)

__version__ = "0.1.0"

__all__ = [
    "AnalyticPrimitive",
    "BlackBox",
    "CarrierError",
    "CheckResult",
    "ConfigurationError",
    "CoordIndex",
    "DomainError",
    "EvaluationError",
    "GIndex",
    "GaussianRational",
    "Parity",
    "PolyMap",
    "Report",
    "SmoothMap",
    "SumMap",
    "SuperPoint",
    "Superdomain",
    "Superfield",
    "Supernumber",
    "SupernumberValuedMap",
    "annihilator_solve",
    "basis_direction",
    "continuation_partial",
    "continue_analytic",
    "coord_get",
    "coord_partial",
    "coord_set",
    "cr_check",
    "decode_rank",
    "dist_mn",
    "dual_represent",
    "encode_rank",
    "equivalence_suite",
    "finite_diff_check",
    "g1_witness",
    "gateaux_derivative",
    "grassmann_continue",
    "integrate_path",
    "merge_sign",
    "metric_weight",
    "pairing",
    "projectability_check",
    "random_roundtrip_suite",
    "sigma",
    "solve_sigma",
    "superfield_extract",
    "taylor_expand_continued",
    "taylor_superfield",
]
