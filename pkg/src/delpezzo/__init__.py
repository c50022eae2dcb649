"""Exact rational-point counting on singular del Pezzo surfaces of degree 3 and 4.

The package implements the universal-torsor parametrization of the 3A1
quartic surface S3, cross-certifies it against independent brute-force
oracles, and empirically verifies the Manin-type growth
N_{U,H}(B) = Theta(B (log B)^(rho-1)) together with the auxiliary
counting lemmas (ternary-equation boxes, dyadic-range bookkeeping).

All counting is exact integer arithmetic; floating point appears only in
the `analysis` fitting module.
"""

from delpezzo.forms import IntForm, ProjectivePoint, evaluate, height, normalize, restrict_to_line
from delpezzo.geometry import Line, find_rational_lines, jacobian_rank_at, point_on_some_line
from delpezzo.catalog import SurfaceRecord, UnknownSurfaceError, get, list_surfaces, verify_catalog
from delpezzo.counting import (
    CountResult,
    InfeasibleBError,
    Method,
    count_brute,
    count_divisor_oracle_s3,
    count_projective_line,
)
from delpezzo.torsor_s3 import TorsorVector, count_torsor, enumerate_torsor, lift_to_torsor, psi, torsor_to_point
from delpezzo.dyadic import (
    BudgetExceededError,
    DyadicBox,
    TernaryBox,
    check_box_bound,
    check_ternary_bound,
    count_dyadic_box,
    count_ternary,
)
from delpezzo.analysis import FitReport, fit_exponent, fit_leading_constant

__version__ = "0.1.0"

__all__ = [
    "IntForm",
    "ProjectivePoint",
    "evaluate",
    "normalize",
    "height",
    "restrict_to_line",
    "Line",
    "find_rational_lines",
    "point_on_some_line",
    "jacobian_rank_at",
    "SurfaceRecord",
    "UnknownSurfaceError",
    "get",
    "list_surfaces",
    "verify_catalog",
    "CountResult",
    "Method",
    "InfeasibleBError",
    "count_projective_line",
    "count_brute",
    "count_divisor_oracle_s3",
    "TorsorVector",
    "psi",
    "torsor_to_point",
    "lift_to_torsor",
    "count_torsor",
    "enumerate_torsor",
    "DyadicBox",
    "TernaryBox",
    "BudgetExceededError",
    "count_ternary",
    "check_ternary_bound",
    "count_dyadic_box",
    "check_box_bound",
    "FitReport",
    "fit_exponent",
    "fit_leading_constant",
    "__version__",
]
