"""Evaluate E(a, b) = int_0^pi int_0^pi sqrt(1 + a cos x + b cos y) dx dy.

Four independent routes are provided (elliptic closed form, 2F1 product,
Appell F4 series, direct quadrature) plus the diagonal and axis special
cases, so that every value can be cross-checked.
"""

from ._backend import BACKEND
from .closed_form import (
    Evaluation,
    Method,
    TruncationWarning,
    eval_axis,
    eval_E,
    eval_eq3,
    eval_eq5,
    eval_eq7,
    eval_eq8,
    eval_quad,
)
from .config import (
    DEFAULT,
    ConvergenceError,
    CornerError,
    DivergenceError,
    DomainError,
    Ellint2Error,
    ToleranceConfig,
)
from .elliptic import EllipticModulus, EllipticValues, agm, complete_E, complete_K, elliptic_ke
from .hyper import (
    SeriesResult,
    appell_f4,
    gauss_2f1,
    identity_eq6_first,
    identity_eq6_second,
    series_3f2,
)
from .params import Amplitudes, ReducedPair, map_uv, modulus_from_z
from .quadrature import QuadResult, gauss_legendre, quad1d, quad2d

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DEFAULT",
    "Amplitudes",
    "ConvergenceError",
    "CornerError",
    "DivergenceError",
    "DomainError",
    "Ellint2Error",
    "EllipticModulus",
    "EllipticValues",
    "Evaluation",
    "Method",
    "QuadResult",
    "ReducedPair",
    "SeriesResult",
    "ToleranceConfig",
    "TruncationWarning",
    "agm",
    "appell_f4",
    "complete_E",
    "complete_K",
    "elliptic_ke",
    "eval_E",
    "eval_axis",
    "eval_eq3",
    "eval_eq5",
    "eval_eq7",
    "eval_eq8",
    "eval_quad",
    "gauss_2f1",
    "gauss_legendre",
    "identity_eq6_first",
    "identity_eq6_second",
    "map_uv",
    "modulus_from_z",
    "quad1d",
    "quad2d",
    "series_3f2",
]
