"""E(a, b) by the elliptic combination, the 2F1 product, the F4 series,
the diagonal specialization and the b = 0 axis collapse.

Every evaluator returns the full integral ``E(a, b)`` over ``[0, pi]^2``
(not the quarter value).  Signs of ``a`` and ``b`` are dropped up front:
``x -> pi - x`` and ``y -> pi - y`` leave the integral unchanged.
"""

from __future__ import annotations

import enum
import math
import warnings
from typing import NamedTuple

from . import _backend
from .config import DEFAULT, ConvergenceError, CornerError, DomainError, ToleranceConfig
from .elliptic import EllipticModulus, elliptic_ke
from .hyper import SeriesResult, appell_f4, gauss_2f1, series_3f2
from .params import BOUNDARY_SLACK, as_amplitudes, map_uv, modulus_from_z
from .quadrature import quad2d

PI2 = math.pi * math.pi
_EPS = 2.0 ** -52


class Method(str, enum.Enum):
    AUTO = "auto"
    ELLIPTIC7 = "elliptic7"
    PRODUCT5 = "product5"
    APPELL3 = "appell3"
    DIAG8 = "diag8"
    QUAD = "quad"
    AXIS = "axis"


_ELLIPTIC7 = Method.ELLIPTIC7


class TruncationWarning(RuntimeWarning):
    """A validation-only series stopped at ``max_terms``."""


class Evaluation(NamedTuple):
    value: float
    method: Method
    error_estimate: float


def _require_converged(name: str, res: SeriesResult) -> SeriesResult:
    if not res.converged:
        raise ConvergenceError(
            f"{name} not converged after {res.terms_used} terms (raise max_terms)",
            res.tail_estimate,
        )
    return res


def eval_eq7(p, cfg: ToleranceConfig = DEFAULT) -> Evaluation:
    """Closed form in complete elliptic integrals; the fast path."""
    a, b = p
    a, b = abs(float(a)), abs(float(b))
    if not a + b <= 1.0 + BOUNDARY_SLACK:
        as_amplitudes((a, b)).check_admissible()
    status, value, err = _backend.eq7_core(a, b, cfg.rel_tol, cfg.max_iters)
    if status == 1:
        raise CornerError(
            f"({a}, {b}) is a corner point where K diverges; use eval_axis "
            "(method 'axis' or 'auto')"
        )
    if status == 2:
        raise ConvergenceError(f"AGM did not converge in {cfg.max_iters} iterations", err)
    return Evaluation(value, _ELLIPTIC7, err)


def eval_eq5(p, cfg: ToleranceConfig = DEFAULT) -> Evaluation:
    """Sum of products of Gauss 2F1 factors in the reduced parameters."""
    p = as_amplitudes(p)
    p.check_admissible(strict=True)
    r = map_uv(p)
    f1u = _require_converged("2F1(-1/4,1/4;1;u)", gauss_2f1(-0.25, 0.25, 1.0, r.u, cfg))
    f1v = _require_converged("2F1(-1/4,1/4;1;v)", gauss_2f1(-0.25, 0.25, 1.0, r.v, cfg))
    f2u = _require_converged("2F1(3/4,5/4;2;u)", gauss_2f1(0.75, 1.25, 2.0, r.u, cfg))
    f2v = _require_converged("2F1(3/4,5/4;2;v)", gauss_2f1(0.75, 1.25, 2.0, r.v, cfg))
    w = r.u * r.v / 16.0
    value = PI2 * (f1u.value * f1v.value + w * f2u.value * f2v.value)
    err = PI2 * (
        abs(f1v.value) * f1u.tail_estimate
        + abs(f1u.value) * f1v.tail_estimate
        + w * (abs(f2v.value) * f2u.tail_estimate + abs(f2u.value) * f2v.tail_estimate)
    ) + 8.0 * _EPS * abs(value)
    return Evaluation(value, Method.PRODUCT5, err)


def eval_eq3(p, cfg: ToleranceConfig = DEFAULT) -> Evaluation:
    """``pi^2 F4(-1/4, 1/4; 1, 1; a^2, b^2)``; interior only."""
    p = as_amplitudes(p)
    p.check_admissible(strict=True)
    res = _require_converged(
        "F4(-1/4,1/4;1,1;a^2,b^2)", appell_f4(-0.25, 0.25, p.a * p.a, p.b * p.b, cfg)
    )
    value = PI2 * res.value
    return Evaluation(value, Method.APPELL3, PI2 * res.tail_estimate + 8.0 * _EPS * abs(value))


def diag_parts(a: float, cfg: ToleranceConfig = DEFAULT) -> tuple[float, SeriesResult]:
    """The two diagonal routes: ``(elliptic value, 3F2 series result)``.

    The series result is the bare ``3F2(-1/4, 1/4, 1/2; 1, 1; 4a^2)``; the
    integral is ``pi^2`` times it.
    """
    a = abs(float(a))
    if a > 0.5 + BOUNDARY_SLACK:
        raise DomainError(f"diagonal route needs |a| <= 1/2, got a={a!r}")
    a = min(a, 0.5)
    root = math.sqrt((1.0 - 2.0 * a) * (1.0 + 2.0 * a))
    u = 2.0 * a * a / (1.0 + root)
    z = math.sqrt(u)
    ke = elliptic_ke(modulus_from_z(z), cfg)
    elliptic = 4.0 * (
        2.0 * (1.0 + z) * ke.E * ke.E + ke.K * ke.K / (1.0 + z) - 2.0 * ke.E * ke.K
    )
    series = series_3f2(-0.25, 0.25, 0.5, 1.0, 1.0, min(4.0 * a * a, 1.0), cfg)
    return elliptic, series


def eval_eq8(a: float, cfg: ToleranceConfig = DEFAULT) -> Evaluation:
    """E(a, a) by the simplified elliptic form, checked against the 3F2 route.

    The returned value is the elliptic one; ``error_estimate`` is the gap
    between the two routes.
    """
    elliptic, series = diag_parts(a, cfg)
    if not series.converged:
        warnings.warn(
            f"3F2 route truncated at {series.terms_used} terms "
            f"(last term {series.tail_estimate:.3g}); the gap is only a bound",
            TruncationWarning,
            stacklevel=2,
        )
    return Evaluation(elliptic, Method.DIAG8, abs(elliptic - PI2 * series.value))


def eval_axis(a: float, cfg: ToleranceConfig = DEFAULT) -> Evaluation:
    """``E(a, 0) = 2 pi sqrt(1+|a|) E(sqrt(2|a|/(1+|a|)))``, valid up to |a| = 1."""
    a = abs(float(a))
    if a > 1.0 + BOUNDARY_SLACK:
        raise DomainError(f"axis route needs |a| <= 1, got a={a!r}")
    a = min(a, 1.0)
    m = EllipticModulus(math.sqrt(2.0 * a / (1.0 + a)), math.sqrt((1.0 - a) / (1.0 + a)))
    if m.singular:
        e, gap = 1.0, 0.0
    else:
        ke = elliptic_ke(m, cfg)
        e, gap = ke.E, ke.gap
    value = 2.0 * math.pi * math.sqrt(1.0 + a) * e
    return Evaluation(value, Method.AXIS, abs(value) * (2.0 * gap + 4.0 * _EPS))


def eval_quad(p, cfg: ToleranceConfig = DEFAULT) -> Evaluation:
    res = quad2d(p, cfg)
    if not res.converged:
        raise ConvergenceError(
            f"quadrature not converged after {res.levels_used} levels", res.error_estimate
        )
    return Evaluation(res.value, Method.QUAD, res.error_estimate)


def eval_E(p, method: Method | str = Method.AUTO, cfg: ToleranceConfig = DEFAULT) -> Evaluation:
    """Dispatch to one evaluator after reducing to ``a, b >= 0``.

    ``auto`` takes the axis collapse when either amplitude is zero (this
    covers the corners) and the elliptic combination otherwise.
    """
    method = Method(method)
    p = as_amplitudes(p)
    p.check_admissible()
    p = p.reduced()
    a, b = p.a, p.b
    on_boundary = not p.l1 < 1.0
    if method is Method.AUTO:
        if a == 0.0 or b == 0.0:
            return eval_axis(a + b, cfg)
        return eval_eq7(p, cfg)
    if method is Method.AXIS:
        if a != 0.0 and b != 0.0:
            raise DomainError("method 'axis' needs a = 0 or b = 0; use 'auto' or 'elliptic7'")
        return eval_axis(a + b, cfg)
    if method is Method.ELLIPTIC7:
        return eval_eq7(p, cfg)
    if method in (Method.PRODUCT5, Method.APPELL3):
        if on_boundary:
            raise DomainError(
                f"method '{method.value}' needs |a| + |b| < 1 strictly; "
                "use 'elliptic7' or 'quad' on the boundary"
            )
        return eval_eq5(p, cfg) if method is Method.PRODUCT5 else eval_eq3(p, cfg)
    if method is Method.DIAG8:
        if a != b:
            raise DomainError(f"method 'diag8' needs |a| = |b|, got ({a}, {b}); use 'elliptic7'")
        return eval_eq8(a, cfg)
    return eval_quad(p, cfg)
