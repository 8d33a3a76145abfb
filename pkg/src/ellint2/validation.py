"""Invariant suites run by ``ellint2 selftest``.

Each suite yields ``(label, ok, detail)`` triples.  Thresholds are fixed
here and do not follow the tolerance config under test, so a loosened
config shows up as failures.
"""

from __future__ import annotations

import math
import random
import warnings
from typing import Callable, Iterator

import numpy as np

from .closed_form import PI2, TruncationWarning, diag_parts, eval_axis, eval_eq3, eval_eq5, eval_eq7, eval_eq8
from .config import DEFAULT, CornerError, Ellint2Error, ToleranceConfig
from .elliptic import EllipticModulus, complete_E, complete_K, elliptic_ke
from .hyper import appell_f4, gauss_2f1, identity_eq6_first, identity_eq6_second
from .params import map_uv
from .quadrature import quad2d, rule_on

Check = tuple[str, bool, str]

AGREEMENT_VALUES = (0.0, 0.05, 0.1, 0.2, 0.3, 0.4)
Z_GRID = tuple(i / 10 for i in range(1, 10))

# E(0.3, 0.4) from a 25-digit mpmath double integration
GOLDEN_E_03_04 = 9.699040837582915


def _rel(x: float, ref: float) -> float:
    return abs(x - ref) / abs(ref) if ref else abs(x)


def _guard(label: str, fn: Callable[[], tuple[bool, str]]) -> Check:
    try:
        ok, detail = fn()
    except (Ellint2Error, ArithmeticError, ValueError) as exc:
        return label, False, f"{type(exc).__name__}: {exc}"
    return label, ok, detail


def _theta_integrals(k: float) -> tuple[float, float]:
    x, w = rule_on(128, 0.0, 0.5 * math.pi)
    s = 1.0 - (k * np.sin(x)) ** 2
    return float(w @ (1.0 / np.sqrt(s))), float(w @ np.sqrt(s))


def suite_elliptic(cfg: ToleranceConfig) -> Iterator[Check]:
    for k in Z_GRID:
        def legendre(k=k):
            m = EllipticModulus.of(k)
            a, b = elliptic_ke(m, cfg), elliptic_ke(m.complement(), cfg)
            lhs = a.E * b.K + b.E * a.K - a.K * b.K
            dev = _rel(lhs, 0.5 * math.pi)
            return dev <= 1e-13, f"dev={dev:.2e}"
        yield _guard(f"legendre k={k}", legendre)
    for k in Z_GRID + (0.95, 0.99):
        def direct(k=k):
            K, E = _theta_integrals(k)
            dev = max(_rel(complete_K(k, cfg), K), _rel(complete_E(k, cfg), E))
            return dev <= 1e-12, f"dev={dev:.2e}"
        yield _guard(f"quadrature k={k}", direct)


def suite_eq6(cfg: ToleranceConfig) -> Iterator[Check]:
    for z in Z_GRID:
        for name, ident in (("first", identity_eq6_first), ("second", identity_eq6_second)):
            def check(z=z, ident=ident):
                lhs, rhs = ident(z, cfg)
                dev = _rel(lhs, rhs)
                return dev <= 1e-10, f"dev={dev:.2e}"
            yield _guard(f"{name} z={z}", check)


def suite_uv(cfg: ToleranceConfig, samples: int = 1000, seed: int = 20240917) -> Iterator[Check]:
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(samples):
        s = rng.random()
        a = s * rng.random()
        b = (s - a) * rng.choice((1, -1))
        a *= rng.choice((1, -1))
        r = map_uv((a, b))
        worst = max(worst, abs(r.u * (1 - r.v) - a * a), abs(r.v * (1 - r.u) - b * b))
    yield f"round-trip x{samples}", worst <= 1e-12, f"max_abs={worst:.2e}"


def agreement_grid() -> list[tuple[float, float]]:
    return [(a, b) for a in AGREEMENT_VALUES for b in AGREEMENT_VALUES if a + b <= 0.8]


def suite_agreement(cfg: ToleranceConfig) -> Iterator[Check]:
    for a, b in agreement_grid():
        def check(a=a, b=b):
            q = quad2d((a, b), cfg)
            vals = [eval_eq7((a, b), cfg).value, eval_eq5((a, b), cfg).value,
                    eval_eq3((a, b), cfg).value, q.value]
            dev = (max(vals) - min(vals)) / min(vals)
            return dev <= 1e-8 and q.converged, f"dev={dev:.2e}"
        yield _guard(f"({a}, {b})", check)


def suite_axis(cfg: ToleranceConfig) -> Iterator[Check]:
    def corner():
        dev = _rel(eval_axis(1.0, cfg).value, 2.0 * math.sqrt(2.0) * math.pi)
        return dev <= 1e-13, f"dev={dev:.2e}"
    yield _guard("axis(1) = 2 sqrt2 pi", corner)
    for i in range(100):
        a = 0.99 * i / 99
        def check(a=a):
            dev = _rel(eval_eq7((a, 0.0), cfg).value, eval_axis(a, cfg).value)
            return dev <= 1e-11, f"dev={dev:.2e}"
        yield _guard(f"eq7(a,0) = axis(a) a={a:.4f}", check)

    def refuses():
        try:
            eval_eq7((1.0, 0.0), cfg)
        except CornerError:
            return True, "CornerError"
        return False, "no error"
    yield _guard("eq7 refuses (1, 0)", refuses)


def suite_diagonal(cfg: ToleranceConfig) -> Iterator[Check]:
    for a in (0.0, 0.1, 0.2, 0.3, 0.4, 0.49):
        def check(a=a):
            elliptic, series = diag_parts(a, cfg)
            dev = max(_rel(elliptic, eval_eq7((a, a), cfg).value),
                      _rel(PI2 * series.value, elliptic))
            return dev <= 1e-10 and series.converged, f"dev={dev:.2e}"
        yield _guard(f"eq8({a}) = eq7", check)

    def boundary():
        q = quad2d((0.5, 0.5), cfg)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", TruncationWarning)
            value = eval_eq8(0.5, cfg).value
        dev = _rel(value, q.value)
        return dev <= 1e-7, f"dev={dev:.2e}"
    yield _guard("eq8(0.5) = quad2d(0.5, 0.5)", boundary)


def boundary_points(count: int = 20) -> list[tuple[float, float]]:
    return [(a, 1.0 - a) for a in np.linspace(0.05, 0.95, count).tolist()]


def suite_boundary(cfg: ToleranceConfig) -> Iterator[Check]:
    for a, b in boundary_points():
        def check(a=a, b=b):
            dev = _rel(eval_eq7((a, b), cfg).value, quad2d((a, b), cfg).value)
            return dev <= 1e-6, f"dev={dev:.2e}"
        yield _guard(f"({a:.4f}, {b:.4f})", check)


def suite_convergence(cfg: ToleranceConfig) -> Iterator[Check]:
    anchors = (
        ("K(0.5)", lambda: complete_K(0.5, cfg), 1.6857503548125960),
        ("E(0.5)", lambda: complete_E(0.5, cfg), 1.4674622093394272),
        ("E(0.3,0.4) eq7", lambda: eval_eq7((0.3, 0.4), cfg).value, GOLDEN_E_03_04),
        ("E(0.3,0.4) quad", lambda: quad2d((0.3, 0.4), cfg).value, GOLDEN_E_03_04),
    )
    for label, fn, ref in anchors:
        def check(fn=fn, ref=ref):
            dev = _rel(fn(), ref)
            return dev <= 1e-12, f"dev={dev:.2e}"
        yield _guard(label, check)
    for label, fn in (
        ("2F1(-1/4,1/4;1;0.5)", lambda: gauss_2f1(-0.25, 0.25, 1.0, 0.5, cfg)),
        ("F4(-1/4,1/4;1,1;0.09,0.16)", lambda: appell_f4(-0.25, 0.25, 0.09, 0.16, cfg)),
    ):
        def check(fn=fn):
            res = fn()
            tail_ok = res.tail_estimate <= 1e-14 * abs(res.value)
            return res.converged and tail_ok, f"terms={res.terms_used} tail={res.tail_estimate:.1e}"
        yield _guard(label, check)


SUITES: dict[str, Callable[[ToleranceConfig], Iterator[Check]]] = {
    "elliptic": suite_elliptic,
    "eq6": suite_eq6,
    "uv": suite_uv,
    "agreement": suite_agreement,
    "axis": suite_axis,
    "diagonal": suite_diagonal,
    "boundary": suite_boundary,
    "convergence": suite_convergence,
}


def run_suite(name: str, cfg: ToleranceConfig = DEFAULT) -> list[Check]:
    return list(SUITES[name](cfg))
