"""Truncated hypergeometric series: Gauss 2F1, 3F2 and Appell F4.

Coefficients are built from the running term ratio; Pochhammer symbols are
never formed from gamma-function ratios.  A series is accepted once three
consecutive terms (anti-diagonal blocks for F4) are each below
``max(rel_tol * |partial sum|, abs_tol)``.  Hitting ``max_terms`` first is
not an exception here: the result comes back with ``converged=False`` and
callers decide.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from . import _backend
from .config import DEFAULT, DomainError, ToleranceConfig
from .elliptic import complete_E, elliptic_ke
from .params import modulus_from_z

_STOP_RUN = 3


@dataclass(frozen=True)
class SeriesResult:
    value: float
    terms_used: int
    converged: bool
    tail_estimate: float


def _is_nonpositive_int(q: float) -> bool:
    return q <= 0 and q == math.floor(q)


def _check_params(numer: Sequence[float], denom: Sequence[float], z: float) -> None:
    for q in denom:
        if _is_nonpositive_int(q):
            raise DomainError(f"lower parameter {q!r} is zero or a negative integer")
    if not math.isfinite(z) or abs(z) > 1.0:
        raise DomainError(f"series needs |z| <= 1, got z={z!r}")
    if abs(z) == 1.0 and not any(_is_nonpositive_int(q) for q in numer):
        excess = sum(denom) - sum(numer)
        if not excess > 0:
            raise DomainError(
                f"series diverges at |z| = 1: sum(lower) - sum(upper) = {excess!r} <= 0"
            )


def hypergeometric_pfq(
    numer: Sequence[float], denom: Sequence[float], z: float, cfg: ToleranceConfig = DEFAULT
) -> SeriesResult:
    """Generalized ``pFq(numer; denom; z)`` with ``p = q + 1``, ``|z| <= 1``."""
    z = float(z)
    _check_params(numer, denom, z)
    term = 1.0
    total = 1.0
    small = 0
    used = 1
    n = 0
    while used < cfg.max_terms:
        ratio = z / (n + 1)
        for q in numer:
            ratio *= q + n
        for q in denom:
            ratio /= q + n
        term *= ratio
        n += 1
        used += 1
        total += term
        if abs(term) <= max(cfg.rel_tol * abs(total), cfg.abs_tol):
            small += 1
            if small >= _STOP_RUN:
                return SeriesResult(total, used, True, abs(term))
        else:
            small = 0
    return SeriesResult(total, used, False, abs(term))


def gauss_2f1(
    alpha: float, beta: float, gamma: float, z: float, cfg: ToleranceConfig = DEFAULT
) -> SeriesResult:
    return hypergeometric_pfq((alpha, beta), (gamma,), z, cfg)


def series_3f2(
    a1: float, a2: float, a3: float, b1: float, b2: float, z: float,
    cfg: ToleranceConfig = DEFAULT,
) -> SeriesResult:
    return hypergeometric_pfq((a1, a2, a3), (b1, b2), z, cfg)


def appell_f4(
    alpha: float, beta: float, x: float, y: float, cfg: ToleranceConfig = DEFAULT
) -> SeriesResult:
    """Appell ``F4(alpha, beta; 1, 1; x, y)`` for ``x, y >= 0``, ``sqrt(x) + sqrt(y) < 1``.

    Summed in blocks of constant ``m + n``; ``terms_used`` counts blocks.
    """
    x, y = float(x), float(y)
    if not (x >= 0.0 and y >= 0.0):
        raise DomainError(f"appell_f4 needs x, y >= 0, got ({x!r}, {y!r})")
    if not math.sqrt(x) + math.sqrt(y) < 1.0:
        raise DomainError(
            f"appell_f4 diverges for sqrt(x) + sqrt(y) >= 1, got x={x!r}, y={y!r}"
        )
    value, used, converged, tail = _backend.f4_sum(
        float(alpha), float(beta), x, y, cfg.rel_tol, cfg.abs_tol, cfg.max_terms
    )
    return SeriesResult(float(value), int(used), bool(converged), float(tail))


def identity_eq6_first(z: float, cfg: ToleranceConfig = DEFAULT) -> tuple[float, float]:
    """Both sides of ``2F1(-1/4, 1/4; 1; z^2) = (2/pi) sqrt(1+z) E(k(z))``."""
    z = float(z)
    if not 0.0 <= z < 1.0:
        raise DomainError(f"identity needs 0 <= z < 1, got z={z!r}")
    lhs = gauss_2f1(-0.25, 0.25, 1.0, z * z, cfg).value
    rhs = 2.0 / math.pi * math.sqrt(1.0 + z) * complete_E(modulus_from_z(z), cfg)
    return lhs, rhs


def identity_eq6_second(z: float, cfg: ToleranceConfig = DEFAULT) -> tuple[float, float]:
    """Both sides of
    ``2F1(3/4, 5/4; 2; z^2) = 8 / (pi z^2 sqrt(1+z)) * (K(k) - (1+z) E(k))``.
    """
    z = float(z)
    if not 0.0 < z < 1.0:
        raise DomainError(f"identity needs 0 < z < 1, got z={z!r}")
    lhs = gauss_2f1(0.75, 1.25, 2.0, z * z, cfg).value
    ke = elliptic_ke(modulus_from_z(z), cfg)
    rhs = 8.0 / (math.pi * z * z * math.sqrt(1.0 + z)) * (ke.K - (1.0 + z) * ke.E)
    return lhs, rhs
