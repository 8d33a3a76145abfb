"""Brute-force evaluation of the double integral by Gauss-Legendre quadrature.

This module is the ground truth the closed forms are checked against; it
depends on nothing but the integrand.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np

from . import _backend
from .config import DEFAULT, ConvergenceError, ToleranceConfig
from .params import as_amplitudes

INTERIOR_TOL = 1e-11
BOUNDARY_TOL = 1e-8
BOUNDARY_BAND = 0.05
SUBDIVIDE_ABOVE = 0.9


@dataclass(frozen=True)
class QuadResult:
    value: float
    error_estimate: float
    levels_used: int
    nodes_total: int
    converged: bool


@functools.lru_cache(maxsize=64)
def gauss_legendre(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights of the n-point rule on [-1, 1], ascending.

    Newton iteration on P_n evaluated by the three-term recurrence.  The
    cache is idempotent, so a racing first use just computes twice.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    i = np.arange(1, n + 1)
    x = np.cos(np.pi * (i - 0.25) / (n + 0.5))
    for _ in range(100):
        p0, p1 = np.ones_like(x), x.copy()
        for j in range(2, n + 1):
            p0, p1 = p1, ((2 * j - 1) * x * p1 - (j - 1) * p0) / j
        dp = n * (x * p1 - p0) / (x * x - 1.0)
        dx = p1 / dp
        x = x - dx
        if np.max(np.abs(dx)) <= 1e-15:
            break
    else:
        raise ConvergenceError(f"Legendre root iteration for n={n} did not settle")
    # derivative at the final nodes for the weights
    p0, p1 = np.ones_like(x), x.copy()
    for j in range(2, n + 1):
        p0, p1 = p1, ((2 * j - 1) * x * p1 - (j - 1) * p0) / j
    dp = n * (x * p1 - p0) / (x * x - 1.0)
    w = 2.0 / ((1.0 - x * x) * dp * dp)
    x, w = x[::-1].copy(), w[::-1].copy()
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


def rule_on(n: int, lo: float, hi: float) -> tuple[np.ndarray, np.ndarray]:
    x, w = gauss_legendre(n)
    half = 0.5 * (hi - lo)
    return lo + half * (x + 1.0), half * w


def quad_tolerance(l1: float, cfg: ToleranceConfig) -> float:
    if cfg.quad_rel_tol is not None:
        return cfg.quad_rel_tol
    return BOUNDARY_TOL if l1 >= 1.0 - BOUNDARY_BAND else INTERIOR_TOL


def corner_cells(depth: int) -> list[tuple[float, float, float, float]]:
    """Partition of [0, pi]^2 graded dyadically toward (pi, pi).

    Each level splits the current corner square into four; the three away
    from the corner are kept, the fourth is split again.
    """
    cells = []
    lo = 0.0
    for _ in range(depth):
        mid = 0.5 * (lo + math.pi)
        cells += [(lo, mid, lo, mid), (lo, mid, mid, math.pi), (mid, math.pi, lo, mid)]
        lo = mid
    cells.append((lo, math.pi, lo, math.pi))
    return cells


def _refine(levels_fn, tol: float, cfg: ToleranceConfig) -> QuadResult:
    prev = None
    nodes_total = 0
    err = math.inf
    value = math.nan
    for level in range(cfg.quad_max_levels):
        n = cfg.quad_base_nodes << level
        value, used = levels_fn(n)
        nodes_total += used
        if prev is not None:
            err = abs(value - prev)
            if err <= max(tol * abs(value), cfg.abs_tol):
                return QuadResult(value, err, level + 1, nodes_total, True)
        prev = value
    return QuadResult(value, err, cfg.quad_max_levels, nodes_total, False)


def quad1d(a: float, cfg: ToleranceConfig = DEFAULT) -> QuadResult:
    """``int_0^pi sqrt(1 + a cos x) dx`` for ``|a| <= 1``, by node doubling."""
    a = abs(float(a))
    as_amplitudes((a, 0.0)).check_admissible()

    def level(n):
        x, w = rule_on(n, 0.0, math.pi)
        f = np.sqrt(np.maximum(1.0 + a * np.cos(x), 0.0))
        return float(np.dot(w, f)), n

    return _refine(level, quad_tolerance(a, cfg), cfg)


def quad2d(p, cfg: ToleranceConfig = DEFAULT) -> QuadResult:
    """``int_0^pi int_0^pi sqrt(1 + a cos x + b cos y) dx dy`` for ``|a|+|b| <= 1``.

    Tensor-product Gauss-Legendre per cell with node doubling.  For
    ``|a|+|b| > 0.9`` the square is first graded toward the integrand's
    near-zero at (pi, pi).
    """
    p = as_amplitudes(p)
    p.check_admissible()
    a, b = abs(p.a), abs(p.b)
    l1 = a + b
    cells = corner_cells(cfg.quad_corner_depth) if l1 > SUBDIVIDE_ABOVE else [
        (0.0, math.pi, 0.0, math.pi)
    ]

    def level(n):
        total = 0.0
        for x0, x1, y0, y1 in cells:
            x, wx = rule_on(n, x0, x1)
            y, wy = rule_on(n, y0, y1)
            total += _backend.tensor_sum(wx, np.cos(x), wy, np.cos(y), a, b)
        return total, n * n * len(cells)

    return _refine(level, quad_tolerance(l1, cfg), cfg)
