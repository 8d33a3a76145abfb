"""Pure numpy versions of the compiled kernels in ``_kernels.pyx``."""

import math

import numpy as np


def tensor_sum(wx, cx, wy, cy, a, b):
    """``sum_ij wx_i wy_j sqrt(1 + a cx_i + b cy_j)``, negative arguments clipped to 0."""
    grid = 1.0 + a * np.asarray(cx)[:, None] + b * np.asarray(cy)[None, :]
    np.maximum(grid, 0.0, out=grid)
    np.sqrt(grid, out=grid)
    return float(np.dot(wx, grid @ wy))


def f4_sum(alpha, beta, x, y, rel_tol, abs_tol, max_terms):
    """Appell F4(alpha, beta; 1, 1; x, y) summed by anti-diagonal blocks.

    Returns ``(value, blocks_used, converged, |last block|)``.
    """
    t = np.ones(1)
    total = block = 1.0
    used = 1
    small = 0
    converged = False
    while used < max_terms:
        s = used - 1
        c = (alpha + s) * (beta + s)
        edge = t[s] * c * x / ((s + 1.0) * (s + 1.0))
        n = s + 1.0 - np.arange(s + 1)
        t = np.append(t * (c * y) / (n * n), edge)
        block = float(t.sum())
        used += 1
        total += block
        if abs(block) <= max(rel_tol * abs(total), abs_tol):
            small += 1
            if small >= 3:
                converged = True
                break
        else:
            small = 0
    return total, used, converged, abs(block)


def eq7_core(a, b, rel_tol, max_iters):
    """Elliptic combination for ``a, b >= 0``, ``a + b <= 1``.

    Returns ``(status, value, error_estimate)``; status 0 ok, 1 corner,
    2 AGM not converged.
    """
    from .config import ConvergenceError, ToleranceConfig
    from .elliptic import elliptic_ke
    from .params import map_uv, modulus_from_z

    cfg = ToleranceConfig(rel_tol=rel_tol, max_iters=max_iters)
    r = map_uv((a, b))
    if r.u >= 1.0 or r.v >= 1.0:
        return 1, 0.0, 0.0
    zu, zv = math.sqrt(r.u), math.sqrt(r.v)
    try:
        ku = elliptic_ke(modulus_from_z(zu), cfg)
        kv = elliptic_ke(modulus_from_z(zv), cfg)
    except ConvergenceError as exc:
        return 2, 0.0, exc.residual
    su, sv = math.sqrt(1.0 + zu), math.sqrt(1.0 + zv)
    terms = (
        2.0 * su * sv * ku.E * kv.E,
        ku.K * kv.K / (su * sv),
        -(su / sv) * ku.E * kv.K,
        -(sv / su) * kv.E * ku.K,
    )
    scale = 4.0 * sum(abs(t) for t in terms)
    err = scale * (2.0 * (ku.gap + kv.gap) + 8.0 * 2.0 ** -52)
    return 0, 4.0 * sum(terms), err
