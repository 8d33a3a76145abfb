# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops. Signatures mirror ``ellint2._pykernels``."""

from libc.math cimport sqrt, fabs
from libc.stdlib cimport malloc, free


def tensor_sum(const double[::1] wx, const double[::1] cx,
               const double[::1] wy, const double[::1] cy,
               double a, double b):
    cdef Py_ssize_t i, j, nx = wx.shape[0], ny = wy.shape[0]
    cdef double total = 0.0, row, base, arg
    for i in range(nx):
        base = 1.0 + a * cx[i]
        row = 0.0
        for j in range(ny):
            arg = base + b * cy[j]
            if arg > 0.0:
                row += wy[j] * sqrt(arg)
        total += wx[i] * row
    return total


def f4_sum(double alpha, double beta, double x, double y,
           double rel_tol, double abs_tol, Py_ssize_t max_terms):
    cdef double *t = <double *> malloc((max_terms + 1) * sizeof(double))
    if t == NULL:
        raise MemoryError()
    cdef double total = 1.0, block = 1.0, c, thresh
    cdef Py_ssize_t s = 0, m, used = 1, small = 0
    cdef bint converged = False
    t[0] = 1.0
    try:
        while used < max_terms:
            c = (alpha + s) * (beta + s)
            t[s + 1] = t[s] * c * x / ((s + 1.0) * (s + 1.0))
            block = t[s + 1]
            for m in range(s + 1):
                t[m] = t[m] * c * y / ((s + 1.0 - m) * (s + 1.0 - m))
                block += t[m]
            s += 1
            used += 1
            total += block
            thresh = rel_tol * fabs(total)
            if thresh < abs_tol:
                thresh = abs_tol
            if fabs(block) <= thresh:
                small += 1
                if small >= 3:
                    converged = True
                    break
            else:
                small = 0
    finally:
        free(t)
    return total, used, converged, fabs(block)


cdef int _agm_ke(double k, double kc, double rel_tol, Py_ssize_t max_iters,
                 double *K, double *E, double *gap) noexcept nogil:
    cdef double a = 1.0, b = kc, acc = 0.5 * k * k, weight = 0.5, c, an
    cdef Py_ssize_t i
    cdef int ok = 0
    for i in range(max_iters):
        if fabs(a - b) <= rel_tol * a:
            ok = 1
            break
        c = 0.5 * (a - b)
        weight *= 2.0
        acc += weight * c * c
        an = 0.5 * (a + b)
        b = sqrt(a * b)
        a = an
    if not ok and fabs(a - b) > rel_tol * a:
        gap[0] = fabs(a - b) / a
        return 0
    K[0] = 3.141592653589793 / (2.0 * a)
    E[0] = K[0] * (1.0 - acc)
    gap[0] = fabs(a - b) / a
    return 1


cdef inline double _small_root(double a2, double e, double root) noexcept nogil:
    cdef double den = 1.0 + e + root
    if a2 == 0.0:
        return 0.0
    if den > 0.0:
        return 2.0 * a2 / den
    return 0.5 * (1.0 + e - root)


def eq7_core(double a, double b, double rel_tol, Py_ssize_t max_iters):
    """Elliptic combination for ``a, b >= 0``, ``a + b <= 1``.

    Returns ``(status, value, error_estimate)``; status 0 ok, 1 corner,
    2 AGM not converged.
    """
    cdef double s, dd, e, d, root, u, v, zu, zv, su, sv, t0, t1, t2, t3, scale
    cdef double Ku, Eu, gu, Kv, Ev, gv
    s = a + b
    dd = a - b
    d = 1.0 - s
    if d < 0.0:
        d = 0.0
    root = sqrt((d * (1.0 + s)) * ((1.0 - dd) * (1.0 + dd)))
    e = a * a - b * b
    u = _small_root(a * a, e, root)
    v = _small_root(b * b, -e, root)
    if u >= 1.0 or v >= 1.0:
        return 1, 0.0, 0.0
    zu = sqrt(u)
    zv = sqrt(v)
    if not _agm_ke(sqrt(2.0 * zu / (1.0 + zu)), sqrt((1.0 - zu) / (1.0 + zu)),
                   rel_tol, max_iters, &Ku, &Eu, &gu):
        return 2, 0.0, gu
    if not _agm_ke(sqrt(2.0 * zv / (1.0 + zv)), sqrt((1.0 - zv) / (1.0 + zv)),
                   rel_tol, max_iters, &Kv, &Ev, &gv):
        return 2, 0.0, gv
    su = sqrt(1.0 + zu)
    sv = sqrt(1.0 + zv)
    t0 = 2.0 * su * sv * Eu * Ev
    t1 = Ku * Kv / (su * sv)
    t2 = -(su / sv) * Eu * Kv
    t3 = -(sv / su) * Ev * Ku
    scale = 4.0 * (fabs(t0) + fabs(t1) + fabs(t2) + fabs(t3))
    return 0, 4.0 * (t0 + t1 + t2 + t3), scale * (2.0 * (gu + gv) + 8.0 * 2.220446049250313e-16)
