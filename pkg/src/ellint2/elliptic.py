"""Complete elliptic integrals K(k) and E(k) by the arithmetic-geometric mean.

All functions use the *modulus* convention: the argument is ``k`` and the
integrands are ``1/sqrt(1 - k^2 sin^2 t)`` and ``sqrt(1 - k^2 sin^2 t)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .config import DEFAULT, ConvergenceError, DivergenceError, DomainError, ToleranceConfig


@dataclass(frozen=True)
class EllipticModulus:
    """Modulus ``k`` together with its complement ``kc = sqrt(1 - k^2)``.

    Carrying ``kc`` separately lets callers that know ``1 - k^2`` in closed
    form avoid the cancellation in ``1 - k*k`` as ``k -> 1``.
    """

    k: float
    kc: float

    def __post_init__(self):
        if not (0.0 <= self.k <= 1.0) or not (0.0 <= self.kc <= 1.0):
            raise DomainError(f"modulus must satisfy 0 <= k <= 1, got k={self.k!r}")

    @classmethod
    def of(cls, k: float) -> "EllipticModulus":
        k = float(k)
        if not 0.0 <= k <= 1.0:
            raise DomainError(f"modulus must satisfy 0 <= k <= 1, got k={k!r}")
        return cls(k, math.sqrt((1.0 - k) * (1.0 + k)))

    @property
    def singular(self) -> bool:
        """True at k = 1, where K diverges."""
        return self.kc == 0.0

    def complement(self) -> "EllipticModulus":
        return EllipticModulus(self.kc, self.k)


@dataclass(frozen=True)
class EllipticValues:
    K: float
    E: float
    gap: float = 0.0  # final relative AGM residual |a_n - b_n| / a_n


def _as_modulus(k) -> EllipticModulus:
    return k if isinstance(k, EllipticModulus) else EllipticModulus.of(k)


def agm(a0: float, b0: float, cfg: ToleranceConfig = DEFAULT) -> float:
    """Arithmetic-geometric mean of two positive reals."""
    a, b = float(a0), float(b0)
    if not (a > 0 and b > 0):
        raise DomainError(f"agm needs positive arguments, got ({a0!r}, {b0!r})")
    for _ in range(cfg.max_iters):
        if abs(a - b) <= cfg.rel_tol * a:
            return a
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    if abs(a - b) <= cfg.rel_tol * a:
        return a
    raise ConvergenceError(f"agm did not converge in {cfg.max_iters} iterations", abs(a - b))


def elliptic_ke(k, cfg: ToleranceConfig = DEFAULT) -> EllipticValues:
    """K(k) and E(k) from one AGM sweep.

    E uses the companion sum ``E = K (1 - sum_{n>=0} 2^(n-1) c_n^2)`` with
    ``c_0 = k`` and ``c_{n+1} = (a_n - b_n)/2``.
    """
    m = _as_modulus(k)
    if m.singular:
        raise DivergenceError("K(k) diverges at k = 1")
    a, b = 1.0, m.kc
    acc = 0.5 * m.k * m.k
    weight = 0.5
    for _ in range(cfg.max_iters):
        if abs(a - b) <= cfg.rel_tol * a:
            break
        c = 0.5 * (a - b)
        weight *= 2.0
        acc += weight * c * c
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    else:
        if abs(a - b) > cfg.rel_tol * a:
            raise ConvergenceError(
                f"AGM for k={m.k!r} did not converge in {cfg.max_iters} iterations", abs(a - b)
            )
    K = math.pi / (2.0 * a)
    return EllipticValues(K, K * (1.0 - acc), abs(a - b) / a)


def complete_K(k, cfg: ToleranceConfig = DEFAULT) -> float:
    """Complete elliptic integral of the first kind, ``0 <= k < 1``."""
    return elliptic_ke(k, cfg).K


def complete_E(k, cfg: ToleranceConfig = DEFAULT) -> float:
    """Complete elliptic integral of the second kind, ``0 <= k <= 1``.

    ``E(1) = 1`` exactly.
    """
    m = _as_modulus(k)
    if m.singular:
        return 1.0
    return elliptic_ke(m, cfg).E
