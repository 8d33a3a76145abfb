"""The amplitude map (a, b) -> (u, v) and the modulus map k(z)."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .config import DomainError
from .elliptic import EllipticModulus

# slack on |a| + |b| <= 1 absorbing roundoff in callers' grids
BOUNDARY_SLACK = 1e-14


@dataclass(frozen=True)
class Amplitudes:
    """Cosine amplitudes of the integrand ``sqrt(1 + a cos x + b cos y)``."""

    a: float
    b: float

    def __post_init__(self):
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise DomainError(f"amplitudes must be finite, got ({self.a!r}, {self.b!r})")

    def __iter__(self):
        return iter((self.a, self.b))

    @property
    def l1(self) -> float:
        return abs(self.a) + abs(self.b)

    def reduced(self) -> "Amplitudes":
        """The sign-reduced pair ``(|a|, |b|)``; the integral is invariant."""
        return Amplitudes(abs(self.a), abs(self.b))

    def swapped(self) -> "Amplitudes":
        return Amplitudes(self.b, self.a)

    def check_admissible(self, strict: bool = False) -> None:
        if strict:
            if not self.l1 < 1.0:
                raise DomainError(
                    f"requires |a| + |b| < 1 strictly, got |{self.a}| + |{self.b}| = {self.l1!r}"
                )
        elif self.l1 > 1.0 + BOUNDARY_SLACK:
            raise DomainError(
                f"requires |a| + |b| <= 1, got |{self.a}| + |{self.b}| = {self.l1!r}"
            )


def as_amplitudes(p) -> Amplitudes:
    if isinstance(p, Amplitudes):
        return p
    a, b = p
    return Amplitudes(float(a), float(b))


@dataclass(frozen=True)
class ReducedPair:
    u: float
    v: float


def discriminant(a: float, b: float) -> float:
    """``(1+a^2-b^2)^2 - 4a^2`` as ``(1-s)(1+s)(1-d)(1+d)``, ``s = a+b``, ``d = a-b``.

    The factored form is exact under ``a <-> b`` and clamps to 0 on the
    boundary instead of going slightly negative.
    """
    a, b = abs(a), abs(b)
    s, d = a + b, a - b
    return (max(1.0 - s, 0.0) * (1.0 + s)) * ((1.0 - d) * (1.0 + d))


def _small_root(a2: float, e: float, root: float) -> float:
    # 2a^2 / (1 + e + sqrt(D)) is the cancellation-free form of (1 + e - sqrt(D)) / 2
    den = 1.0 + e + root
    if a2 == 0.0:
        return 0.0
    return 2.0 * a2 / den if den > 0.0 else 0.5 * (1.0 + e - root)


def map_uv(p) -> ReducedPair:
    """Reduced parameters with ``u(1-v) = a^2`` and ``v(1-u) = b^2`` (minus branch)."""
    p = as_amplitudes(p)
    p.check_admissible()
    a, b = abs(p.a), abs(p.b)
    root = math.sqrt(discriminant(a, b))
    a2, b2 = a * a, b * b
    e = a2 - b2
    return ReducedPair(_small_root(a2, e, root), _small_root(b2, -e, root))


def modulus_from_z(z: float) -> EllipticModulus:
    """``k = sqrt(2z/(1+z))``, with complement ``sqrt((1-z)/(1+z))``."""
    z = float(z)
    if not 0.0 <= z <= 1.0:
        raise DomainError(f"modulus map needs 0 <= z <= 1, got z={z!r}")
    return EllipticModulus(math.sqrt(2.0 * z / (1.0 + z)), math.sqrt((1.0 - z) / (1.0 + z)))
