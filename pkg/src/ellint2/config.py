"""Tolerance configuration and the exception hierarchy."""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

TOL_ENV_VAR = "ELLINT2_DEFAULT_TOL"

_BUILTIN_REL_TOL = 1e-15


class Ellint2Error(Exception):
    """Base class for all library errors."""


class DomainError(Ellint2Error, ValueError):
    """An argument lies outside the admissible domain of an operation."""


class DivergenceError(DomainError):
    """The requested quantity is infinite (e.g. K at k = 1)."""


class CornerError(DomainError):
    """The elliptic combination was asked for a corner point (+-1, 0), (0, +-1)."""


class ConvergenceError(Ellint2Error, ArithmeticError):
    """An iteration or series did not meet its stop criterion.

    ``residual`` carries the last gap (AGM) or tail estimate (series).
    """

    def __init__(self, message: str, residual: float = float("nan")):
        super().__init__(message)
        self.residual = residual


def default_rel_tol() -> float:
    raw = os.environ.get(TOL_ENV_VAR)
    if not raw:
        return _BUILTIN_REL_TOL
    try:
        tol = float(raw)
    except ValueError:
        raise DomainError(f"{TOL_ENV_VAR}={raw!r} is not a number") from None
    if not tol > 0:
        raise DomainError(f"{TOL_ENV_VAR} must be > 0, got {raw!r}")
    return tol


@dataclass(frozen=True)
class ToleranceConfig:
    """Stop criteria shared by the AGM, the series and the quadrature.

    ``quad_rel_tol`` of ``None`` selects the oracle defaults: 1e-11 in the
    interior and 1e-8 within 0.05 of the boundary ``|a| + |b| = 1``.
    ``quad_corner_depth`` is the number of dyadic subdivision levels toward
    the integrand zero at ``(pi, pi)`` used when ``|a| + |b| > 0.9``.
    """

    rel_tol: float = _BUILTIN_REL_TOL
    abs_tol: float = 0.0
    max_iters: int = 64
    max_terms: int = 20000
    quad_base_nodes: int = 32
    quad_max_levels: int = 6
    quad_rel_tol: float | None = None
    quad_corner_depth: int = 3

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise DomainError(f"rel_tol must be > 0, got {self.rel_tol}")
        if not self.abs_tol >= 0:
            raise DomainError(f"abs_tol must be >= 0, got {self.abs_tol}")
        for name in ("max_iters", "max_terms", "quad_base_nodes", "quad_max_levels"):
            if getattr(self, name) < 1:
                raise DomainError(f"{name} must be >= 1, got {getattr(self, name)}")
        if self.quad_corner_depth < 0:
            raise DomainError("quad_corner_depth must be >= 0")
        if self.quad_rel_tol is not None and not self.quad_rel_tol > 0:
            raise DomainError(f"quad_rel_tol must be > 0, got {self.quad_rel_tol}")

    @classmethod
    def from_env(cls, **overrides) -> "ToleranceConfig":
        """Defaults with ``rel_tol`` taken from ``ELLINT2_DEFAULT_TOL`` if set."""
        overrides.setdefault("rel_tol", default_rel_tol())
        return cls(**overrides)

    def with_(self, **changes) -> "ToleranceConfig":
        return replace(self, **changes)


DEFAULT = ToleranceConfig()
