"""Analytic decay parameters and mesh selection rules.

A target function is described by a strip half-width d, decay rates alpha
(algebraic, towards -inf) and beta (exponential, towards +inf), and optional
envelope constants K- and K+.  The SE and DE mesh rules pick the step h and
truncation numbers from these parameters; the admissibility helpers check
the regime in which the DE a-priori bound is proved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .sinc import SincGrid

__all__ = [
    "DEFAULT_L",
    "DecayParams",
    "ParameterRegimeError",
    "ThresholdGeometry",
    "d_upper_limit",
    "de_mesh",
    "min_n_for_bound",
    "se_mesh",
    "threshold_holds",
]

# Reference constant log(e/(e-1)); the DE bound constants are proved for
# exactly this value, so the public bound API pins it.
DEFAULT_L = math.log(math.e / (math.e - 1.0))


class ParameterRegimeError(ValueError):
    """Raised when parameters leave the regime in which a bound is proved."""


@dataclass(frozen=True)
class DecayParams:
    """Decay description of the target function.

    k_minus / k_plus may be None when only the mesh is needed; computing an
    error bound with them absent is an error.  mu is stored rather than
    recomputed so parameter sets stay bit-faithful to their source, but it
    must equal min(alpha, beta) exactly.
    """

    d: float
    alpha: float
    beta: float
    mu: float
    k_minus: float | None = None
    k_plus: float | None = None

    def __post_init__(self) -> None:
        for name in ("d", "alpha", "beta", "mu"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0.0):
                raise ValueError(f"{name} must be positive and finite, got {value}")
        if self.mu != min(self.alpha, self.beta):
            raise ValueError(
                f"mu must equal min(alpha, beta) = {min(self.alpha, self.beta)}, got {self.mu}"
            )
        for name in ("k_minus", "k_plus"):
            value = getattr(self, name)
            if value is not None and not (math.isfinite(value) and value > 0.0):
                raise ValueError(f"{name} must be positive and finite when given, got {value}")

    @property
    def has_envelope_constants(self) -> bool:
        return self.k_minus is not None and self.k_plus is not None


@dataclass(frozen=True)
class ThresholdGeometry:
    """Geometry behind the DE admissibility condition for a given d."""

    L: float
    d: float
    r0: float
    r1: float
    c_d: float


def se_mesh(n: int, p: DecayParams) -> SincGrid:
    """SE mesh: h = sqrt(pi*d/(mu*n)), truncations ceil((mu/alpha)*n) and
    ceil((mu/beta)*n).  max(m, n) == n always, since mu = min(alpha, beta)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    h = math.sqrt(math.pi * p.d / (p.mu * n))
    m = math.ceil((p.mu / p.alpha) * n)
    n_right = math.ceil((p.mu / p.beta) * n)
    return SincGrid(h=h, m=m, n=n_right)


def de_mesh(n: int, p: DecayParams) -> SincGrid:
    """DE mesh: h = log(2*d*n/mu)/n, truncations n - floor(log(rate/mu)/h)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    ratio = 2.0 * p.d * n / p.mu
    if ratio <= 1.0:
        raise ParameterRegimeError(
            f"DE mesh needs 2*d*n/mu > 1 for a positive step, got {ratio}"
        )
    h = math.log(ratio) / n
    m = n - math.floor(math.log(p.alpha / p.mu) / h)
    n_right = n - math.floor(math.log(p.beta / p.mu) / h)
    return SincGrid(h=h, m=m, n=n_right)


def d_upper_limit(L: float = DEFAULT_L) -> float:
    """Largest admissible strip half-width for the DE bound, as a function
    of the comparison constant L; strictly between 0 and pi/2."""
    if not (math.isfinite(L) and L > 0.0):
        raise ValueError(f"L must be positive and finite, got {L}")
    ratio = 2.0 * math.pi / L
    return math.acos(math.sqrt(2.0 / (1.0 + math.sqrt(1.0 + ratio * ratio))))


def threshold_holds(d: float, L: float = DEFAULT_L) -> tuple[bool, ThresholdGeometry]:
    """Check the DE admissibility inequality that implicitly lower-bounds d.

    Returns the verdict together with the geometry record (r0, r1 and the
    angle c_d = (pi/2)/cosh(r1 - r0)).  The smallest d passing the check is
    about 0.575.
    """
    if not (0.0 < d < 0.5 * math.pi):
        raise ValueError(f"d must lie in (0, pi/2), got {d}")
    if not (math.isfinite(L) and L > 0.0):
        raise ValueError(f"L must be positive and finite, got {L}")
    cos_d = math.cos(d)
    r0 = math.asinh(L / (math.pi * cos_d))
    r1 = math.log((1.0 + cos_d) / math.sin(d))
    w = math.cosh(r1 - r0)
    lhs = (w - 1.0 / (w * w)) * math.cosh(r0)
    geometry = ThresholdGeometry(L=L, d=d, r0=r0, r1=r1, c_d=(0.5 * math.pi) / w)
    return lhs <= math.sqrt(1.5), geometry


def min_n_for_bound(p: DecayParams) -> int:
    """Smallest n for which the DE bound constant is valid: ceil(mu*e/(2*d))."""
    return math.ceil(p.mu * math.e / (2.0 * p.d))
