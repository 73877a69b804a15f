"""Rigorous a-priori error bounds for the SE and DE approximants.

Both bounds have the shape (constant independent of n) * (decay profile):

    SE (psitilde5 mesh):  [2*C_D/(pi*d*(1 - e^(-2*sqrt(pi*d*mu))))
                           + C_T*sqrt(mu/(pi*d))] * sqrt(n) * e^(-sqrt(pi*d*mu*n))
    DE (phi5 mesh):       (1/(pi*d)) * [2*C_D/(pi*(1 - e^(-pi*mu*e))*cos(d))
                           + C_T] * e^(-pi*d*n/log(2*d*n/mu))

where C_D controls the discretization part and C_T the truncated tails.
The constants are composed exactly as in their derivations (no algebraic
re-simplification) so every factor can be audited term by term.

`lemma_margins` spot-checks, on the real axis, the three inequalities that
make the DE constants work; tests sweep them densely and require the
margins to be nonnegative up to floating-point slack.
"""

from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass

from .params import (
    DEFAULT_L,
    DecayParams,
    ParameterRegimeError,
    d_upper_limit,
    min_n_for_bound,
    threshold_holds,
)
from .testfns import Method
from .transforms import log1p_exp

__all__ = ["ErrorBound", "LemmaMargins", "de_bound", "lemma_margins", "se_bound"]

_LOG2 = math.log(2.0)
_ONE_MINUS_LOG2 = 1.0 - _LOG2
_E_POW_INV_LOG2 = math.exp(1.0 / _LOG2)


@dataclass(frozen=True)
class ErrorBound:
    """One evaluated bound: full value at n plus its n-independent constant
    and the intermediate constants it was assembled from."""

    method: Method
    n: int
    constant_part: float
    bound_value: float
    components: dict[str, float]


def _require_envelope(p: DecayParams) -> tuple[float, float]:
    if not p.has_envelope_constants:
        raise ParameterRegimeError(
            "error bounds need the envelope constants k_minus and k_plus; "
            "this parameter set carries none"
        )
    return p.k_minus, p.k_plus


def se_bound(p: DecayParams, n: int) -> ErrorBound:
    """Computable bound for the psitilde5/SE-mesh approximant; needs 0 < d < pi."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not p.d < math.pi:
        raise ParameterRegimeError(f"SE bound is proved for 0 < d < pi, got d={p.d}")
    k_minus, k_plus = _require_envelope(p)

    cos_half_d = math.cos(0.5 * p.d)
    c_disc = (k_minus / p.alpha) * (
        math.e / (_ONE_MINUS_LOG2 * (math.e - 1.0) * cos_half_d)
    ) ** p.alpha + (k_plus / p.beta) * (_E_POW_INV_LOG2 / cos_half_d) ** p.beta
    c_trunc = (k_minus / p.alpha) * (1.0 / _ONE_MINUS_LOG2) ** p.alpha + (
        k_plus / p.beta
    ) * _E_POW_INV_LOG2**p.beta

    pdm = math.pi * p.d * p.mu
    constant = 2.0 * c_disc / (math.pi * p.d * (1.0 - math.exp(-2.0 * math.sqrt(pdm)))) + (
        c_trunc * math.sqrt(p.mu / (math.pi * p.d))
    )
    value = constant * math.sqrt(n) * math.exp(-math.sqrt(pdm * n))
    return ErrorBound(
        method=Method.T22,
        n=n,
        constant_part=constant,
        bound_value=value,
        components={"C_D": c_disc, "C_T": c_trunc},
    )


def de_bound(p: DecayParams, n: int) -> ErrorBound:
    """Computable bound for the phi5/DE-mesh approximant.

    Proved only for 0 < d < d_upper_limit(), d passing the admissibility
    threshold, and n >= min_n_for_bound(p); anything outside that regime is
    refused rather than extrapolated.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    k_minus, k_plus = _require_envelope(p)
    d_limit = d_upper_limit(DEFAULT_L)
    if not p.d < d_limit:
        raise ParameterRegimeError(
            f"DE bound needs d < {d_limit:.6f}, got d={p.d}"
        )
    ok, geometry = threshold_holds(p.d, DEFAULT_L)
    if not ok:
        raise ParameterRegimeError(
            f"DE bound needs the admissibility threshold to hold; it fails at d={p.d} "
            "(smallest admissible d is about 0.575)"
        )
    n_min = min_n_for_bound(p)
    if n < n_min:
        raise ParameterRegimeError(
            f"DE bound needs n >= mu*e/(2*d) = {n_min}, got n={n}"
        )

    cos_d = math.cos(p.d)
    c_disc = (k_minus / p.alpha) * (
        (math.e**2 + math.e + 1.0)
        / (_ONE_MINUS_LOG2 * (math.e**2 - 1.0) * math.cos(geometry.c_d))
    ) ** p.alpha + (k_plus / p.beta) * (
        _E_POW_INV_LOG2 / math.cos(0.5 * math.pi * math.sin(p.d))
    ) ** p.beta
    c_trunc = k_minus * (math.exp(0.5 * math.pi) / _ONE_MINUS_LOG2) ** p.alpha + k_plus * (
        math.exp(0.5 * math.pi + 1.0 / _LOG2)
    ) ** p.beta

    constant = (
        2.0 * c_disc / (math.pi * (1.0 - math.exp(-math.pi * p.mu * math.e)) * cos_d) + c_trunc
    ) / (math.pi * p.d)
    value = constant * math.exp(-math.pi * p.d * n / math.log(2.0 * p.d * n / p.mu))
    return ErrorBound(
        method=Method.T23,
        n=n,
        constant_part=constant,
        bound_value=value,
        components={"C_D": c_disc, "C_T": c_trunc, "c_d": geometry.c_d},
    )


@dataclass(frozen=True)
class LemmaMargins:
    """Slack of the real-axis inequalities at one point x.

    ratio_margin applies everywhere; plus_margin only for x >= 0 and
    minus_margin only for x <= 0 (None outside their half-lines).  All
    margins are nonnegative in exact arithmetic.
    """

    x: float
    ratio_margin: float
    plus_margin: float | None
    minus_margin: float | None


def _log_ratio_value(u: float) -> float:
    """|ell/(1 + ell) * (1 + e^-u)| with ell = log(1 + e^u), stable in u."""
    if u >= 0.0:
        ell = log1p_exp(u)
        return ell / (1.0 + ell) * (1.0 + math.exp(-u))
    w = math.exp(u)
    ell = math.log1p(w)
    # ell * e^-u = log1p(w)/w -> 1 as w -> 0
    scaled = 1.0 - 0.5 * w if w < 1e-8 else ell / w
    return (ell + scaled) / (1.0 + ell)


def lemma_margins(points: Iterable[float]) -> list[LemmaMargins]:
    """Evaluate the three inequality margins at each x (with u = pi*sinh(x)):

    (a) 1 - ell/(1+ell)*(1+e^-u) >= 0            for all x,
    (b) 1/log(2) - 1/ell >= 0                    for x >= 0,
    (c) 1/(1 - log(2)) - 1/|ell - 1| >= 0        for x <= 0,

    where ell = log(1 + e^u).  Margins are reported as computed; a negative
    one beyond rounding slack indicates a broken inequality, not an error.
    """
    records = []
    for x in points:
        if not math.isfinite(x):
            raise ValueError(f"sample point must be finite, got {x}")
        u = math.pi * math.sinh(x)
        ratio_margin = 1.0 - _log_ratio_value(u)
        plus_margin = None
        minus_margin = None
        if x >= 0.0:
            plus_margin = 1.0 / _LOG2 - 1.0 / log1p_exp(u)
        if x <= 0.0:
            ell = log1p_exp(u)
            minus_margin = 1.0 / _ONE_MINUS_LOG2 - 1.0 / (1.0 - ell)
        records.append(
            LemmaMargins(
                x=x,
                ratio_margin=ratio_margin,
                plus_margin=plus_margin,
                minus_margin=minus_margin,
            )
        )
    return records
