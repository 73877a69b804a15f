"""Building and evaluating transformed Sinc approximants.

An approximant stores the transformed samples f(T(k*h)) on the mesh chosen
by the parameter rules; evaluating it at t maps t back through the inverse
transformation and forms one cardinal sum.  Approximants are immutable, so
concurrent evaluation is safe.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Callable

from .params import DEFAULT_L, DecayParams, d_upper_limit, de_mesh, se_mesh, threshold_holds
from .sinc import SincGrid, cardinal_sum
from .transforms import TransformKind, inverse, transformed_sample

__all__ = ["Approximant", "build", "evaluate", "max_error_on_grid"]


@dataclass(frozen=True)
class Approximant:
    """Immutable transformed-Sinc approximant: f(t) ~ sum of stored samples
    times the sinc basis at inverse(kind, t)."""

    kind: TransformKind
    grid: SincGrid
    samples: tuple[float, ...]
    params: DecayParams
    n: int

    def __call__(self, t: float) -> float:
        return evaluate(self, t)


def build(
    f: Callable[[float], float],
    kind: TransformKind,
    p: DecayParams,
    n: int,
) -> Approximant:
    """Sample f through the transformation on the mesh the parameters select.

    The DE admissibility conditions are only warnings here: the approximant
    itself runs fine outside the proved regime, the bound just is not valid
    there, and computing it will refuse separately.
    """
    if kind.is_double_exponential:
        grid = de_mesh(n, p)
        if p.d >= d_upper_limit(DEFAULT_L) or not threshold_holds(p.d, DEFAULT_L)[0]:
            warnings.warn(
                f"d={p.d} is outside the proved regime for the DE bound; "
                "observed errors are fine but the a-priori bound is invalid",
                RuntimeWarning,
                stacklevel=2,
            )
    else:
        grid = se_mesh(n, p)

    samples = []
    for k in grid.indices():
        try:
            value = transformed_sample(kind, f, k * grid.h)
        except ValueError as exc:
            raise ValueError(f"building sample at k={k} failed: {exc}") from exc
        samples.append(value)
    return Approximant(kind=kind, grid=grid, samples=tuple(samples), params=p, n=n)


def evaluate(a: Approximant, t: float) -> float:
    """Value of the approximant at any finite t.

    The full sum is always formed (no windowing): the basis decays only
    like 1/|x|, so dropping far terms would change results.
    """
    return cardinal_sum(a.samples, a.grid, inverse(a.kind, t))


def max_error_on_grid(
    a: Approximant,
    f: Callable[[float], float],
    points: list[float],
) -> float:
    """max over the points of |f(t) - evaluate(a, t)|."""
    if not points:
        raise ValueError("evaluation grid must not be empty")
    worst = 0.0
    for t in points:
        err = abs(f(t) - evaluate(a, t))
        if err > worst:
            worst = err
    return worst
