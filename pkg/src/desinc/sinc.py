"""Sinc basis evaluation and truncated cardinal sums.

The basis member with index k on a uniform mesh of size h is
sin(pi*(x - k*h)/h) / (pi*(x - k*h)/h), with value 1 at its own node and
0 at every other node.  A cardinal sum combines stored samples with these
basis functions to interpolate anywhere on the real line.
"""

from __future__ import annotations

import math
from collections.abc import Mapping, Sequence
from dataclasses import dataclass

__all__ = ["SincGrid", "sinc_basis", "cardinal_sum"]

# Below this the direct sin(u)/u quotient is replaced by a two-term series;
# the series error at the branch point is < 1e-33.
_SERIES_CUTOFF = 1e-8


@dataclass(frozen=True)
class SincGrid:
    """Uniform sample mesh: indices k = -m .. n with spacing h."""

    h: float
    m: int
    n: int

    def __post_init__(self) -> None:
        if not (math.isfinite(self.h) and self.h > 0.0):
            raise ValueError(f"mesh size must be positive and finite, got {self.h}")
        if self.m < 0 or self.n < 0:
            raise ValueError(f"truncation numbers must be nonnegative, got m={self.m}, n={self.n}")

    @property
    def size(self) -> int:
        """Total number of samples, m + n + 1."""
        return self.m + self.n + 1

    def indices(self) -> range:
        return range(-self.m, self.n + 1)


def sinc_basis(k: int, h: float, x: float) -> float:
    """Evaluate the k-th sinc basis function on mesh size h at x.

    Exact 1.0 at x == k*h, and exact 0.0 whenever (x - k*h)/h is an integer
    in floating point, so cardinal sums reproduce stored samples bitwise at
    exactly representable nodes.
    """
    if not (math.isfinite(h) and h > 0.0):
        raise ValueError(f"mesh size must be positive and finite, got {h}")
    if not math.isfinite(x):
        raise ValueError(f"evaluation point must be finite, got {x}")
    t = x - k * h
    if t == 0.0:
        return 1.0
    r = t / h
    # Integer r means an exact zero of sin; return it exactly rather than
    # as the rounding noise of sin(pi*r).
    if r == math.floor(r):
        return 0.0
    u = math.pi * r
    if abs(u) < _SERIES_CUTOFF:
        return 1.0 - u * u / 6.0
    return math.sin(u) / u


def cardinal_sum(
    samples: Mapping[int, float] | Sequence[float],
    grid: SincGrid,
    x: float,
) -> float:
    """Sum samples[k] * sinc_basis(k, h, x) over k = -m .. n.

    `samples` is either a mapping from k to the sample value, or a flat
    sequence of length m + n + 1 ordered by k.  The sum runs in a single
    pass in index order with compensated (Kahan) accumulation, so results
    are deterministic despite the mixed signs of the basis.
    """
    if isinstance(samples, Mapping):
        try:
            values = [samples[k] for k in grid.indices()]
        except KeyError as exc:
            raise ValueError(f"missing sample at index k={exc.args[0]}") from None
    else:
        if len(samples) != grid.size:
            raise ValueError(f"expected {grid.size} samples for grid {grid}, got {len(samples)}")
        values = list(samples)

    total = 0.0
    comp = 0.0
    for offset, k in enumerate(grid.indices()):
        term = values[offset] * sinc_basis(k, grid.h, x)
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
    return total
