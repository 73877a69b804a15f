"""Sinc approximation on the real line for functions that decay
algebraically towards -inf and exponentially towards +inf, with SE and DE
variable transformations, fully computable a-priori error bounds, and a
benchmark CLI that reproduces the convergence experiments."""

from .approx import Approximant, build, evaluate, max_error_on_grid
from .bounds import ErrorBound, LemmaMargins, de_bound, lemma_margins, se_bound
from .params import (
    DEFAULT_L,
    DecayParams,
    ParameterRegimeError,
    ThresholdGeometry,
    d_upper_limit,
    de_mesh,
    min_n_for_bound,
    se_mesh,
    threshold_holds,
)
from .sinc import SincGrid, cardinal_sum, sinc_basis
from .testfns import FunctionId, Method, PresetKey, f1, f2, preset, reference_function
from .transforms import TransformKind, forward, inverse, transformed_sample

__all__ = [
    "Approximant",
    "DEFAULT_L",
    "DecayParams",
    "ErrorBound",
    "FunctionId",
    "LemmaMargins",
    "Method",
    "ParameterRegimeError",
    "PresetKey",
    "SincGrid",
    "ThresholdGeometry",
    "TransformKind",
    "build",
    "cardinal_sum",
    "d_upper_limit",
    "de_bound",
    "de_mesh",
    "evaluate",
    "f1",
    "f2",
    "forward",
    "inverse",
    "lemma_margins",
    "max_error_on_grid",
    "min_n_for_bound",
    "preset",
    "reference_function",
    "se_bound",
    "se_mesh",
    "sinc_basis",
    "threshold_holds",
    "transformed_sample",
]

__version__ = "0.1.0"
