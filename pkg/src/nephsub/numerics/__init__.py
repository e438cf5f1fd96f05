"""Special functions and numeric primitives."""

from .auxiliary import C_RL, SeriesTail, ein_sum, g0, psi_rl, sigmoid_ell, sine_sum
from .branches import catan, clog, csqrt
from .gamma import gamma, pochhammer
from .hypergeometric import (
    Hyp2F1Params,
    hyp2f1,
    hyp2f1_derivative,
    hyp2f1_euler,
    hyp2f1_gamma_series,
    hyp2f1_series,
    hyp2f1_terminating,
)
from .quadrature import batch_quad, segment_integral
from .roots import find_root

__all__ = [
    "C_RL",
    "Hyp2F1Params",
    "SeriesTail",
    "batch_quad",
    "catan",
    "clog",
    "csqrt",
    "ein_sum",
    "find_root",
    "g0",
    "gamma",
    "hyp2f1",
    "hyp2f1_derivative",
    "hyp2f1_euler",
    "hyp2f1_gamma_series",
    "hyp2f1_series",
    "hyp2f1_terminating",
    "pochhammer",
    "psi_rl",
    "segment_integral",
    "sigmoid_ell",
    "sine_sum",
]
