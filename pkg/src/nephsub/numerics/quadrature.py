"""Adaptive quadrature along straight segments, batched over many endpoints.

Every integral here has the form ``int_0^1 g(s, z) ds`` where ``z`` is an
array of complex parameters; the batch is integrated in one adaptive pass
by :func:`scipy.integrate.quad_vec`.
"""

from __future__ import annotations

from typing import Callable

import numpy as np
from scipy.integrate import quad_vec

from ..errors import ToleranceNotMet


def batch_quad(f: Callable[[float], np.ndarray], a: float, b: float,
               tol: float = 1e-13, limit: int = 2000) -> np.ndarray:
    """Integrate the array-valued ``f`` over ``[a, b]``.

    ``tol`` is used both as absolute and relative tolerance in the max-norm.
    """
    if a == b:
        return np.zeros_like(np.asarray(f(a)))
    val, err, info = quad_vec(f, a, b, epsabs=tol, epsrel=tol, norm="max",
                              limit=limit, full_output=True)
    # status 2 means roundoff stalled refinement; that is acceptable as long
    # as the achieved error is within a small multiple of the request
    if not info.success and not (info.status == 2 and err <= 100 * tol * max(1.0, np.max(np.abs(val)))):
        raise ToleranceNotMet(f"quadrature stopped with error estimate {err:.3g}")
    return val


def segment_integral(f: Callable[[np.ndarray], np.ndarray], z,
                     tol: float = 1e-13) -> np.ndarray:
    """``int_0^z f(t) dt`` along the segment from 0 to each ``z``.

    ``f`` must accept complex arrays and must be finite at interior points
    of each segment (Gauss-Kronrod nodes never touch the endpoints).
    """
    z = np.asarray(z, dtype=complex)
    flat = z.ravel()
    if flat.size == 0:
        return z.copy()
    val = batch_quad(lambda s: f(s * flat) * flat, 0.0, 1.0, tol=tol)
    return val.reshape(z.shape)
