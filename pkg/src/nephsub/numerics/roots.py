"""Bracketing root finder."""

from __future__ import annotations

import math

import numpy as np
from typing import Callable

from scipy.optimize import brentq

from ..errors import MaxIterations, NoBracket


def find_root(f: Callable[[float], float], lo: float, hi: float,
              tol: float = 1e-12, maxiter: int = 200) -> float:
    """Root of ``f`` in ``[lo, hi]`` by Brent's method (bisection + secant/IQI).

    Requires ``f(lo) * f(hi) <= 0``; exact zeros at an endpoint are returned
    as they are.
    """
    flo, fhi = f(lo), f(hi)
    if not (math.isfinite(flo) and math.isfinite(fhi)):
        raise NoBracket(f"non-finite endpoint values f({lo})={flo}, f({hi})={fhi}")
    if flo == 0.0:
        return float(lo)
    if fhi == 0.0:
        return float(hi)
    if flo * fhi > 0.0:
        raise NoBracket(f"f({lo})={flo:.3g} and f({hi})={fhi:.3g} have the same sign")
    try:
        root, res = brentq(f, lo, hi, xtol=tol, rtol=4 * np.finfo(float).eps,
                           maxiter=maxiter, full_output=True, disp=False)
    except RuntimeError as exc:  # pragma: no cover - disp=False should prevent this
        raise MaxIterations(str(exc)) from exc
    if not res.converged:
        raise MaxIterations(f"no convergence after {res.iterations} iterations")
    return float(root)
