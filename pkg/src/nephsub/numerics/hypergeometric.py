"""Gaussian hypergeometric function 2F1(a, b; c; z) for real parameters.

Three evaluation routes:

* terminating polynomial when ``a`` or ``b`` is a non-positive integer;
* the power series with a rigorous ratio-test tail bound, for ``|z| <= 0.9``;
* the Euler integral with endpoint-singularity substitutions, for
  ``0.9 < |z| <= 1`` when ``c > b > 0`` (or ``c > a > 0``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import ConvergenceError, DomainError, NonConvergentAtBoundary, ParameterError
from .auxiliary import SeriesTail
from .gamma import gamma
from .quadrature import batch_quad

SERIES_RADIUS = 0.9
_DISK_SLACK = 1e-12


def _nonpos_int(x: float) -> int | None:
    if x <= 0 and x == math.floor(x):
        return int(-x)
    return None


@dataclass(frozen=True)
class Hyp2F1Params:
    a: float
    b: float
    c: float

    def __post_init__(self):
        if _nonpos_int(self.c) is not None:
            raise ParameterError(f"c={self.c} must not be zero or a negative integer")

    def shifted(self) -> "Hyp2F1Params":
        return Hyp2F1Params(self.a + 1, self.b + 1, self.c + 1)

    @property
    def terminating_degree(self) -> int | None:
        degs = [m for m in (_nonpos_int(self.a), _nonpos_int(self.b)) if m is not None]
        return min(degs) if degs else None


def _prep(z):
    arr = np.asarray(z, dtype=complex)
    if np.any(np.abs(arr) > 1.0 + _DISK_SLACK):
        raise DomainError("hyp2f1 is only evaluated on the closed unit disk")
    return arr, arr.ndim == 0


def _finish(val, scalar):
    return complex(val) if scalar else val


def hyp2f1_terminating(p: Hyp2F1Params, z, full_output: bool = False):
    """Exact polynomial evaluation; uses exactly ``m + 1`` terms for degree ``m``."""
    m = p.terminating_degree
    if m is None:
        raise ParameterError("series does not terminate")
    z, scalar = np.asarray(z, dtype=complex), np.ndim(z) == 0
    coef = 1.0
    total = np.ones_like(z)
    power = np.ones_like(z)
    for j in range(m):
        coef *= (p.a + j) * (p.b + j) / ((j + 1) * (p.c + j))
        power = power * z
        total = total + coef * power
    out = _finish(total, scalar)
    return (out, SeriesTail(m + 1, 0.0)) if full_output else out


def hyp2f1_series(p: Hyp2F1Params, z, tol: float = 1e-15, max_terms: int = 100_000,
                  full_output: bool = False):
    """Power series with a rigorous bound on the neglected tail.

    For ``k >= N`` (with ``c + N > 0``) the term ratio is bounded by
    ``rho_N = |z| (1 + |a-1|/(N+1)) (1 + |b-c|/(c+N))``; once ``rho_N < 1``
    the remainder after term ``N`` is at most ``|t_N| rho_N / (1 - rho_N)``.
    """
    if p.terminating_degree is not None:
        return hyp2f1_terminating(p, z, full_output)
    z, scalar = np.asarray(z, dtype=complex), np.ndim(z) == 0
    r = float(np.max(np.abs(z), initial=0.0))
    if r >= 1.0:
        raise ConvergenceError("power-series route needs |z| < 1")
    a, b, c = p.a, p.b, p.c
    total = np.ones_like(z)
    term = np.ones_like(z)
    bound = math.inf
    n = 0
    while n < max_terms:
        term = term * ((a + n) * (b + n) / ((n + 1) * (c + n))) * z
        n += 1
        total = total + term
        if c + n > 0:
            rho = r * (1 + abs(a - 1) / (n + 1)) * (1 + abs(b - c) / (c + n))
            if rho < 1.0:
                bound = float(np.max(np.abs(term), initial=0.0)) * rho / (1.0 - rho)
                if bound <= tol:
                    break
    else:
        raise ConvergenceError(f"series tail {bound:.3g} above {tol:.3g} after {max_terms} terms")
    out = _finish(total, scalar)
    return (out, SeriesTail(n + 1, bound)) if full_output else out


def hyp2f1_euler(p: Hyp2F1Params, z, tol: float = 1e-13):
    """Euler integral representation, valid for ``c > b > 0``.

    The interval is split at 1/2; ``u = t**b`` removes the ``t**(b-1)``
    singularity on the left and ``s = (1-t)**e`` the ``(1-t)**(e-1)`` one on
    the right, so both halves have bounded integrands. At ``z = 1`` the
    factor ``(1 - t z)**(-a)`` is folded into the right-end exponent.
    """
    a, b, c = p.a, p.b, p.c
    if not c > b > 0:
        if c > a > 0:
            a, b = b, a
        else:
            raise ConvergenceError("Euler integral needs c > b > 0 or c > a > 0")
    z, scalar = _prep(z)
    flat = z.ravel()
    d = c - b
    gc, gb, gd = gamma(c), gamma(b), gamma(d)
    out = np.empty_like(flat)

    at_one = np.abs(flat - 1.0) <= 1e-15
    rest = flat[~at_one]
    if rest.size:
        def left(u):
            t = u ** (1.0 / b)
            return (1.0 - t) ** (d - 1.0) * (1.0 - t * rest) ** (-a)

        def right(s):
            t = 1.0 - s ** (1.0 / d)
            return t ** (b - 1.0) * (1.0 - t * rest) ** (-a)

        lv = batch_quad(left, 0.0, 0.5 ** b, tol=tol)
        rv = batch_quad(right, 0.0, 0.5 ** d, tol=tol)
        out[~at_one] = gc / (b * gb * gd) * lv + gc / (gb * d * gd) * rv
    if at_one.any():
        e = d - a
        if e <= 0:
            raise NonConvergentAtBoundary(f"c - a - b = {c - a - b} <= 0 at z = 1")

        def left1(u):
            t = u ** (1.0 / b)
            return (1.0 - t) ** (e - 1.0)

        def right1(s):
            t = 1.0 - s ** (1.0 / e)
            return t ** (b - 1.0)

        lv = batch_quad(left1, 0.0, 0.5 ** b, tol=tol)
        rv = batch_quad(right1, 0.0, 0.5 ** e, tol=tol)
        out[at_one] = gc / (b * gb * gd) * lv + gc / (gb * e * gd) * rv
    return _finish(out.reshape(z.shape), scalar)


def hyp2f1_gamma_series(p: Hyp2F1Params, z, terms: int = 120):
    """Gamma-function form of the series, truncated after ``terms`` terms.

    Used as an alternative spelling of the Pochhammer series; needs ``a`` and
    ``b`` away from the poles of Gamma and ``terms`` small enough that
    ``j!`` stays finite.
    """
    if _nonpos_int(p.a) is not None or _nonpos_int(p.b) is not None:
        raise ParameterError("Gamma form needs a, b not in {0, -1, -2, ...}")
    z, scalar = np.asarray(z, dtype=complex), np.ndim(z) == 0
    pref = gamma(p.c) / (gamma(p.a) * gamma(p.b))
    total = np.zeros_like(z)
    for j in range(terms):
        # paired ratios stay finite where the individual Gammas would overflow
        coef = (gamma(p.a + j) / gamma(p.c + j)) * (gamma(p.b + j) / math.factorial(j))
        total = total + coef * z ** j
    return _finish(pref * total, scalar)


def hyp2f1(p: Hyp2F1Params, z, tol: float = 1e-14):
    """2F1(a, b; c; z) on the closed unit disk, choosing the route per point."""
    z, scalar = _prep(z)
    if p.a == 0 or p.b == 0:
        return _finish(np.ones_like(z), scalar)
    if p.terminating_degree is not None:
        return hyp2f1_terminating(p, z)
    flat = z.ravel()
    mod = np.abs(flat)
    out = np.empty_like(flat)
    small = mod <= SERIES_RADIUS
    if small.any():
        out[small] = hyp2f1_series(p, flat[small], tol=tol)
    if (~small).any():
        if np.any(mod >= 1.0 - _DISK_SLACK) and p.c - p.a - p.b <= 0:
            raise NonConvergentAtBoundary(
                f"c - a - b = {p.c - p.a - p.b} <= 0 on the unit circle")
        out[~small] = hyp2f1_euler(p, flat[~small], tol=max(tol, 1e-13))
    return _finish(out.reshape(z.shape), scalar)


def hyp2f1_derivative(p: Hyp2F1Params, z, tol: float = 1e-14):
    """d/dz 2F1 = (ab/c) 2F1(a+1, b+1; c+1; z)."""
    z, scalar = _prep(z)
    if p.a == 0 or p.b == 0:
        return _finish(np.zeros_like(z), scalar)
    val = (p.a * p.b / p.c) * hyp2f1(p.shifted(), z, tol=tol)
    return _finish(np.asarray(val), scalar)
