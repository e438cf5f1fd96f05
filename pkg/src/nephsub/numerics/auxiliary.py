"""Auxiliary series and integrals that appear in the closed-form dominants.

``ein_sum``   sum_{n>=1} z^n / (n n!)
``sine_sum``  sum_{n>=0} (-1)^n z^(2n+1) / ((2n+1)! (2n+1))   (the sine integral)
``sigmoid_ell``  int_0^z (e^t - 1) / (t (e^t + 1)) dt
``psi_rl``, ``g0``  the two pieces of the shifted-lemniscate potential
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .branches import catan, csqrt
from .quadrature import segment_integral

SQRT2 = math.sqrt(2.0)
#: 2 (sqrt 2 - 1), the Mobius coefficient shared by phi_RL, Psi_RL and g0
C_RL = 2.0 * (SQRT2 - 1.0)


@dataclass(frozen=True)
class SeriesTail:
    terms_used: int
    tail_bound: float


def _wrap(z):
    arr = np.asarray(z, dtype=complex)
    return arr, arr.ndim == 0


def _out(val, scalar):
    return complex(val) if scalar else val


def ein_sum(z, tol: float = 1e-16, full_output: bool = False):
    z, scalar = _wrap(z)
    r = float(np.max(np.abs(z), initial=0.0))
    total = np.zeros_like(z)
    term = np.ones_like(z)
    n = 0
    while True:
        n += 1
        term = term * z / n
        total = total + term / n
        # |remainder| <= r^(n+1) / ((n+1)(n+1)!) * 1 / (1 - r/(n+2))
        nxt = math.exp((n + 1) * math.log(r) - math.lgamma(n + 2)) / (n + 1) if r > 0 else 0.0
        bound = nxt / (1.0 - r / (n + 2))
        if bound <= tol:
            break
    out = _out(total, scalar)
    return (out, SeriesTail(n, bound)) if full_output else out


def sine_sum(z, tol: float = 1e-16, full_output: bool = False):
    z, scalar = _wrap(z)
    r = float(np.max(np.abs(z), initial=0.0))
    z2 = z * z
    total = np.zeros_like(z)
    power = z.copy()  # (-1)^n z^(2n+1) / (2n+1)!
    n = 0
    while True:
        total = total + power / (2 * n + 1)
        power = -power * z2 / ((2 * n + 2) * (2 * n + 3))
        n += 1
        # geometric bound on the remainder; reduces to the first omitted term
        # (times a factor ~1) for real z
        m = 2 * n + 1
        first = math.exp(m * math.log(r) - math.lgamma(m + 1)) / m if r > 0 else 0.0
        bound = first / (1.0 - r * r / ((m + 1) * (m + 2)))
        if bound <= tol:
            break
    out = _out(total, scalar)
    return (out, SeriesTail(n, bound)) if full_output else out


def _ell_kernel(t):
    t = np.asarray(t, dtype=complex)
    small = np.abs(t) < 1e-6
    safe = np.where(small, 1.0, t)
    return np.where(small, 0.5 - t * t / 24.0, np.tanh(safe / 2.0) / safe)


def sigmoid_ell(z, tol: float = 1e-14):
    """int_0^z tanh(t/2)/t dt; the integrand equals (e^t-1)/(t(e^t+1))."""
    z, scalar = _wrap(z)
    return _out(segment_integral(_ell_kernel, z, tol=tol), scalar)


def psi_rl(z):
    z, scalar = _wrap(z)
    return _out(csqrt(1.0 - z) + csqrt(C_RL * z + 1.0), scalar)


def g0(z):
    z, scalar = _wrap(z)
    sc = math.sqrt(C_RL)
    p = csqrt(C_RL * z + 1.0)
    m = csqrt(1.0 - z)
    w = sc * (p - m) / (C_RL * m + p)
    val = sc * catan(w)
    if scalar and abs(z.imag) == 0.0:
        # real arctangent on the real segment
        val = sc * math.atan(float(w.real))
    return _out(val, scalar)
