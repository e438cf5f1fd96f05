"""Real Gamma function via the Lanczos approximation (g=7, 9 terms)."""

from __future__ import annotations

import math

from ..errors import PoleError

_G = 7.0
_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_SQRT_2PI = math.sqrt(2.0 * math.pi)


def gamma(x: float) -> float:
    """Gamma(x) for real ``x`` that is not a non-positive integer.

    Uses the reflection formula for ``x < 0.5``.
    """
    x = float(x)
    if x <= 0.0 and x == math.floor(x):
        raise PoleError(f"Gamma has a pole at {x!r}")
    if x < 0.5:
        # sin(pi x) = (-1)^n sin(pi (x - n)) with n the nearest integer keeps
        # precision near the poles and for large |x|
        n = round(x)
        s = math.sin(math.pi * (x - n)) * (-1.0 if n % 2 else 1.0)
        return math.pi / (s * gamma(1.0 - x))
    x -= 1.0
    acc = _COEF[0]
    for i in range(1, len(_COEF)):
        acc += _COEF[i] / (x + i)
    t = x + _G + 0.5
    # split the power to delay overflow for x near 171
    half = t ** (0.5 * (x + 0.5))
    return _SQRT_2PI * half * (half * math.exp(-t)) * acc


def pochhammer(x: float, n: int) -> float:
    """Rising factorial (x)_n."""
    out = 1.0
    for j in range(n):
        out *= x + j
    return out
