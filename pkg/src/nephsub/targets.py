"""The ten Caratheodory target functions and their boundary curves.

All functions take a complex scalar or array ``z`` with ``|z| <= 1`` and
return values of the same shape. Square roots and logarithms are principal;
see :mod:`nephsub.numerics.branches` for the convention on the cuts.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ParameterError
from .numerics.auxiliary import C_RL, SQRT2
from .numerics.branches import csqrt

DISK_SLACK = 1e-12
#: the fixed constant of the rational target
K_RATIONAL = SQRT2 + 1.0


class Target(enum.Enum):
    NEPHROID = "nephroid"
    LEMNISCATE = "lemniscate"
    SHIFTED_LEMNISCATE = "shifted-lemniscate"
    SIGMOID = "sigmoid"
    EXPONENTIAL = "exp"
    CRESCENT = "crescent"
    CARDIOID = "cardioid"
    RATIONAL = "rational"
    SINE = "sine"
    JANOWSKI = "janowski"


@dataclass(frozen=True)
class TargetFunction:
    kind: Target
    A: float | None = None
    B: float | None = None

    def __post_init__(self):
        if self.kind is Target.JANOWSKI:
            if self.A is None or self.B is None:
                raise ParameterError("Janowski target needs A and B")
            check_janowski(self.A, self.B)
        elif self.A is not None or self.B is not None:
            raise ParameterError(f"{self.kind.value} takes no parameters")

    def __call__(self, z):
        return eval_target(self, z)


def check_janowski(A: float, B: float) -> None:
    if not (-1.0 < B < A <= 1.0) or B == 0.0:
        raise ParameterError(f"Janowski needs -1 < B < A <= 1 and B != 0, got A={A}, B={B}")


# Branch-point angles on the unit circle; sampling code steps around them.
BRANCH_ANGLES = {
    Target.LEMNISCATE: (math.pi,),
    Target.SHIFTED_LEMNISCATE: (0.0,),
    Target.CRESCENT: (-math.pi / 2, math.pi / 2),
}


def _check_disk(z):
    z = np.asarray(z, dtype=complex)
    if np.any(np.abs(z) > 1.0 + DISK_SLACK):
        raise DomainError("target functions are evaluated on the closed unit disk only")
    return z


def _raw(kind: Target, z, A=None, B=None):
    if kind is Target.NEPHROID:
        return 1.0 + z - z ** 3 / 3.0
    if kind is Target.LEMNISCATE:
        return csqrt(1.0 + z)
    if kind is Target.SHIFTED_LEMNISCATE:
        return SQRT2 - (SQRT2 - 1.0) * csqrt((1.0 - z) / (1.0 + C_RL * z))
    if kind is Target.SIGMOID:
        return 2.0 / (1.0 + np.exp(-z))
    if kind is Target.EXPONENTIAL:
        return np.exp(z)
    if kind is Target.CRESCENT:
        return z + csqrt(1.0 + z * z)
    if kind is Target.CARDIOID:
        return 1.0 + 4.0 * z / 3.0 + 2.0 * z * z / 3.0
    if kind is Target.RATIONAL:
        k = K_RATIONAL
        return 1.0 + (z / k) * ((k + z) / (k - z))
    if kind is Target.SINE:
        return 1.0 + np.sin(z)
    if kind is Target.JANOWSKI:
        return (1.0 + A * z) / (1.0 + B * z)
    raise ParameterError(f"unknown target {kind!r}")  # pragma: no cover


def eval_target(f: TargetFunction, z):
    scalar = np.ndim(z) == 0
    z = _check_disk(z)
    val = _raw(f.kind, z, f.A, f.B)
    return complex(val) if scalar else val


def boundary_point(f: TargetFunction, t):
    """Image of ``e^{it}``; the nephroid uses its trigonometric form."""
    scalar = np.ndim(t) == 0
    t = np.asarray(t, dtype=float)
    if f.kind is Target.NEPHROID:
        val = (1.0 + np.cos(t) - np.cos(3 * t) / 3.0) + 1j * (np.sin(t) - np.sin(3 * t) / 3.0)
    else:
        val = _raw(f.kind, np.exp(1j * t), f.A, f.B)
    return complex(val) if scalar else val


def target_real_extremes(f: TargetFunction) -> tuple[float, float]:
    """(P(-1), P(1)); every target is finite and continuous at both points."""
    lo = eval_target(f, -1.0)
    hi = eval_target(f, 1.0)
    return lo.real, hi.real


def min_boundary_modulus(f: TargetFunction) -> float:
    """min over |z| = 1 of |P(z) - 1|, closed form where one is known.

    For the rational target the minimum is ``(k-1)/(k(k+1)) = 3 - 2 sqrt 2``
    at ``z = -1``; for Janowski it is ``(A-B)/(1+|B|)``.
    """
    if f.kind is Target.RATIONAL:
        k = K_RATIONAL
        return (k - 1.0) / (k * (k + 1.0))
    if f.kind is Target.JANOWSKI:
        return (f.A - f.B) / (1.0 + abs(f.B))
    t = np.linspace(-math.pi, math.pi, 65537)
    return float(np.min(np.abs(boundary_point(f, t) - 1.0)))
