"""Closed-form dominants of ``1 + beta z p'/p^j < P`` and ``p + beta z p' < P``.

Every family of the first kind shares one potential

    G(z) = int_0^z (P(t) - 1) / t dt,   G(0) = 0,

and the three dominants are ``1 + G/beta`` (j = 0), ``exp(G/beta)`` (j = 1)
and ``1 / (1 - G/beta)`` (j = 2). The two linear families are
hypergeometric: ``2F1(-1/2, 1/beta; 1/beta + 1; -z)`` for ``P = sqrt(1+z)``
and ``1 + z/(1+beta)`` for ``P = 1 + z``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ParameterError, PoleError
from .numerics.auxiliary import C_RL, ein_sum, g0, psi_rl, sigmoid_ell, sine_sum
from .numerics.branches import clog, csqrt
from .numerics.hypergeometric import Hyp2F1Params, hyp2f1
from .targets import DISK_SLACK, K_RATIONAL, Target, TargetFunction

LOG2 = math.log(2.0)


class Family(enum.Enum):
    LEMB = "lemb"
    SHIFTED_LEMB = "shifted-lemb"
    SIGMOID = "sigmoid"
    EXPONENTIAL = "exp"
    CRESCENT = "crescent"
    CARDIOID = "cardioid"
    RATIONAL = "rational"
    SINE = "sine"
    JANOWSKI = "janowski"
    HG_LEMNISCATE = "hg-lem"
    HG_LINEAR = "hg-linear"

    @property
    def is_linear(self) -> bool:
        return self in (Family.HG_LEMNISCATE, Family.HG_LINEAR)


class Case(enum.Enum):
    J0 = "j0"
    J1 = "j1"
    J2 = "j2"
    LINEAR = "linear"

    @property
    def power(self) -> int:
        return {Case.J0: 0, Case.J1: 1, Case.J2: 2}[self]


_TARGET_OF = {
    Family.LEMB: Target.LEMNISCATE,
    Family.SHIFTED_LEMB: Target.SHIFTED_LEMNISCATE,
    Family.SIGMOID: Target.SIGMOID,
    Family.EXPONENTIAL: Target.EXPONENTIAL,
    Family.CRESCENT: Target.CRESCENT,
    Family.CARDIOID: Target.CARDIOID,
    Family.RATIONAL: Target.RATIONAL,
    Family.SINE: Target.SINE,
    Family.JANOWSKI: Target.JANOWSKI,
    Family.HG_LEMNISCATE: Target.LEMNISCATE,
}

#: the eight families with closed-form thresholds, in table order
CLOSED_FORM_FAMILIES = (
    Family.LEMB, Family.SHIFTED_LEMB, Family.SIGMOID, Family.EXPONENTIAL,
    Family.CRESCENT, Family.CARDIOID, Family.RATIONAL, Family.SINE,
)
POTENTIAL_CASES = (Case.J0, Case.J1, Case.J2)


@dataclass(frozen=True)
class DominantSpec:
    family: Family
    case: Case
    beta: float
    A: float | None = None
    B: float | None = None

    def __post_init__(self):
        if not self.beta > 0:
            raise ParameterError(f"beta must be positive, got {self.beta}")
        if self.family.is_linear != (self.case is Case.LINEAR):
            raise ParameterError(f"{self.family.value} does not admit case {self.case.value}")
        # validates Janowski parameters (and rejects stray ones)
        target_of(self.family, self.A, self.B)

    def with_beta(self, beta: float) -> "DominantSpec":
        return DominantSpec(self.family, self.case, beta, self.A, self.B)

    @property
    def target(self):
        """The right-hand side P of the defining equation, as a callable."""
        if self.family is Family.HG_LINEAR:
            return lambda z: 1.0 + np.asarray(z, dtype=complex)
        return target_of(self.family, self.A, self.B)


def target_of(family: Family, A=None, B=None) -> TargetFunction | None:
    if family is Family.HG_LINEAR:
        if A is not None or B is not None:
            raise ParameterError("hg-linear takes no parameters")
        return None
    if family is Family.JANOWSKI:
        return TargetFunction(Target.JANOWSKI, A, B)
    return TargetFunction(_TARGET_OF[family], A, B)


def _check(z):
    z = np.asarray(z, dtype=complex)
    if np.any(np.abs(z) > 1.0 + DISK_SLACK):
        raise DomainError("dominants are evaluated on the closed unit disk only")
    return z


def _log1p_over(B: float, z):
    # log(1 + B z)/B, with the Maclaurin form for tiny B
    if abs(B) < 1e-6:
        return z - B * z * z / 2.0 + B * B * z ** 3 / 3.0
    return clog(1.0 + B * z) / B


def _potential(family: Family, z, A=None, B=None):
    if family is Family.LEMB:
        s = csqrt(1.0 + z)
        return 2.0 * (s + LOG2 - clog(1.0 + s) - 1.0)
    if family is Family.SHIFTED_LEMB:
        return C_RL * clog(psi_rl(z) / 2.0) + g0(z)
    if family is Family.SIGMOID:
        return sigmoid_ell(z)
    if family is Family.EXPONENTIAL:
        return ein_sum(z)
    if family is Family.CRESCENT:
        s = csqrt(1.0 + z * z)
        return z + s - 1.0 - clog(1.0 + s) + LOG2
    if family is Family.CARDIOID:
        return z * (4.0 + z) / 3.0
    if family is Family.RATIONAL:
        k = K_RATIONAL
        return 2.0 * clog(k / (k - z)) - z / k
    if family is Family.SINE:
        return sine_sum(z)
    if family is Family.JANOWSKI:
        return (A - B) * _log1p_over(B, z)
    raise ParameterError(f"{family.value} has no potential")


def potential(family: Family, z, A=None, B=None):
    """G(z) = int_0^z (P(t) - 1)/t dt for the family's target P."""
    scalar = np.ndim(z) == 0
    z = _check(z)
    target_of(family, A, B)
    val = np.asarray(_potential(family, z, A, B), dtype=complex)
    # every closed form vanishes at 0 analytically; pin it against rounding
    val = np.where(z == 0, 0j, val)
    return complex(val) if scalar else val


def _hg_params(beta: float, a: float) -> Hyp2F1Params:
    b = 1.0 / beta
    return Hyp2F1Params(a, b, b + 1.0)


def eval_dominant(spec: DominantSpec, z, pole_tol: float = 1e-12):
    scalar = np.ndim(z) == 0
    z = _check(z)
    beta = spec.beta
    if spec.family is Family.HG_LEMNISCATE:
        val = hyp2f1(_hg_params(beta, -0.5), -z)
    elif spec.family is Family.HG_LINEAR:
        val = 1.0 + z / (1.0 + beta)
    else:
        x = potential(spec.family, z, spec.A, spec.B) / beta
        if spec.case is Case.J0:
            val = 1.0 + x
        elif spec.case is Case.J1:
            val = np.exp(x)
        else:
            den = 1.0 - x
            if np.any(np.abs(den) <= pole_tol):
                raise PoleError("1 - G(z)/beta vanishes")
            val = 1.0 / den
    val = np.asarray(val, dtype=complex)
    return complex(val) if scalar else val


def derivative_fd(f, z, h: float = 1e-3):
    """Fourth-order central difference along the real direction."""
    z = np.asarray(z, dtype=complex)
    return (-f(z + 2 * h) + 8 * f(z + h) - 8 * f(z - h) + f(z - 2 * h)) / (12.0 * h)


def ode_residual(spec: DominantSpec, z, h: float = 1e-3):
    """|LHS - P(z)| of the defining differential equation at ``z``.

    LHS is ``1 + beta z q'/q^j`` for the potential families and
    ``q + beta z q'`` for the linear ones; ``q'`` by finite differences.
    """
    scalar = np.ndim(z) == 0
    z = np.asarray(z, dtype=complex)
    if np.any(np.abs(z) > 1.0 - 2 * h):
        raise DomainError("ode_residual needs |z| <= 1 - 2h")
    q = lambda w: eval_dominant(spec, w)  # noqa: E731
    qz = q(z)
    dq = derivative_fd(q, z, h)
    if spec.case is Case.LINEAR:
        lhs = qz + spec.beta * z * dq
    else:
        lhs = 1.0 + spec.beta * z * dq / qz ** spec.case.power
    res = np.abs(lhs - spec.target(z))
    return float(res) if scalar else res
