"""Sharp beta thresholds for every subordination implication.

For a potential family the dominant ``q`` maps ``[-1, 1]`` monotonically
onto ``[q(-1), q(1)]``, and containment in the nephroid needs
``1/3 <= q(-1)`` and ``q(1) <= 5/3``. Each inequality gives one lower bound
on beta (``beta1`` from the left cusp, ``beta2`` from the right), and the
sharp threshold is their maximum. The table below evaluates the closed
forms family by family; :func:`endpoint_components` derives the
same pair from ``G(-1)``, ``G(1)`` and is used as a cross-check.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .dominants import (
    CLOSED_FORM_FAMILIES,
    POTENTIAL_CASES,
    Case,
    Family,
    potential,
    target_of,
)
from .errors import ConvergenceError, NoBracket, ParameterError
from .numerics.auxiliary import C_RL, ein_sum, g0, psi_rl, sigmoid_ell, sine_sum
from .numerics.hypergeometric import Hyp2F1Params, hyp2f1
from .numerics.roots import find_root
from .targets import check_janowski, min_boundary_modulus

SQRT2 = math.sqrt(2.0)
LOG2, LOG3, LOG53 = math.log(2.0), math.log(3.0), math.log(5.0 / 3.0)
# sqrt2 + log2 - 1 - log(1 + sqrt2): half the lemniscate potential at z = 1
_LEM = SQRT2 + LOG2 - 1.0 - math.log(1.0 + SQRT2)
# crescent potential at z = 1
_CRES = SQRT2 - math.log(1.0 + SQRT2) + LOG2
# half the rational potential at z = 1
_RAT = math.log((1.0 + SQRT2) / SQRT2) - 1.0 / (2.0 * (1.0 + SQRT2))
_TIE_RTOL = 1e-12


class SharpEndpoint(enum.Enum):
    MINUS_ONE = "q(-1) = 1/3"
    PLUS_ONE = "q(1) = 5/3"
    BOTH = "q(-1) = 1/3 and q(1) = 5/3"

    @property
    def angles(self) -> tuple[float, ...]:
        """Boundary angles ``t`` (z = e^{it}) where the dominant touches a cusp."""
        return {SharpEndpoint.MINUS_ONE: (math.pi,), SharpEndpoint.PLUS_ONE: (0.0,),
                SharpEndpoint.BOTH: (math.pi, 0.0)}[self]


@dataclass(frozen=True)
class BetaBound:
    family: Family
    case: Case
    value: float
    formula: str
    sharp_endpoint: SharpEndpoint
    beta1: float | None = None
    beta2: float | None = None
    A: float | None = None
    B: float | None = None

    @property
    def components(self) -> tuple[float | None, float | None]:
        return self.beta1, self.beta2


@dataclass(frozen=True)
class TauDelta:
    beta: float
    tau: float
    delta: float


def _real(x) -> float:
    return float(complex(x).real)


def _srl(x: float) -> float:
    # 2(sqrt2 - 1) log(Psi_RL(x)/2) + g0(x)
    return C_RL * math.log(_real(psi_rl(x)) / 2.0) + _real(g0(x))


def _srl_literal_minus() -> float:
    psi = math.sqrt(1.0 - C_RL) + SQRT2
    return C_RL * math.log(psi / 2.0) + _real(g0(-1.0))


def _srl_literal_plus() -> float:
    return C_RL * math.log(math.sqrt(C_RL + 1.0) / 2.0) + _real(g0(1.0))


def _series_pair(s: Callable[[float], complex]):
    # families whose potential at +-1 is a special value (series or integral)
    return {
        Case.J0: (lambda: -1.5 * _real(s(-1.0)), lambda: 1.5 * _real(s(1.0))),
        Case.J1: (lambda: -_real(s(-1.0)) / LOG3, lambda: _real(s(1.0)) / LOG53),
        Case.J2: (lambda: -_real(s(-1.0)) / 2.0, lambda: 2.5 * _real(s(1.0))),
    }


_Pair = tuple[Callable[[], float], Callable[[], float]]

_CLOSED: dict[Family, dict[Case, _Pair]] = {
    Family.LEMB: {
        Case.J0: (lambda: 3 * (1 - LOG2), lambda: 3 * _LEM),
        Case.J1: (lambda: 2 * (1 - LOG2) / LOG3, lambda: 2 * _LEM / LOG53),
        Case.J2: (lambda: 1 - LOG2, lambda: 5 * _LEM),
    },
    Family.SHIFTED_LEMB: {
        Case.J0: (lambda: -1.5 * _srl_literal_minus(), lambda: 1.5 * _srl_literal_plus()),
        Case.J1: (lambda: -_srl(-1.0) / LOG3, lambda: _srl_literal_plus() / LOG53),
        Case.J2: (lambda: -0.5 * _srl(-1.0), lambda: 2.5 * _srl_literal_plus()),
    },
    Family.SIGMOID: _series_pair(sigmoid_ell),
    Family.EXPONENTIAL: _series_pair(ein_sum),
    Family.CRESCENT: {
        Case.J0: (lambda: 1.5 * (2 - SQRT2 + math.log(1 + SQRT2) - LOG2), lambda: 1.5 * _CRES),
        Case.J1: (lambda: -(SQRT2 - 2 + LOG2 - math.log(1 + SQRT2)) / LOG3, lambda: _CRES / LOG53),
        Case.J2: (lambda: -(SQRT2 - 2 - math.log(1 + SQRT2) + LOG2) / 2, lambda: 2.5 * _CRES),
    },
    Family.CARDIOID: {
        Case.J0: (lambda: 1.5, lambda: 2.5),
        Case.J1: (lambda: 1 / LOG3, lambda: 5 / (3 * LOG53)),
        Case.J2: (lambda: 0.5, lambda: 25 / 6),
    },
    Family.RATIONAL: {
        Case.J0: (lambda: 1.5 * (1 - SQRT2 + LOG2), lambda: 3 * math.log(1 + 1 / SQRT2) - 1.5 * (SQRT2 - 1)),
        Case.J1: (lambda: (1 + LOG2 - SQRT2) / LOG3, lambda: 2 * _RAT / LOG53),
        Case.J2: (lambda: (1 + LOG2 - SQRT2) / 2, lambda: 5 * _RAT),
    },
    Family.SINE: _series_pair(sine_sum),
}

_FORMULA: dict[tuple[Family, Case], str] = {
    (Family.LEMB, Case.J0): "3(1 - log 2)",
    (Family.LEMB, Case.J1): "2(sqrt2 + log2 - 1 - log(1+sqrt2)) / log(5/3)",
    (Family.LEMB, Case.J2): "5(sqrt2 + log2 - 1 - log(1+sqrt2))",
    (Family.SHIFTED_LEMB, Case.J0): "-3(2(sqrt2-1) log((sqrt(1-2(sqrt2-1)) + sqrt2)/2) + g0(-1))/2",
    (Family.SHIFTED_LEMB, Case.J1): "(2(sqrt2-1) log(sqrt(2(sqrt2-1)+1)/2) + g0(1)) / log(5/3)",
    (Family.SHIFTED_LEMB, Case.J2): "5(2(sqrt2-1) log(sqrt(2(sqrt2-1)+1)/2) + g0(1))/2",
    (Family.SIGMOID, Case.J0): "3 l(1)/2",
    (Family.SIGMOID, Case.J1): "l(1) / log(5/3)",
    (Family.SIGMOID, Case.J2): "5 l(1)/2",
    (Family.EXPONENTIAL, Case.J0): "sum_{n>=1} 3/(2n n!)",
    (Family.EXPONENTIAL, Case.J1): "sum_{n>=1} 1/(n n!) / log(5/3)",
    (Family.EXPONENTIAL, Case.J2): "sum_{n>=1} 5/(2n n!)",
    (Family.CRESCENT, Case.J0): "3(sqrt2 - log(1+sqrt2) + log2)/2",
    (Family.CRESCENT, Case.J1): "(sqrt2 + log2 - log(1+sqrt2)) / log(5/3)",
    (Family.CRESCENT, Case.J2): "5(sqrt2 - log(1+sqrt2) + log2)/2",
    (Family.CARDIOID, Case.J0): "5/2",
    (Family.CARDIOID, Case.J1): "5 / (3 log(5/3))",
    (Family.CARDIOID, Case.J2): "25/6",
    (Family.RATIONAL, Case.J0): "3 log(1 + 1/sqrt2) - 3(sqrt2 - 1)/2",
    (Family.RATIONAL, Case.J1): "2(log((1+sqrt2)/sqrt2) - 1/(2(1+sqrt2))) / log(5/3)",
    (Family.RATIONAL, Case.J2): "5(log((1+sqrt2)/sqrt2) - 1/(2(1+sqrt2)))",
    (Family.SINE, Case.J0): "(3/2) sum_{n>=0} (-1)^n/((2n+1)!(2n+1))",
    (Family.SINE, Case.J1): "sum_{n>=0} (-1)^n/((2n+1)!(2n+1)) / log(5/3)",
    (Family.SINE, Case.J2): "(5/2) sum_{n>=0} (-1)^n/((2n+1)!(2n+1))",
}

_JANOWSKI_FORMULA = {
    Case.J0: "max{(A-B)/(2B) log(1-B)^-3, (A-B)/(2B) log(1+B)^3}",
    Case.J1: "max{(A-B)/(B log3) log(1-B)^-1, (A-B)/(B log(5/3)) log(1+B)}",
    Case.J2: "max{(A-B)/(2B) log(1-B)^-1, (A-B)/(2B) log(1+B)^5}",
}


def _endpoint(beta1: float, beta2: float) -> SharpEndpoint:
    if abs(beta1 - beta2) <= _TIE_RTOL * max(abs(beta1), abs(beta2)):
        return SharpEndpoint.BOTH
    return SharpEndpoint.MINUS_ONE if beta1 > beta2 else SharpEndpoint.PLUS_ONE


def endpoint_components(g_minus: float, g_plus: float, case: Case) -> tuple[float, float]:
    """(beta1, beta2) from the potential values G(-1) < 0 < G(1).

    j=0: 1 + G/beta;  j=1: exp(G/beta);  j=2: 1/(1 - G/beta), each pinned to
    1/3 at z=-1 and to 5/3 at z=1.
    """
    if case is Case.J0:
        return -1.5 * g_minus, 1.5 * g_plus
    if case is Case.J1:
        return -g_minus / LOG3, g_plus / LOG53
    if case is Case.J2:
        return -0.5 * g_minus, 2.5 * g_plus
    raise ParameterError(f"no endpoint formula for case {case.value}")


def potential_components(family: Family, case: Case, A=None, B=None) -> tuple[float, float]:
    return endpoint_components(_real(potential(family, -1.0, A, B)),
                               _real(potential(family, 1.0, A, B)), case)


def sharp_beta(family: Family, case: Case) -> BetaBound:
    if family not in _CLOSED:
        raise ParameterError(f"{family.value} has no closed-form threshold table")
    if case not in POTENTIAL_CASES:
        raise ParameterError(f"{family.value} does not admit case {case.value}")
    b1f, b2f = _CLOSED[family][case]
    b1, b2 = b1f(), b2f()
    return BetaBound(family, case, max(b1, b2), _FORMULA[family, case], _endpoint(b1, b2), b1, b2)


def janowski_beta(A: float, B: float, case: Case) -> BetaBound:
    check_janowski(A, B)
    d = A - B
    # log1p(x)/B keeps the ratio finite for tiny |B|
    lm, lp = -math.log1p(-B) / B, math.log1p(B) / B
    if case is Case.J0:
        b1, b2 = 1.5 * d * lm, 1.5 * d * lp
    elif case is Case.J1:
        b1, b2 = d * lm / LOG3, d * lp / LOG53
    elif case is Case.J2:
        b1, b2 = 0.5 * d * lm, 2.5 * d * lp
    else:
        raise ParameterError(f"Janowski does not admit case {case.value}")
    return BetaBound(Family.JANOWSKI, case, max(b1, b2), _JANOWSKI_FORMULA[case],
                     _endpoint(b1, b2), b1, b2, A, B)


def _hg_lem(beta: float) -> Hyp2F1Params:
    b = 1.0 / beta
    return Hyp2F1Params(-0.5, b, b + 1.0)


def tau(beta: float) -> float:
    """F(-1/2, 1/beta; 1/beta+1; 1) - 1/3, i.e. q(-1) - 1/3 for the hg-lem dominant."""
    return _real(hyp2f1(_hg_lem(beta), 1.0)) - 1.0 / 3.0


def delta(beta: float) -> float:
    """5/3 - F(-1/2, 1/beta; 1/beta+1; -1), i.e. 5/3 - q(1)."""
    return 5.0 / 3.0 - _real(hyp2f1(_hg_lem(beta), -1.0))


SCAN = tuple(round(0.1 * i, 10) for i in range(1, 101))


def beta_L(tol: float = 1e-12) -> float:
    """Unique root of tau on (0, inf), bracketed by scanning beta = 0.1 ... 10."""
    if not tol > 0:
        raise ParameterError("tol must be positive")
    vals = [tau(b) for b in SCAN]
    if any(delta(b) <= 0 for b in SCAN[::10]):
        raise ConvergenceError("delta(beta) <= 0 on the scan; evaluator is inconsistent")
    for (b_lo, t_lo), (b_hi, t_hi) in zip(zip(SCAN, vals), zip(SCAN[1:], vals[1:])):
        if t_lo <= 0.0 < t_hi:
            return find_root(tau, b_lo, b_hi, tol=tol)
    if vals[0] > 0:
        # root below the first scan point; tau -> -1/3 as beta -> 0
        lo = SCAN[0]
        while tau(lo) > 0:
            lo /= 2
            if lo < 1e-6:
                break
        else:
            return find_root(tau, lo, SCAN[0], tol=tol)
    raise NoBracket("tau has no sign change on the beta scan")


def hg_lemniscate_bound(tol: float = 1e-12) -> BetaBound:
    b = beta_L(tol)
    return BetaBound(Family.HG_LEMNISCATE, Case.LINEAR, b, "root of F(-1/2, 1/b; 1/b+1; 1) = 1/3",
                     SharpEndpoint.MINUS_ONE, b, None)


def hg_linear_beta() -> float:
    return 0.5


def hg_linear_bound() -> BetaBound:
    # q(-1) = 1 - 1/(1+beta) >= 1/3 and q(1) = 1 + 1/(1+beta) <= 5/3 both give 1/2
    return BetaBound(Family.HG_LINEAR, Case.LINEAR, hg_linear_beta(), "1/2",
                     SharpEndpoint.BOTH, 0.5, 0.5)


def bound_for(family: Family, case: Case, A=None, B=None) -> BetaBound:
    """Dispatch to the threshold routine matching ``family``."""
    if family is Family.JANOWSKI:
        return janowski_beta(A, B, case)
    if family is Family.HG_LEMNISCATE:
        return hg_lemniscate_bound()
    if family is Family.HG_LINEAR:
        return hg_linear_bound()
    return sharp_beta(family, case)


def closed_form_bounds() -> list[BetaBound]:
    return [sharp_beta(f, c) for f in CLOSED_FORM_FAMILIES for c in POTENTIAL_CASES]


def corollary_disk_threshold(family: Family, case: Case, A=None, B=None) -> float:
    """Radius r such that |G-expression| <= r implies membership.

    Equals min_{|z|=1} |P(z) - 1| divided by the sharp beta.
    """
    if family is Family.RATIONAL:
        bound = sharp_beta(family, case)
    elif family is Family.JANOWSKI:
        bound = janowski_beta(A, B, case)
    else:
        raise ParameterError("disk radii are defined for the rational and Janowski families only")
    return min_boundary_modulus(target_of(family, A, B)) / bound.value


def kustner_lower_bound(a: float, b: float, c: float) -> float:
    """Lower bound 1 - ab/(b+c) on the order of starlikeness of z 2F1(a, b; c; z)."""
    if not 0 < a <= b <= c:
        raise ParameterError(f"need 0 < a <= b <= c, got {(a, b, c)}")
    return 1.0 - a * b / (b + c)


def tau_delta_table(betas) -> list[TauDelta]:
    return [TauDelta(float(b), tau(b), delta(b)) for b in np.asarray(betas, dtype=float)]
