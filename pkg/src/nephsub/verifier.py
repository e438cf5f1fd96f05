"""Boundary-sampling certificate for q(D) inside the nephroid region.

The dominant is sampled at ``n`` equally spaced boundary angles and each
image point is scored with the implicit nephroid function, whose sign is
negative exactly on the open region. The largest score decides the verdict.
A local bounded search around the worst sample sharpens the maximum, and a
coarse interior polar grid guards the maximum-principle step.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize_scalar

from .bounds import SCAN, TauDelta, delta, tau
from .dominants import DominantSpec, eval_dominant, target_of
from .errors import BranchError, ParameterError, PoleError, SamplingError
from .nephroid import implicit_at
from .numerics.hypergeometric import Hyp2F1Params, hyp2f1, hyp2f1_derivative
from .targets import BRANCH_ANGLES

BRANCH_GAP = 1e-6
MAX_SKIPPED = 0.01
INTERIOR_GRID = 32


class Verdict(enum.Enum):
    CONTAINED_STRICT = "ContainedStrict"
    CONTAINED_TANGENT = "ContainedTangent"
    VIOLATED = "Violated"

    @property
    def contained(self) -> bool:
        return self is not Verdict.VIOLATED


@dataclass(frozen=True)
class ContainmentReport:
    spec: DominantSpec
    samples: int
    worst_value: float
    worst_angle: float
    verdict: Verdict
    tangency_points: tuple[float, ...] = ()
    skipped: int = 0
    interior_worst: float = -math.inf
    tol: float = 1e-6
    slack: float = 1e-12

    def render(self) -> str:
        lines = [
            f"family        {self.spec.family.value}",
            f"case          {self.spec.case.value}",
            f"beta          {self.spec.beta:.15g}",
            f"samples       {self.samples}",
            f"skipped       {self.skipped}",
            f"worst_value   {self.worst_value:.15g}",
            f"worst_angle   {self.worst_angle:.15g}",
            f"interior      {self.interior_worst:.15g}",
            f"tangency      {' '.join(f'{t:.15g}' for t in self.tangency_points) or '-'}",
            f"verdict       {self.verdict.value}",
        ]
        return "\n".join(lines)


@dataclass(frozen=True)
class StarlikenessEstimate:
    inf_estimate: float
    grid_size: int
    radius: float
    argmin: complex = field(default=0j)


def _angles(n: int) -> np.ndarray:
    # t_k = -pi + 2 pi (k+1)/n covers (-pi, pi] and hits 0 and pi for even n
    return -math.pi + 2.0 * math.pi * np.arange(1, n + 1) / n


def _branch_angles(spec: DominantSpec) -> tuple[float, ...]:
    tf = target_of(spec.family, spec.A, spec.B)
    return BRANCH_ANGLES.get(tf.kind, ()) if tf is not None else ()


def _angle_gap(t, s) -> np.ndarray:
    d = np.abs(np.asarray(t) - s) % (2 * math.pi)
    return np.minimum(d, 2 * math.pi - d)


def _score(spec: DominantSpec, t) -> np.ndarray:
    q = eval_dominant(spec, np.exp(1j * np.asarray(t, dtype=float)))
    return implicit_at(q)


def _score_masked(spec: DominantSpec, t: np.ndarray) -> np.ndarray:
    """Implicit values at angles ``t``; NaN where the dominant cannot be evaluated."""
    try:
        with np.errstate(all="ignore"):
            vals = np.asarray(_score(spec, t), dtype=float)
    except (BranchError, PoleError):
        vals = np.empty(t.shape)
        for i, ti in enumerate(t):
            try:
                vals[i] = float(_score(spec, ti))
            except (BranchError, PoleError):
                vals[i] = np.nan
    return np.where(np.isfinite(vals), vals, np.nan)


def _refine(spec: DominantSpec, t: np.ndarray, vals: np.ndarray, k: int, excluded) -> tuple[float, float]:
    n = len(t)
    h = 2 * math.pi / n
    lo, hi = t[k] - h, t[k] + h
    for s in excluded:
        for c in (s - 2 * math.pi, s, s + 2 * math.pi):
            if lo < c < t[k]:
                lo = c + BRANCH_GAP
            if t[k] < c < hi:
                hi = c - BRANCH_GAP
    best_t, best_v = float(t[k]), float(vals[k])
    if hi - lo <= 0:
        return best_t, best_v
    try:
        res = minimize_scalar(lambda x: -float(_score(spec, x)), bounds=(lo, hi),
                              method="bounded", options={"xatol": 1e-12})
    except (BranchError, PoleError):
        return best_t, best_v
    if res.success and np.isfinite(res.fun) and -res.fun > best_v:
        best_t, best_v = float(res.x), float(-res.fun)
    # keep the angle in (-pi, pi]
    best_t = math.remainder(best_t, 2 * math.pi)
    if best_t == -math.pi:
        best_t = math.pi
    return best_t, best_v


def _tangency(t: np.ndarray, vals: np.ndarray, tol: float) -> list[float]:
    """One representative angle per cyclic run of samples with |F| <= tol."""
    hit = np.abs(np.nan_to_num(vals, nan=np.inf)) <= tol
    if not hit.any():
        return []
    if hit.all():
        return [float(t[np.nanargmin(np.abs(vals))])]
    n = len(t)
    start = int(np.argmin(hit))  # a sample outside every run
    order = (start + np.arange(n)) % n
    runs, cur = [], []
    for i in order:
        if hit[i]:
            cur.append(i)
        elif cur:
            runs.append(cur)
            cur = []
    if cur:
        runs.append(cur)
    return [float(t[r[int(np.argmin(np.abs(vals[r])))]]) for r in runs]


def _interior_worst(spec: DominantSpec, m: int = INTERIOR_GRID) -> float:
    r = np.arange(1, m + 1) / (m + 1)
    th = _angles(m)
    z = (r[:, None] * np.exp(1j * th[None, :])).ravel()
    with np.errstate(all="ignore"):
        vals = implicit_at(eval_dominant(spec, z))
    return float(np.nanmax(vals))


def verify_containment(spec: DominantSpec, n: int = 8192, tol: float = 1e-6,
                       slack: float = 1e-12, interior: bool = True) -> ContainmentReport:
    """Classify q(D) against the closed nephroid region.

    ``tol`` is the tangency band on the implicit value. A sample counts as a
    violation only when its implicit value exceeds ``slack``, which sits at
    the roundoff level: at 0.99 beta* the worst excess is of order 1e-6 or
    smaller near the cusps (the implicit function is cubic there).
    """
    if n < 2048:
        raise ParameterError("n must be at least 2048")
    if not (tol > 0 and slack >= 0):
        raise ParameterError("tol must be positive and slack non-negative")
    t = _angles(n)
    excluded = _branch_angles(spec)
    keep = np.ones(n, dtype=bool)
    for s in excluded:
        keep &= _angle_gap(t, s) > BRANCH_GAP
    vals = np.full(n, np.nan)
    vals[keep] = _score_masked(spec, t[keep])
    skipped = int(np.count_nonzero(np.isnan(vals[keep])))
    if skipped > MAX_SKIPPED * n:
        raise SamplingError(f"{skipped} of {n} boundary samples could not be evaluated")
    ts, vs = t[keep], vals[keep]
    k = int(np.nanargmax(vs))
    worst_t, worst_v = _refine(spec, ts, vs, k, excluded)

    tangency = _tangency(ts, vs, tol)
    if abs(worst_v) <= tol and not any(_angle_gap(worst_t, a) < 2 * math.pi / n for a in tangency):
        tangency.append(worst_t)
    tangency.sort()

    inner = _interior_worst(spec) if interior else -math.inf
    if worst_v > slack or inner > slack:
        verdict = Verdict.VIOLATED
    elif tangency:
        verdict = Verdict.CONTAINED_TANGENT
    else:
        verdict = Verdict.CONTAINED_STRICT
    return ContainmentReport(spec, n, worst_v, worst_t, verdict, tuple(tangency),
                             skipped, inner, tol, slack)


def starlikeness_order_estimate(a: float, b: float, c: float, radius: float = 0.99,
                                grid: int | tuple[int, int] = 64) -> StarlikenessEstimate:
    """Minimum of Re(1 + z F'(z)/F(z)), F = 2F1(a, b; c; .), on a polar grid."""
    if not 0 < a <= b <= c:
        raise ParameterError(f"need 0 < a <= b <= c, got {(a, b, c)}")
    if not 0 < radius < 1:
        raise ParameterError("radius must lie in (0, 1)")
    nr, nt = (grid, grid) if np.isscalar(grid) else grid
    p = Hyp2F1Params(a, b, c)
    r = radius * np.arange(1, nr + 1) / nr
    z = (r[:, None] * np.exp(1j * _angles(nt)[None, :])).ravel()
    f = hyp2f1(p, z)
    if np.any(np.abs(f) < 1e-300):
        raise PoleError("F vanishes on the sampling grid")
    vals = np.real(1.0 + z * hyp2f1_derivative(p, z) / f)
    i = int(np.argmin(vals))
    return StarlikenessEstimate(float(vals[i]), nr * nt, radius, complex(z[i]))


def range_of_tau_delta(beta_grid=SCAN) -> list[TauDelta]:
    """Tabulate tau and delta, checking tau in (-1/3, 2/3) and delta in (5/3 - sqrt2, 2/3)."""
    betas = np.asarray(beta_grid, dtype=float)
    if betas.size == 0 or np.any(betas <= 0) or np.any(betas > 50):
        raise ParameterError("beta grid must lie in (0, 50]")
    rows = [TauDelta(float(b), tau(b), delta(b)) for b in betas]
    for row in rows:
        if not (-1 / 3 < row.tau < 2 / 3 and 5 / 3 - math.sqrt(2) < row.delta < 2 / 3):
            raise ArithmeticError(f"tau/delta out of range at beta={row.beta}")
    return rows
