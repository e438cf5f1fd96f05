"""The nephroid region phi_Ne(D) as the sublevel set of an implicit sextic.

``implicit_value(u, v) = ((u-1)^2 + v^2 - 4/9)^3 - (4/3) v^2`` is negative
inside, zero on the curve and positive outside. In polar coordinates about
``1 + 0i`` the curve reads ``r^2 = 4/9 + ((4/3) v^2)^(1/3)``; for each ray the
left side is increasing in ``r`` and crosses the right side exactly once, so
the sign test is exact, not just locally valid.

:func:`membership_oracle` is an independent even-odd ray-crossing test
against the parametric boundary; tests use it to certify the sign test.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import OracleInconclusive, ParameterError

CUSP_LEFT = 1.0 / 3.0 + 0j
CUSP_RIGHT = 5.0 / 3.0 + 0j


def implicit_value(u, v):
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    v2 = v * v
    out = ((u - 1.0) ** 2 + v2 - 4.0 / 9.0) ** 3 - (4.0 / 3.0) * v2
    return float(out) if out.ndim == 0 else out


def implicit_at(w):
    """implicit_value applied to complex points."""
    w = np.asarray(w, dtype=complex)
    return implicit_value(w.real, w.imag)


def boundary_uv(t):
    t = np.asarray(t, dtype=float)
    u = 1.0 + np.cos(t) - np.cos(3 * t) / 3.0
    v = np.sin(t) - np.sin(3 * t) / 3.0
    return u, v


class Verdict(enum.Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    EXTERIOR = "exterior"


@dataclass(frozen=True)
class Membership:
    verdict: Verdict
    margin: float


@dataclass(frozen=True)
class NephroidRegion:
    """Cusps plus an immutable table of boundary samples ``(t, u, v)``."""

    resolution: int = 4096
    cusp_left: complex = CUSP_LEFT
    cusp_right: complex = CUSP_RIGHT
    boundary_samples: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.resolution < 4:
            raise ParameterError("resolution must be at least 4")
        t = -math.pi + 2.0 * math.pi * np.arange(1, self.resolution + 1) / self.resolution
        u, v = boundary_uv(t)
        table = np.column_stack([t, u, v])
        table.setflags(write=False)
        object.__setattr__(self, "boundary_samples", table)

    def contains(self, w, tol: float = 1e-12) -> Membership:
        return contains(w, tol)


def contains(w, tol: float = 1e-12) -> Membership:
    if not tol > 0:
        raise ParameterError("tol must be positive")
    w = complex(w)
    m = implicit_value(w.real, w.imag)
    if abs(m) <= tol:
        verdict = Verdict.BOUNDARY
    elif m < 0:
        verdict = Verdict.INTERIOR
    else:
        verdict = Verdict.EXTERIOR
    return Membership(verdict, m)


def _segment_distance(px, py, ax, ay, bx, by):
    dx, dy = bx - ax, by - ay
    L2 = dx * dx + dy * dy
    s = np.clip(((px - ax) * dx + (py - ay) * dy) / np.where(L2 > 0, L2, 1.0), 0.0, 1.0)
    return np.hypot(ax + s * dx - px, ay + s * dy - py)


def membership_oracle(w, n: int = 4096, near: float = 1e-9) -> Membership:
    """Even-odd test with the horizontal ray from ``w`` towards ``+inf``.

    Crossings of the sampled polygon are located exactly in ``t`` by
    bisection on ``v(t) - Im w`` before comparing against ``Re w``. The
    half-open rule (one endpoint strictly above the ray) handles vertices
    on the ray, which happens at the cusps.
    """
    if n < 1024:
        raise ParameterError("oracle needs at least 1024 samples")
    w = complex(w)
    x, y = w.real, w.imag
    t = -math.pi + 2.0 * math.pi * np.arange(n + 1) / n
    u, v = boundary_uv(t)
    dist = _segment_distance(x, y, u[:-1], v[:-1], u[1:], v[1:])
    if np.min(dist) <= near:
        raise OracleInconclusive(f"{w} is within {near:g} of the boundary")
    above = v > y
    idx = np.nonzero(above[:-1] != above[1:])[0]
    count = 0
    for i in idx:
        lo, hi = t[i], t[i + 1]
        flo = v[i] - y
        for _ in range(60):
            mid = 0.5 * (lo + hi)
            fm = math.sin(mid) - math.sin(3 * mid) / 3.0 - y
            if (fm > 0) == (flo > 0):
                lo, flo = mid, fm
            else:
                hi = mid
        uc = 1.0 + math.cos(lo) - math.cos(3 * lo) / 3.0
        if uc > x:
            count += 1
    verdict = Verdict.INTERIOR if count % 2 == 1 else Verdict.EXTERIOR
    return Membership(verdict, float(np.min(dist)))
