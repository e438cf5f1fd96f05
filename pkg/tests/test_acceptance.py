"""One test per acceptance criterion; each prints a single PASS/FAIL line."""

from __future__ import annotations

import math
import time

import numpy as np
import pytest

from nephsub import bounds as bd
from nephsub.dominants import CLOSED_FORM_FAMILIES, POTENTIAL_CASES, Case, DominantSpec, Family, eval_dominant, ode_residual
from nephsub.errors import OracleInconclusive
from nephsub.nephroid import Verdict as Region, contains, membership_oracle
from nephsub.numerics.gamma import gamma
from nephsub.numerics.hypergeometric import Hyp2F1Params, hyp2f1, hyp2f1_derivative, hyp2f1_euler, hyp2f1_series
from nephsub.targets import Target, TargetFunction
from nephsub.verifier import Verdict, starlikeness_order_estimate, verify_containment

from test_bounds import REFERENCE

JAN = dict(A=0.5, B=-0.5)


@pytest.fixture
def report(capsys):
    def emit(n: int, ok: bool, detail: str):
        with capsys.disabled():
            print(f"\n[acceptance {n}] {'PASS' if ok else 'FAIL'}: {detail}")
        assert ok, detail
    return emit


def _disk(rng, n, rmax=1.0):
    return rmax * np.sqrt(rng.random(n)) * np.exp(2j * np.pi * rng.random(n))


def test_1_constants(report):
    t0 = time.perf_counter()
    errs = [abs(bd.sharp_beta(f, c).value - v) for (f, c), v in REFERENCE.items()]
    dt = time.perf_counter() - t0
    ok = len(errs) == 24 and max(errs) <= 5e-6 and dt < 5
    report(1, ok, f"24 thresholds, max |err| {max(errs):.2e} (tol 5e-6), {dt:.2f}s (< 5s)")


def test_2_corollary_constants(report):
    got = [bd.corollary_disk_threshold(Family.RATIONAL, c) for c in POTENTIAL_CASES]
    err = max(abs(g - w) for g, w in zip(got, (0.174526, 0.133728, 0.104716)))
    report(2, err <= 5e-6, f"disk radii {', '.join(f'{g:.6f}' for g in got)}, max |err| {err:.2e}")


def _triple(bound: bd.BetaBound) -> tuple[bool, str]:
    spec = DominantSpec(bound.family, bound.case, bound.value, bound.A, bound.B)
    lo, at, hi = (verify_containment(spec.with_beta(f * bound.value), n=8192, tol=1e-6) for f in (0.99, 1.0, 1.5))
    ok = (lo.verdict is Verdict.VIOLATED and at.verdict is Verdict.CONTAINED_TANGENT
          and hi.verdict is Verdict.CONTAINED_STRICT)
    cusps = bound.sharp_endpoint.angles
    near = lambda t, c: abs(math.remainder(t - c, 2 * math.pi)) < 1e-2  # noqa: E731
    if len(cusps) == 1:
        ok &= near(at.worst_angle, cusps[0])
    else:
        ok &= all(any(near(t, c) for t in at.tangency_points) for c in cusps)
    return ok, f"{bound.family.value}/{bound.case.value}"


def test_3_sharpness_triples(report):
    t0 = time.perf_counter()
    bounds = bd.closed_form_bounds() + [bd.hg_linear_bound()]
    bad = [name for ok, name in map(_triple, bounds) if not ok]
    dt = time.perf_counter() - t0
    ok = not bad and dt < 60
    report(3, ok, f"{len(bounds) - len(bad)}/{len(bounds)} triples Violated/Tangent/Strict at n=8192, "
                  f"{dt:.1f}s (< 60s){' failing: ' + ', '.join(bad) if bad else ''}")


def test_4_hypergeometric_suite(report):
    rng = np.random.default_rng(2024)
    # terminating a = -1 against 1 + z/(1+beta)
    betas = rng.uniform(0.05, 20, 100)
    zs = _disk(rng, 100)
    term = max(abs(hyp2f1(Hyp2F1Params(-1.0, 1 / b, 1 / b + 1), -z) - (1 + z / (1 + b))) for b, z in zip(betas, zs))
    # series vs Euler integral on |z| = 0.85
    worst_se = 0.0
    for _ in range(100):
        b, gap = rng.uniform(0.05, 6), rng.uniform(0.05, 6)
        p = Hyp2F1Params(rng.uniform(-2, 3), b, b + gap)
        z = 0.85 * np.exp(2j * np.pi * rng.random())
        worst_se = max(worst_se, abs(hyp2f1_series(p, z) - hyp2f1_euler(p, z)))
    # derivative identity against finite differences
    worst_d, h = 0.0, 1e-4
    for _ in range(50):
        b = rng.uniform(0.1, 5)
        p = Hyp2F1Params(rng.uniform(-1, 2), b, b + rng.uniform(0.1, 4))
        z = complex(_disk(rng, 1, 0.8)[0])
        fd = (-hyp2f1(p, z + 2 * h) + 8 * hyp2f1(p, z + h) - 8 * hyp2f1(p, z - h) + hyp2f1(p, z - 2 * h)) / (12 * h)
        d = hyp2f1_derivative(p, z)
        worst_d = max(worst_d, abs(d - fd) / max(1.0, abs(d)))
    ok = term <= 1e-14 and worst_se <= 1e-8 and worst_d <= 1e-7
    report(4, ok, f"terminating err {term:.1e}, series/Euler {worst_se:.1e} (<= 1e-8), "
                  f"derivative {worst_d:.1e} (<= 1e-7)")


def test_5_beta_L(report):
    b = bd.beta_L()
    residual = abs(bd.tau(b))

    # independent oracle: Gauss summation plus plain bisection
    def g(beta):
        a, bb = -0.5, 1 / beta
        c = bb + 1
        return gamma(c) * gamma(c - a - bb) / (gamma(c - a) * gamma(c - bb)) - 1 / 3

    lo, hi = 0.1, 1.0
    while hi - lo > 1e-13:
        mid = 0.5 * (lo + hi)
        lo, hi = (mid, hi) if g(mid) < 0 else (lo, mid)
    gap = abs(0.5 * (lo + hi) - b)
    sharp, _ = _triple(bd.hg_lemniscate_bound())
    ok = residual <= 1e-9 and gap <= 1e-9 and sharp
    report(5, ok, f"beta_L = {b:.12f}, |tau| {residual:.1e}, oracle gap {gap:.1e}, sharpness triple {sharp}")


def test_6_kustner(report):
    rng = np.random.default_rng(11)
    margins = []
    for beta in rng.uniform(0.1, 10, 20):
        est = starlikeness_order_estimate(0.5, 1 / beta + 1, 1 / beta + 2, 0.99, 64)
        margins.append(est.inf_estimate - ((3 + 5 * beta) / (2 * (2 + 3 * beta)) - 0.02))
    report(6, min(margins) >= 0, f"20 betas, min(estimate - bound + 0.02) = {min(margins):.4f} (>= 0)")


def _all_specs():
    specs = []
    for fam in CLOSED_FORM_FAMILIES + (Family.JANOWSKI,):
        kw = JAN if fam is Family.JANOWSKI else {}
        for case in POTENTIAL_CASES:
            specs.append(DominantSpec(fam, case, bd.bound_for(fam, case, **kw).value, **kw))
    specs.append(DominantSpec(Family.HG_LEMNISCATE, Case.LINEAR, bd.beta_L()))
    specs.append(DominantSpec(Family.HG_LINEAR, Case.LINEAR, 0.5))
    return specs


def test_7_ode_residuals(report):
    rng = np.random.default_rng(5)
    z = _disk(rng, 200, 0.95)
    specs = _all_specs()
    worst = max(float(np.max(ode_residual(s, z))) for s in specs)
    fams = {s.family for s in specs}
    report(7, worst <= 1e-7 and len(fams) == 11,
           f"{len(fams)} families, {len(specs)} dominants, max residual {worst:.1e} (<= 1e-7)")


def test_8_geometry_oracle(report):
    xs, ys = np.linspace(-0.2, 2.2, 200), np.linspace(-1.5, 1.5, 200)
    agree = disagree = skipped = 0
    for x in xs:
        for y in ys:
            w = complex(x, y)
            try:
                ref = membership_oracle(w)
            except OracleInconclusive:
                skipped += 1
                continue
            got = contains(w).verdict
            if got is Region.BOUNDARY:
                skipped += 1
            elif got is ref.verdict:
                agree += 1
            else:
                disagree += 1
    report(8, disagree == 0, f"{agree} agree, {disagree} disagree, {skipped} inconclusive of 40000")


def test_9_symmetry_normalisation(report):
    rng = np.random.default_rng(9)
    z = _disk(rng, 1000)
    funcs = [TargetFunction(k) for k in Target if k is not Target.JANOWSKI]
    funcs.append(TargetFunction(Target.JANOWSKI, **JAN))
    funcs += [lambda w, s=s: eval_dominant(s, w) for s in _all_specs()]
    worst_sym = worst_norm = 0.0
    for f in funcs:
        worst_sym = max(worst_sym, float(np.max(np.abs(f(np.conj(z)) - np.conj(f(z))))))
        worst_norm = max(worst_norm, abs(complex(f(0.0)) - 1))
        d = (complex(f(1e-6)) - complex(f(-1e-6))) / 2e-6
        assert d.real > 0
    ok = worst_sym <= 1e-12 and worst_norm <= 1e-15
    report(9, ok, f"{len(funcs)} functions, conjugate symmetry {worst_sym:.1e}, f(0)-1 {worst_norm:.1e}")
