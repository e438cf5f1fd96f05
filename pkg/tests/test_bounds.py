from __future__ import annotations

import math

import pytest
from hypothesis import given, settings, strategies as st

from nephsub import bounds as bd
from nephsub.dominants import CLOSED_FORM_FAMILIES, POTENTIAL_CASES, Case, DominantSpec, Family, eval_dominant
from nephsub.errors import ParameterError
from nephsub.numerics.gamma import gamma

REFERENCE = {
    (Family.LEMB, Case.J0): 0.920558, (Family.LEMB, Case.J1): 0.884792, (Family.LEMB, Case.J2): 1.12994,
    (Family.SHIFTED_LEMB, Case.J0): 0.822832, (Family.SHIFTED_LEMB, Case.J1): 0.680906,
    (Family.SHIFTED_LEMB, Case.J2): 0.869561,
    (Family.SIGMOID, Case.J0): 0.730333, (Family.SIGMOID, Case.J1): 0.953141, (Family.SIGMOID, Case.J2): 1.21722,
    (Family.EXPONENTIAL, Case.J0): 1.97685, (Family.EXPONENTIAL, Case.J1): 2.57995,
    (Family.EXPONENTIAL, Case.J2): 3.29476,
    (Family.CRESCENT, Case.J0): 1.83898, (Family.CRESCENT, Case.J1): 2.40001, (Family.CRESCENT, Case.J2): 3.06497,
    (Family.CARDIOID, Case.J0): 2.5, (Family.CARDIOID, Case.J1): 3.26269, (Family.CARDIOID, Case.J2): 25 / 6,
    (Family.RATIONAL, Case.J0): 0.98308, (Family.RATIONAL, Case.J1): 1.28299, (Family.RATIONAL, Case.J2): 1.63847,
    (Family.SINE, Case.J0): 1.41912, (Family.SINE, Case.J1): 1.85207, (Family.SINE, Case.J2): 2.36521,
}


@pytest.mark.parametrize("key", list(REFERENCE), ids=lambda k: f"{k[0].value}-{k[1].value}")
def test_reference_thresholds(key):
    assert bd.sharp_beta(*key).value == pytest.approx(REFERENCE[key], abs=5e-6)


@pytest.mark.parametrize("family", CLOSED_FORM_FAMILIES, ids=lambda f: f.value)
@pytest.mark.parametrize("case", POTENTIAL_CASES, ids=lambda c: c.value)
def test_formula_matches_endpoint_derivation(family, case):
    b = bd.sharp_beta(family, case)
    b1, b2 = bd.potential_components(family, case)
    assert b.beta1 == pytest.approx(b1, rel=1e-12)
    assert b.beta2 == pytest.approx(b2, rel=1e-12)


@pytest.mark.parametrize("family", CLOSED_FORM_FAMILIES, ids=lambda f: f.value)
@pytest.mark.parametrize("case", POTENTIAL_CASES, ids=lambda c: c.value)
def test_sharp_beta_pins_endpoint(family, case):
    b = bd.sharp_beta(family, case)
    q = lambda z: eval_dominant(DominantSpec(family, case, b.value), z).real  # noqa: E731
    if b.sharp_endpoint in (bd.SharpEndpoint.MINUS_ONE, bd.SharpEndpoint.BOTH):
        assert q(-1.0) == pytest.approx(1 / 3, abs=1e-12)
    if b.sharp_endpoint in (bd.SharpEndpoint.PLUS_ONE, bd.SharpEndpoint.BOTH):
        assert q(1.0) == pytest.approx(5 / 3, abs=1e-12)
    assert 1 / 3 - 1e-12 <= q(-1.0) and q(1.0) <= 5 / 3 + 1e-12


def test_odd_potentials_tie():
    assert bd.sharp_beta(Family.SIGMOID, Case.J0).sharp_endpoint is bd.SharpEndpoint.BOTH
    assert bd.sharp_beta(Family.SINE, Case.J0).sharp_endpoint is bd.SharpEndpoint.BOTH
    assert bd.sharp_beta(Family.LEMB, Case.J0).sharp_endpoint is bd.SharpEndpoint.MINUS_ONE


def test_corollary_constants():
    got = [bd.corollary_disk_threshold(Family.RATIONAL, c) for c in POTENTIAL_CASES]
    assert got == pytest.approx([0.174526, 0.133728, 0.104716], abs=5e-6)


@settings(max_examples=50, deadline=None)
@given(st.floats(-0.95, 0.95), st.floats(0.01, 0.95), st.sampled_from(POTENTIAL_CASES))
def test_janowski_agrees_with_endpoints(B, gap, case):
    A = min(B + gap * (1 - B), 1.0)
    if B == 0 or not B < A:
        return
    b = bd.janowski_beta(A, B, case)
    assert b.components == pytest.approx(bd.potential_components(Family.JANOWSKI, case, A, B), rel=1e-9)


def test_janowski_validation():
    with pytest.raises(ParameterError):
        bd.janowski_beta(0.2, 0.5, Case.J0)
    with pytest.raises(ParameterError):
        bd.janowski_beta(0.5, -0.5, Case.LINEAR)


def _bisect(f, lo, hi, tol=1e-13):
    flo = f(lo)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def test_beta_L():
    b = bd.beta_L()
    assert abs(bd.tau(b)) <= 1e-9

    def gauss_tau(beta):
        a, bb = -0.5, 1 / beta
        c = bb + 1
        return gamma(c) * gamma(c - a - bb) / (gamma(c - a) * gamma(c - bb)) - 1 / 3

    assert abs(_bisect(gauss_tau, 0.1, 0.2) - b) <= 1e-9
    assert bd.delta(b) > 0


def test_tau_delta_known_value():
    assert bd.tau(0.5) == pytest.approx(8 / 15 - 1 / 3, abs=1e-13)


def test_hg_linear():
    b = bd.hg_linear_bound()
    assert b.value == 0.5 and b.sharp_endpoint is bd.SharpEndpoint.BOTH


def test_kustner():
    assert bd.kustner_lower_bound(0.5, 2, 3) == pytest.approx(0.8)
    beta = 0.7
    got = bd.kustner_lower_bound(0.5, 1 / beta + 1, 1 / beta + 2)
    assert got == pytest.approx((3 + 5 * beta) / (2 * (2 + 3 * beta)))
    with pytest.raises(ParameterError):
        bd.kustner_lower_bound(2, 1, 3)


def test_bound_table_complete():
    assert len(bd.closed_form_bounds()) == 24
    assert bd.bound_for(Family.HG_LINEAR, Case.LINEAR).value == 0.5
    assert math.isclose(bd.bound_for(Family.JANOWSKI, Case.J0, 0.5, -0.5).value, 3 * math.log(2))
