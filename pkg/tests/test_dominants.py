from __future__ import annotations

import math

import mpmath
import numpy as np
import pytest

from nephsub.bounds import beta_L, bound_for
from nephsub.dominants import (
    CLOSED_FORM_FAMILIES,
    POTENTIAL_CASES,
    Case,
    DominantSpec,
    Family,
    eval_dominant,
    ode_residual,
    potential,
)
from nephsub.errors import DomainError, ParameterError, PoleError

JAN = dict(A=0.5, B=-0.5)


def family_params(f):
    return JAN if f is Family.JANOWSKI else {}


def all_specs():
    # at the sharp beta, where the dominants are analytic on the closed disk
    specs = []
    for fam in CLOSED_FORM_FAMILIES + (Family.JANOWSKI,):
        for case in POTENTIAL_CASES:
            beta = bound_for(fam, case, **family_params(fam)).value
            specs.append(DominantSpec(fam, case, beta, **family_params(fam)))
    specs.append(DominantSpec(Family.HG_LEMNISCATE, Case.LINEAR, beta_L()))
    specs.append(DominantSpec(Family.HG_LINEAR, Case.LINEAR, 0.5))
    return specs


def _quad_potential(spec, z):
    P = spec.target
    f = lambda t: (complex(P(complex(t))) - 1) / complex(t)  # noqa: E731
    return complex(mpmath.quad(lambda s: f(s * z) * z, [0, 1]))


@pytest.mark.parametrize("family", CLOSED_FORM_FAMILIES + (Family.JANOWSKI,), ids=lambda f: f.value)
@pytest.mark.parametrize("z", [1.0, -1.0, 0.6 + 0.5j, -0.3 - 0.9j, 0.95j])
def test_potential_against_quadrature(family, z):
    spec = DominantSpec(family, Case.J0, 1.0, **family_params(family))
    got = potential(family, z, **family_params(family))
    assert abs(got - _quad_potential(spec, z)) <= 1e-10


@pytest.mark.parametrize("spec", all_specs(), ids=lambda s: f"{s.family.value}-{s.case.value}")
def test_ode_residual(spec):
    rng = np.random.default_rng(7)
    z = 0.95 * np.sqrt(rng.random(200)) * np.exp(2j * np.pi * rng.random(200))
    assert np.max(ode_residual(spec, z)) <= 1e-7


@pytest.mark.parametrize("spec", all_specs(), ids=lambda s: f"{s.family.value}-{s.case.value}")
def test_normalised_and_conjugate_symmetric(spec):
    rng = np.random.default_rng(3)
    z = np.sqrt(rng.random(100)) * np.exp(2j * np.pi * rng.random(100))
    assert eval_dominant(spec, 0.0) == pytest.approx(1.0, abs=1e-15)
    np.testing.assert_allclose(eval_dominant(spec, np.conj(z)), np.conj(eval_dominant(spec, z)), atol=1e-12)


def test_hg_linear_closed_form():
    spec = DominantSpec(Family.HG_LINEAR, Case.LINEAR, 0.5)
    assert eval_dominant(spec, -1.0) == pytest.approx(1 / 3)
    assert eval_dominant(spec, 1.0) == pytest.approx(5 / 3)


def test_hg_lemniscate_endpoint_at_beta_L():
    spec = DominantSpec(Family.HG_LEMNISCATE, Case.LINEAR, beta_L())
    assert eval_dominant(spec, -1.0).real == pytest.approx(1 / 3, abs=1e-9)


def test_spec_validation():
    with pytest.raises(ParameterError):
        DominantSpec(Family.LEMB, Case.J0, 0.0)
    with pytest.raises(ParameterError):
        DominantSpec(Family.LEMB, Case.LINEAR, 1.0)
    with pytest.raises(ParameterError):
        DominantSpec(Family.HG_LINEAR, Case.J1, 1.0)
    with pytest.raises(ParameterError):
        DominantSpec(Family.JANOWSKI, Case.J0, 1.0)
    with pytest.raises(ParameterError):
        DominantSpec(Family.CARDIOID, Case.J0, 1.0, A=0.5, B=0.1)
    assert DominantSpec(Family.LEMB, Case.J0, 1.0).with_beta(2.0).beta == 2.0


def test_domain_and_pole():
    with pytest.raises(DomainError):
        eval_dominant(DominantSpec(Family.EXPONENTIAL, Case.J0, 1.0), 1.1)
    # 1 - Ein(1)/beta = 0 at beta = Ein(1)
    b = float(potential(Family.EXPONENTIAL, 1.0).real)
    with pytest.raises(PoleError):
        eval_dominant(DominantSpec(Family.EXPONENTIAL, Case.J2, b), 1.0)
    with pytest.raises(DomainError):
        ode_residual(DominantSpec(Family.EXPONENTIAL, Case.J0, 1.0), 0.9995)


def test_lemniscate_potential_at_endpoints():
    assert potential(Family.LEMB, -1.0).real == pytest.approx(2 * (math.log(2) - 1))
    s = math.sqrt(2)
    assert potential(Family.LEMB, 1.0).real == pytest.approx(2 * (s + math.log(2) - math.log(1 + s) - 1))
