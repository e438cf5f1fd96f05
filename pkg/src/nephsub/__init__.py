"""Numerics for differential subordinations into the nephroid region."""

from __future__ import annotations

from .bounds import (
    BetaBound,
    SharpEndpoint,
    TauDelta,
    beta_L,
    bound_for,
    closed_form_bounds,
    corollary_disk_threshold,
    delta,
    hg_linear_beta,
    janowski_beta,
    kustner_lower_bound,
    sharp_beta,
    tau,
)
from .dominants import Case, DominantSpec, Family, eval_dominant, ode_residual, potential
from .errors import (
    NephsubError,
    DomainError,
    BranchError,
    PoleError,
    ParameterError,
    ConvergenceError,
    NonConvergentAtBoundary,
    ToleranceNotMet,
    NoBracket,
    MaxIterations,
    OracleInconclusive,
    SamplingError,
)
from .nephroid import NephroidRegion, contains, implicit_value, membership_oracle
from .numerics import gamma, hyp2f1
from .targets import Target, TargetFunction, eval_target
from .verifier import (
    ContainmentReport,
    StarlikenessEstimate,
    Verdict,
    range_of_tau_delta,
    starlikeness_order_estimate,
    verify_containment,
)

__version__ = "0.1.0"
