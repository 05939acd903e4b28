"""Step-by-step numerical and algebraic audit of the integration-by-parts
argument for the location of zeta zeros."""
from .algebra import ALGEBRA_STEPS, STEPS, algebraic_step_check, check_implication
from .oscillation import (
    OscillationSeries,
    limit_claim_audit,
    oscillation_term,
    peak_phase,
    sample_oscillation,
)
from .residuals import (
    IbpAudit,
    ZeroIdentityResidual,
    component_integral,
    component_lhs,
    component_residual,
    functional_equation_check,
    functional_factor,
    ibp_audit,
    ibp_bracket,
    ibp_direct,
    ibp_jump_correction,
    ibp_measure,
    zero_identity_residual,
)
from .runner import SCHEMA_VERSION, STEP_ORDER, AuditConfig, audit_report, run_full_audit
from .verdicts import STEP_CLAIMS, Status, StepVerdict

__all__ = [
    "ALGEBRA_STEPS", "STEPS", "algebraic_step_check", "check_implication",
    "OscillationSeries", "limit_claim_audit", "oscillation_term", "peak_phase",
    "sample_oscillation",
    "IbpAudit", "ZeroIdentityResidual", "component_integral", "component_lhs",
    "component_residual", "functional_equation_check", "functional_factor", "ibp_audit",
    "ibp_bracket", "ibp_direct", "ibp_jump_correction", "ibp_measure", "zero_identity_residual",
    "SCHEMA_VERSION", "STEP_ORDER", "AuditConfig", "audit_report", "run_full_audit",
    "STEP_CLAIMS", "Status", "StepVerdict",
]
