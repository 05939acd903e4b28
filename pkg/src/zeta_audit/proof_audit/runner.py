"""End-to-end audit: eleven ordered verdicts for one strip point."""
from __future__ import annotations

from dataclasses import asdict, dataclass

from ..errors import PreconditionError
from ..integral import StripPoint, zeta_integral
from ..kernels import Component
from ..numerics import reference_zeta
from .algebra import ALGEBRA_STEPS, algebraic_step_check
from .oscillation import limit_claim_audit
from .residuals import (
    component_integral,
    component_lhs,
    functional_equation_check,
    ibp_audit,
    zero_identity_residual,
)
from .verdicts import Status, StepVerdict, tolerance_verdict

__all__ = ["AuditConfig", "run_full_audit", "audit_report", "SCHEMA_VERSION", "STEP_ORDER"]

SCHEMA_VERSION = 1
STEP_ORDER = ("S1", "S2", "S3", "S4", "S5", "S6", "S7", "S8", "S9", "S10", "S11")
_IBP_STEPS = {"S5": Component.R1, "S6": Component.R2, "S7": Component.I1, "S8": Component.I2}
_EVAL_TOL = 1e-10


@dataclass(frozen=True)
class AuditConfig:
    tolerance: float = 1e-6
    n_grid: tuple[float, ...] = (10.0, 100.5, 1000.0)
    k_max: int = 40
    seed: int = 42
    sample_count: int = 200

    def __post_init__(self):
        if not self.tolerance > 0:
            raise PreconditionError("tolerance must be positive")
        if not self.n_grid or any(not n > 1 for n in self.n_grid):
            raise PreconditionError("n_grid values must all exceed 1")
        if self.k_max < 8:
            raise PreconditionError("k_max must be at least 8")
        if self.sample_count < 100:
            raise PreconditionError("sample_count must be at least 100")

    def to_dict(self) -> dict:
        out = asdict(self)
        out["n_grid"] = list(self.n_grid)
        return out


def _representation(p: StripPoint, cfg: AuditConfig) -> StepVerdict:
    result = zeta_integral(p.s, _EVAL_TOL)
    ref = reference_zeta(p.s)
    return tolerance_verdict("S1", abs(result.value - ref), cfg.tolerance, {
        "zeta_integral": result.value,
        "reference_zeta": ref,
        "tail_bound": result.tail_bound,
        "intervals_used": result.intervals_used,
    })


def _symmetry(p: StripPoint, cfg: AuditConfig) -> StepVerdict:
    residual = functional_equation_check(p.s, _EVAL_TOL)
    mirror = 1.0 - p.s
    return tolerance_verdict("S2", residual, cfg.tolerance, {
        "abs_zeta_s": abs(zeta_integral(p.s, _EVAL_TOL).value),
        "abs_zeta_one_minus_s": abs(zeta_integral(mirror, _EVAL_TOL).value),
        "scope": "G(s) is finite and nonzero on the open strip only",
    })


def _zero_identities(p: StripPoint, cfg: AuditConfig) -> StepVerdict:
    here = zero_identity_residual(p.s)
    there = zero_identity_residual(p.mirror().s)
    return tolerance_verdict("S3", max(here.residual, there.residual), cfg.tolerance, {
        "at_s": {"residual": here.residual, "abs_zeta_over_s": here.zeta_over_s},
        "at_one_minus_conj_s": {"residual": there.residual, "abs_zeta_over_s": there.zeta_over_s},
    })


def _split(p: StripPoint, cfg: AuditConfig) -> StepVerdict:
    rows = {}
    for c in Component:
        lhs = component_lhs(c, p)
        rhs = component_integral(c, p)
        rows[c.value] = {"lhs": lhs, "integral": rhs, "residual": abs(lhs - rhs)}
    worst = max(r["residual"] for r in rows.values())
    return tolerance_verdict("S4", worst, cfg.tolerance, {"components": rows})


def _combine(step: str, verdicts: list[StepVerdict]) -> StepVerdict:
    statuses = {v.status for v in verdicts}
    if statuses == {Status.IDENTITY}:
        status = Status.IDENTITY
    elif Status.NOT_IDENTITY in statuses:
        status = Status.NOT_IDENTITY
    else:
        status = Status.CONDITIONAL
    residuals = [v.residual for v in verdicts if v.residual is not None]
    evidence = {"checks": [{"check": v.step, "status": v.status.value, **v.evidence}
                           for v in verdicts]}
    return StepVerdict(step, status, max(residuals) if residuals else None, evidence)


def _rearrangements(cfg: AuditConfig) -> StepVerdict:
    return _combine("S10", [algebraic_step_check(s, cfg.sample_count, cfg.seed)
                            for s in ALGEBRA_STEPS[:6]])


def _conclusion(cfg: AuditConfig) -> StepVerdict:
    names = ALGEBRA_STEPS[6:] + ("conclude-half",)
    verdict = _combine("S11", [algebraic_step_check(s, cfg.sample_count, cfg.seed)
                               for s in names])
    extra = [algebraic_step_check(s, cfg.sample_count, cfg.seed)
             for s in ("half-probe", "full-chain")]
    verdict.evidence["probes"] = [{"check": v.step, "status": v.status.value, **v.evidence}
                                  for v in extra]
    return verdict


def _guard(step: str, fn, *args) -> StepVerdict:
    try:
        return fn(*args)
    except Exception as exc:  # recorded, never raised out of the audit
        return StepVerdict(step, Status.ERROR, None,
                           {"error": type(exc).__name__, "message": str(exc)})


def run_full_audit(p: StripPoint, config: AuditConfig | None = None) -> list[StepVerdict]:
    """Run S1 through S11 at ``p``; step-level failures become ERROR verdicts."""
    cfg = config or AuditConfig()
    p.require_strip()
    out = [
        _guard("S1", _representation, p, cfg),
        _guard("S2", _symmetry, p, cfg),
        _guard("S3", _zero_identities, p, cfg),
        _guard("S4", _split, p, cfg),
    ]
    for step, component in _IBP_STEPS.items():
        out.append(_guard(step, ibp_audit, component, p, list(cfg.n_grid), cfg.tolerance, step))
    out.append(_guard("S9", limit_claim_audit, p, cfg.k_max, None, cfg.tolerance))
    out.append(_guard("S10", _rearrangements, cfg))
    out.append(_guard("S11", _conclusion, cfg))
    return out


def audit_report(p: StripPoint, verdicts: list[StepVerdict], config: AuditConfig,
                 source: dict | None = None) -> dict:
    """JSON-ready report; key order and content depend only on the inputs."""
    return {
        "schema": SCHEMA_VERSION,
        "point": {"a": p.a, "b": p.b, **(source or {})},
        "config": config.to_dict(),
        "steps": [v.to_dict() for v in verdicts],
    }
