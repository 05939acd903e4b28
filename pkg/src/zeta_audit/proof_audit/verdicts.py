from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any


class Status(str, Enum):
    HOLDS_NUMERICALLY = "HOLDS_NUMERICALLY"
    FAILS = "FAILS"
    NO_LIMIT = "NO_LIMIT"
    IDENTITY = "IDENTITY"
    NOT_IDENTITY = "NOT_IDENTITY"
    CONDITIONAL = "CONDITIONAL"
    ERROR = "ERROR"


# Ordered audit steps and the claims each one checks.
STEP_CLAIMS: dict[str, tuple[str, ...]] = {
    "S1": ("integral-representation",),
    "S2": ("functional-equation-symmetry",),
    "S3": ("zero-point-integral-identities",),
    "S4": ("four-way-real-imaginary-split",),
    "S5": ("ibp-bracket:R1",),
    "S6": ("ibp-bracket:R2",),
    "S7": ("ibp-bracket:I1",),
    "S8": ("ibp-bracket:I2",),
    "S9": ("boundary-terms-vanish", "reduced-limits-exist"),
    "S10": ("divide-r2", "divide-i2", "equate-r2-i2",
            "divide-r1", "divide-i1", "equate-r1-i1"),
    "S11": ("solve-cos-r2-i2", "solve-cos-r1-i1", "conclude-half"),
}


def clean(value: Any) -> Any:
    """Make evidence JSON-safe: numpy scalars to Python, non-finite to None."""
    if isinstance(value, dict):
        return {str(k): clean(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [clean(v) for v in value]
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, complex):
        return {"re": clean(value.real), "im": clean(value.imag)}
    try:
        f = float(value)
    except (TypeError, ValueError):
        return str(value)
    return f if math.isfinite(f) else None


@dataclass
class StepVerdict:
    step: str
    status: Status
    residual: float | None = None
    evidence: dict = field(default_factory=dict)

    @property
    def claims(self) -> tuple[str, ...]:
        return STEP_CLAIMS.get(self.step, (self.step,))

    def to_dict(self) -> dict:
        return {
            "step": self.step,
            "equation_refs": list(self.claims),
            "status": self.status.value,
            "residual": clean(self.residual),
            "evidence": clean(self.evidence),
        }


def tolerance_verdict(step: str, residual: float, tolerance: float,
                      evidence: dict) -> StepVerdict:
    status = Status.HOLDS_NUMERICALLY if residual <= tolerance else Status.FAILS
    return StepVerdict(step, status, residual, {"tolerance": tolerance, **evidence})
