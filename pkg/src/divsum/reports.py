"""Report and parameter types shared by all identity evaluators."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .summation import SumMode, SumPolicy

__all__ = ["Verdict", "Member", "EvalParams", "IdentityReport",
           "order_indicator", "PreconditionViolation", "make_report"]


class PreconditionViolation(ValueError):
    pass


class Verdict(enum.Enum):
    PASS = "Pass"
    FAIL = "Fail"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class Member:
    label: str
    value: complex
    err_estimate: float = 0.0


@dataclass(frozen=True)
class EvalParams:
    series_policy: SumPolicy = field(default_factory=lambda: SumPolicy(
        tol=1e-10, max_terms=1_000_000, min_terms=4, mode=SumMode.PLAIN_COMPENSATED))
    quad_tol: float = 1e-9
    contour_T_start: float = 40.0
    integer_snap_delta: float = 1e-6

    def __post_init__(self):
        for t in (self.quad_tol, self.integer_snap_delta):
            if not (0.0 < t < 1.0):
                raise ValueError("tolerances must lie in (0, 1)")


@dataclass(frozen=True)
class IdentityReport:
    identity_id: str
    inputs: dict
    members: tuple
    residuals: tuple           # ((label_i, label_j, value), ...)
    tol_used: float
    verdict: Verdict
    notes: dict = field(default_factory=dict)

    @property
    def max_residual(self) -> float:
        return max((r[2] for r in self.residuals), default=0.0)

    def to_dict(self) -> dict:
        return {
            "identity_id": self.identity_id,
            "inputs": {k: _plain(v) for k, v in sorted(self.inputs.items())},
            "members": [{"label": m.label, "value": _plain(m.value),
                         "err_estimate": m.err_estimate} for m in self.members],
            "residuals": [{"between": [a, b], "value": v} for a, b, v in self.residuals],
            "tol": self.tol_used,
            "verdict": self.verdict.value,
            "notes": {k: _plain(v) for k, v in sorted(self.notes.items())},
        }


def _plain(v):
    if isinstance(v, complex):
        return {"re": v.real, "im": v.imag}
    if isinstance(v, float) and (math.isnan(v) or math.isinf(v)):
        return str(v)
    return v


def order_indicator(s) -> int:
    """0 when s is an odd integer, else 1."""
    s = complex(s)
    if abs(s.imag) < 1e-12:
        r = round(s.real)
        if abs(s.real - r) < 1e-12 and r % 2 != 0:
            return 0
    return 1


def make_report(identity_id: str, inputs: dict, members, tol: float,
                notes: dict | None = None, scale: float = 1.0) -> IdentityReport:
    """Assemble a report: residuals are pairwise |m_i - m_j| / scale."""
    members = tuple(members)
    residuals = []
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            residuals.append((members[i].label, members[j].label,
                              abs(members[i].value - members[j].value) / scale))
    inconclusive = any(m.err_estimate / scale > tol for m in members)
    passed = all(r[2] <= tol for r in residuals)
    verdict = Verdict.INCONCLUSIVE if inconclusive else (
        Verdict.PASS if passed else Verdict.FAIL)
    return IdentityReport(identity_id, dict(inputs), members, tuple(residuals),
                          tol, verdict, dict(notes or {}))
