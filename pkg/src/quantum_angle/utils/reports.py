"""Uniform record for every checked inequality (estimate, certainty bound, Pauli-Weyl)."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict


@dataclass(frozen=True)
class BoundReport:
    """lhs <= rhs, checked with a stated tolerance.

    `applicable` is False when the inequality is only claimed under a premise that
    does not hold (a state that never changes substantially); `holds` is then
    vacuously True.
    """

    lhs: float
    rhs: float
    holds: bool
    context: str
    tolerance: float = 0.0
    applicable: bool = True
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def slack(self) -> float:
        return self.rhs - self.lhs

    @classmethod
    def compare(
        cls,
        lhs: float,
        rhs: float,
        tolerance: float,
        context: str,
        applicable: bool = True,
        **details: Any,
    ) -> "BoundReport":
        holds = (not applicable) or lhs <= rhs + tolerance
        return cls(
            lhs=float(lhs),
            rhs=float(rhs),
            holds=bool(holds),
            context=context,
            tolerance=float(tolerance),
            applicable=applicable,
            details=dict(details),
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "context": self.context,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "slack": self.slack,
            "tolerance": self.tolerance,
            "applicable": self.applicable,
            "holds": self.holds,
            "details": dict(self.details),
        }
