"""Verification outcomes shared by every campaign."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

CERTIFIED = "certified"
REFUTED = "refuted"
INCONCLUSIVE = "inconclusive"


@dataclass
class Certificate:
    """Result of trying to certify one target.

    ``depth`` is the number of L-levels computed. ``failure_index`` is the
    first failing ``(level, position)`` of a refutation, and ``r0_level`` the
    level at which the r0-factor test first succeeded.
    """

    target: str
    status: str
    depth: int = 0
    failure_index: tuple[int, int] | None = None
    r0_level: int | None = None
    elapsed: float = 0.0
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def certified(self) -> bool:
        return self.status == CERTIFIED

    @property
    def refuted(self) -> bool:
        return self.status == REFUTED

    def to_record(self, timing: bool = False) -> dict[str, Any]:
        rec: dict[str, Any] = {
            "target": self.target,
            "status": self.status,
            "depth": self.depth,
            "failure_index": list(self.failure_index) if self.failure_index else None,
            "r0_level": self.r0_level,
            "details": to_exact_json(self.details),
        }
        if timing:
            rec["elapsed"] = f"{self.elapsed:.6f}"
        return rec


def exact_str(x) -> str:
    """Integers as decimal strings, rationals as ``p/q``."""
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"
    return str(int(x))


def to_exact_json(obj):
    """Recursively turn numbers into exact strings; leave bools and None alone."""
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, dict):
        return {str(k): to_exact_json(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_exact_json(v) for v in obj]
    if isinstance(obj, float):
        raise TypeError("floating point values are not allowed in reports")
    return exact_str(obj)
