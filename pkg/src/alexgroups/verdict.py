"""Check outcomes and the exceptions shared across the package."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


class InputError(ValueError):
    """Malformed or out-of-range input (bad relation, index, file, radius...)."""


class ResourceError(RuntimeError):
    """Requested computation exceeds the supported search size."""


@dataclass(frozen=True)
class Verdict:
    """Outcome of a single check.

    ``witness`` is set exactly when the check failed and holds the element,
    pair or tuple that violates the checked condition. ``details`` carries
    auxiliary data (case counts, examples found) and never affects ``passed``.
    """

    passed: bool
    witness: Any = None
    reason: str = ""
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.passed and self.witness is not None:
            raise ValueError("a passing verdict cannot carry a witness")
        if not self.passed and self.witness is None:
            raise ValueError("a failing verdict needs a witness")

    def __bool__(self) -> bool:
        return self.passed

    @classmethod
    def ok(cls, **details) -> "Verdict":
        return cls(True, details=details)

    @classmethod
    def fail(cls, witness, reason: str = "", **details) -> "Verdict":
        return cls(False, witness=witness, reason=reason, details=details)

    def to_dict(self) -> dict:
        return {
            "pass": self.passed,
            "witness": _jsonable(self.witness),
            "reason": self.reason,
            "details": _jsonable(self.details),
        }


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (frozenset, set)):
        return [_jsonable(v) for v in sorted(obj)]
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj
