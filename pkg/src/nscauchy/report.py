"""Pass/fail records emitted by the identity checks."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Optional


@dataclass
class VerificationReport:
    identity: str
    n: Optional[int] = None
    maxdeg: Optional[int] = None
    gtype: Optional[str] = None
    checks: int = 0
    counterexample: Optional[dict] = None
    details: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "fail" if self.counterexample is not None else "pass"

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def record(self, ok: bool, **payload: Any) -> bool:
        """Count one check; keep the first failure's payload."""
        self.checks += 1
        if not ok and self.counterexample is None:
            self.counterexample = {k: _jsonable(v) for k, v in payload.items()}
        return ok

    def merge(self, other: "VerificationReport", label: str = None) -> None:
        self.checks += other.checks
        if other.counterexample is not None and self.counterexample is None:
            self.counterexample = dict(other.counterexample)
            if label:
                self.counterexample["part"] = label

    def to_dict(self) -> dict:
        out = {
            "identity": self.identity,
            "type": self.gtype,
            "n": self.n,
            "maxdeg": self.maxdeg,
            "status": self.status,
            "checks": self.checks,
            "counterexample": self.counterexample,
        }
        if self.details:
            out["details"] = {k: _jsonable(v) for k, v in self.details.items()}
        return out

    def to_json(self, indent: int = None) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=False)


def _jsonable(v):
    from fractions import Fraction

    from .laurent import LaurentPoly

    if isinstance(v, LaurentPoly):
        return {"pretty": v.pretty(), **v.to_dict()}
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (int, float, str, bool)) or v is None:
        return v
    return str(v)
