"""Result records for identity checks."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

__all__ = ["BracketReport"]


@dataclass
class BracketReport:
    """Outcome of one identity check: residual rendering plus verdict."""

    identity: str
    passed: bool
    residual: str = "0"
    witness: list[str] = field(default_factory=list)
    n: int | None = None
    p: int | None = None
    q: int | None = None
    seed: int | None = None

    @classmethod
    def success(cls, identity: str, **meta) -> BracketReport:
        return cls(identity, True, **meta)

    @classmethod
    def failure(cls, identity: str, residual: str, **meta) -> BracketReport:
        return cls(identity, False, residual, **meta)

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "n": self.n,
            "p": self.p,
            "q": self.q,
            "pass": self.passed,
            "residual": self.residual,
            "witness": list(self.witness),
            "seed": self.seed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(", ", ": "))

    def render_text(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        extras = [
            f"{key}={value}"
            for key, value in (("n", self.n), ("p", self.p), ("q", self.q), ("seed", self.seed))
            if value is not None
        ]
        line = f"{verdict} {self.identity}"
        if extras:
            line += " [" + ", ".join(extras) + "]"
        if not self.passed:
            line += f" residual={self.residual}"
            if self.witness:
                line += " witness=" + "; ".join(self.witness)
        return line
