"""Verification records shared by the identity checks, characters and CLI."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


class PreconditionError(ValueError):
    """An identity was asked about parameters outside its hypothesis."""


@dataclass(frozen=True)
class VerificationReport:
    identity: str
    params: dict[str, int]
    lhs: int
    rhs: int

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs

    def to_dict(self) -> dict:
        # big integers go out as decimal strings
        return {
            "identity": self.identity,
            "params": dict(self.params),
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "ok": self.ok,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        return cls(d["identity"], dict(d["params"]), int(d["lhs"]), int(d["rhs"]))


@dataclass
class SweepSummary:
    reports: list[VerificationReport] = field(default_factory=list)

    @property
    def total(self) -> int:
        return len(self.reports)

    @property
    def failures(self) -> list[VerificationReport]:
        return [r for r in self.reports if not r.ok]

    @property
    def ok(self) -> bool:
        return not self.failures

    def extend(self, other: "SweepSummary") -> None:
        self.reports.extend(other.reports)
