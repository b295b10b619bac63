"""Structured pass/fail records shared by the verification routines."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .cube_core import format_vertex


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    m: int | None = None
    measured: Any = None
    bound: Any = None
    # a vertex (int) or a list of vertices
    witness: Any = None

    def to_record(self) -> dict:
        rec = {
            "check": self.name,
            "status": "pass" if self.passed else "fail",
            "m": self.m,
            "measured": self.measured,
            "bound": self.bound,
        }
        if self.witness is not None:
            rec["witness"] = _witness_items(self.witness)
        return rec


def _witness_items(w):
    if isinstance(w, int):
        return format_vertex(w)
    return [format_vertex(int(x)) for x in w]


@dataclass
class VerificationReport:
    title: str
    n: int
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def add(self, check: Check) -> None:
        self.checks.append(check)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_record(self) -> dict:
        return {
            "title": self.title,
            "n": self.n,
            "status": "pass" if self.passed else "fail",
            "notes": list(self.notes),
            "checks": [c.to_record() for c in self.checks],
        }

    def to_text(self) -> str:
        lines = [f"{self.title}: {'PASS' if self.passed else 'FAIL'}"]
        lines += [f"  note: {s}" for s in self.notes]
        for c in self.checks:
            parts = [f"  [{'pass' if c.passed else 'FAIL'}] {c.name}"]
            if c.m is not None:
                parts.append(f"m={c.m}")
            if c.measured is not None:
                parts.append(f"measured={c.measured}")
            if c.bound is not None:
                parts.append(f"bound={c.bound}")
            if c.witness is not None:
                parts.append(f"witness={_witness_items(c.witness)}")
            lines.append(" ".join(parts))
        return "\n".join(lines)
