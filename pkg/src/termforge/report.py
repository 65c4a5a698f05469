"""Validation findings and the report that collects them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Tuple

ERROR = "error"
WARNING = "warning"


@dataclass(frozen=True)
class Finding:
    severity: str
    code: str
    path: str
    message: str = ""

    def sort_key(self):
        return (self.path, self.code, self.severity, self.message)

    def line(self) -> str:
        return f"{self.severity.upper()}\t{self.code}\t{self.path}\t{self.message}"


def error(code, path, message="") -> Finding:
    return Finding(ERROR, code, path, message)


def warning(code, path, message="") -> Finding:
    return Finding(WARNING, code, path, message)


@dataclass(frozen=True)
class ValidationReport:
    """Deterministically ordered findings (by path, then code)."""

    findings: Tuple[Finding, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "findings",
                           tuple(sorted(set(self.findings), key=Finding.sort_key)))

    @classmethod
    def of(cls, findings: Iterable[Finding]) -> "ValidationReport":
        return cls(tuple(findings))

    def __iter__(self):
        return iter(self.findings)

    def __len__(self):
        return len(self.findings)

    def __add__(self, other):
        return ValidationReport(self.findings + tuple(other))

    @property
    def errors(self):
        return tuple(f for f in self.findings if f.severity == ERROR)

    @property
    def warnings(self):
        return tuple(f for f in self.findings if f.severity == WARNING)

    @property
    def ok(self) -> bool:
        """True when there are no errors (warnings allowed)."""
        return not self.errors

    def codes(self):
        return sorted({f.code for f in self.findings})

    def lines(self):
        return [f.line() for f in self.findings]
