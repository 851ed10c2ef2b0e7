"""Pass/fail reports produced by the law-checking routines."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckReport:
    """Outcome of an exhaustive law check.

    ``counterexamples`` holds ``(input, expected, actual)`` triples rendered
    as strings; it is empty exactly when ``passed`` is True.
    """

    name: str
    passed: bool
    checked: int = 0
    counterexamples: tuple[tuple[str, str, str], ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if self.passed and self.counterexamples:
            raise ValueError("a passing report cannot carry counterexamples")

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = f"{status} ({self.name}, {self.checked} inputs)"
        for inp, expected, actual in self.counterexamples:
            out += f"\n  counterexample: input={inp} expected={expected} actual={actual}"
        return out
