"""Diagram check reports.

Every check_* operation evaluates both composites of each diagram it is
responsible for and records the evaluated paths on failure, so a failed law
localizes the offending diagram instead of collapsing into a boolean.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Failure:
    diagram: str
    left: object | None = None
    right: object | None = None
    detail: str = ""

    def __str__(self):
        if self.detail and self.left is None:
            return f"{self.diagram}: {self.detail}"
        return f"{self.diagram}: left != right"


@dataclass
class Report:
    checked: list[str] = field(default_factory=list)
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok

    def record(self, diagram: str):
        self.checked.append(diagram)

    def fail(self, diagram: str, left=None, right=None, detail: str = ""):
        self.checked.append(diagram)
        self.failures.append(Failure(diagram, left, right, detail))

    def compare(self, diagram: str, left, right) -> bool:
        """Record equality of two evaluated paths of a diagram."""
        if left == right:
            self.record(diagram)
            return True
        self.fail(diagram, left, right)
        return False

    def require(self, diagram: str, condition: bool, detail: str = "") -> bool:
        if condition:
            self.record(diagram)
        else:
            self.fail(diagram, detail=detail)
        return condition

    def absorb(self, diagram: str, exc: Exception):
        """Record a construction that blew up while building a diagram."""
        self.checked.append(diagram)
        self.failures.append(Failure(diagram, detail=f"{type(exc).__name__}: {exc}"))

    def merge(self, other: "Report", prefix: str = "") -> "Report":
        pre = f"{prefix}/" if prefix else ""
        self.checked.extend(pre + c for c in other.checked)
        for f in other.failures:
            self.failures.append(Failure(pre + f.diagram, f.left, f.right, f.detail))
        return self

    def failure_names(self) -> list[str]:
        return [f.diagram for f in self.failures]

    def summary(self) -> str:
        status = "pass" if self.ok else "FAIL"
        lines = [f"{status}: {len(self.checked)} diagrams checked, {len(self.failures)} failures"]
        lines.extend(f"  FAIL {f}" for f in self.failures)
        return "\n".join(lines)
