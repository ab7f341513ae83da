from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class StructureReport:
    """Named residuals checked against a single tolerance."""

    residuals: dict = field(default_factory=dict)
    tol: float = 0.0
    title: str = ""

    @property
    def passed(self):
        return all(r <= self.tol for r in self.residuals.values())

    def __bool__(self):
        return self.passed

    def failures(self):
        return [name for name, r in self.residuals.items() if r > self.tol]

    def __getitem__(self, name):
        return self.residuals[name]

    def to_dict(self):
        return {
            "title": self.title,
            "tol": self.tol,
            "passed": self.passed,
            "failures": self.failures(),
            "residuals": {k: float(v) for k, v in self.residuals.items()},
        }

    def __str__(self):
        lines = [f"{self.title or 'report'}: {'PASS' if self.passed else 'FAIL'} (tol={self.tol:.1e})"]
        for name, r in self.residuals.items():
            flag = "ok" if r <= self.tol else "FAIL"
            lines.append(f"  {name:<32} {r:.3e}  {flag}")
        return "\n".join(lines)


def relative_residual(diff, ref):
    """Frobenius norm of ``diff`` scaled by ``max(1, |ref|)``."""
    import numpy as np

    return float(np.linalg.norm(diff) / max(1.0, np.linalg.norm(ref)))
