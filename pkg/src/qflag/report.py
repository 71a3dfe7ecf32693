from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List

SCHEMA = "qflag/1"

# conventions every verification report states in its header
Q_COROOT_CONVENTION = (
    "quantum Chevalley terms carry q^(alpha^vee) = q_1^m_1 ... q_l^m_l "
    "(required by deg q_i = 4)"
)
Y_K_CONVENTION = "presentation matrices use y_k = lambda_k = -(x_1 + ... + x_k)"
SIGN_CONVENTION = (
    "x_k are Schubert-polynomial variables, sigma_{s_k} = x_1 + ... + x_k; the coordinates "
    "x_1 := -lambda_1 differ by x -> -x, which preserves both ideals, so every matrix and "
    "structure constant is the same in either convention; P_k acts as sigma_{s_k} o"
)


@dataclass
class Report:
    suite: str
    target: str
    failures: List[Dict[str, Any]] = field(default_factory=list)
    checks: int = 0
    conventions: List[str] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, **info) -> None:
        self.failures.append({k: (str(v) if not isinstance(v, (int, str, bool, type(None))) else v)
                              for k, v in info.items()})

    def merge(self, other: "Report", prefix: str = "") -> None:
        self.checks += other.checks
        for f in other.failures:
            self.failures.append({"family": prefix or other.suite, **f})
        for c in other.conventions:
            if c not in self.conventions:
                self.conventions.append(c)

    def to_json(self) -> Dict[str, Any]:
        d = asdict(self)
        return {"schema": SCHEMA, "suite": self.suite, "target": self.target, "pass": self.passed,
                "checks": self.checks, "conventions": self.conventions,
                "failures": d["failures"], "details": d["details"]}
