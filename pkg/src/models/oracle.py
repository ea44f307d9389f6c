from dataclasses import dataclass, field
from typing import Optional

from .linalg import Mat2


@dataclass(frozen=True, eq=False)
class IntertwinerSolution:
    kernel_basis: tuple[Mat2, ...]
    rank: int
    pd_witness: Optional[Mat2] = None

    @property
    def dimension(self) -> int:
        return len(self.kernel_basis)


@dataclass(frozen=True)
class CheckResult:
    name: str
    deviation: float
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class CrossValidationReport:
    kernel_dimension: int
    expected_dimension: Optional[int]
    checks: tuple[CheckResult, ...] = field(default_factory=tuple)

    @property
    def max_deviation(self) -> float:
        return max((check.deviation for check in self.checks), default=0.0)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)
