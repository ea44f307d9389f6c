from dataclasses import dataclass
from enum import Enum
from typing import ClassVar, Optional, Union

from .linalg import Mat2
from .metric import MetricOperator
from .operator import QuasiHermitianOp


class CaseLabel(Enum):
    case1 = 1
    """``lambda = 0``: theta = 0, or theta real with u = 1."""
    case2 = 2
    spectral = 3
    """No angle form: observables come from the metric directly."""

    def label(self) -> str:
        return CaseLabelNames[self]


CaseLabelNames = {
    CaseLabel.case1: "Case1",
    CaseLabel.case2: "Case2",
    CaseLabel.spectral: "Spectral",
}


@dataclass(frozen=True)
class CaseCoefficients:
    lam: complex
    r: float
    s: float
    case_label: CaseLabel

    @property
    def gap(self) -> float:
        """``r s - |lambda|**2``, equal to ``exp(2 Im(phi)) u``."""
        return self.r * self.s - abs(self.lam) ** 2


@dataclass(frozen=True)
class Case1Params:
    case_label: ClassVar[CaseLabel] = CaseLabel.case1
    re_a_prime: float
    b_prime: complex
    q_prime: float = 0.0


@dataclass(frozen=True)
class Case2Params:
    case_label: ClassVar[CaseLabel] = CaseLabel.case2
    a_prime: complex
    w: float
    q_prime: float = 0.0


@dataclass(frozen=True)
class Case2ReBParams:
    """Case 2 with ``Re(b')`` standing in for ``w``."""

    case_label: ClassVar[CaseLabel] = CaseLabel.case2
    a_prime: complex
    re_b_prime: float
    q_prime: float = 0.0


@dataclass(frozen=True)
class SpectralParams:
    """Hermitian ``X = [[x11, x12], [conj(x12), x22]]`` giving the observable ``q' I + eta**(-1) X``."""

    case_label: ClassVar[CaseLabel] = CaseLabel.spectral
    x11: float
    x22: float
    x12: complex
    q_prime: float = 0.0


ObservableFreeParams = Union[Case1Params, Case2Params, Case2ReBParams, SpectralParams]


@dataclass(frozen=True)
class CompatibleObservable:
    op: QuasiHermitianOp
    generated_from: ObservableFreeParams
    case_label: CaseLabel
    u_used: float


@dataclass(frozen=True)
class RealityConstraints:
    re_part: float
    im_part: float
    scale: float = 0.0
    """``|a'**2| + |b' c'|``; rounding in the sum is relative to this, not to the result."""

    def satisfied(self, tol: float) -> bool:
        bound = tol * max(1.0, self.scale, abs(self.re_part))
        return abs(self.im_part) <= bound and self.re_part >= -bound


@dataclass(frozen=True)
class DiscriminantReport:
    d: float
    """D from its defining ratio."""
    d_completed_square: float
    """D from the completed-square form; agrees with ``d``."""
    constraint_lhs: float
    """Left-hand side of ``Re(a'**2 + b' c') >= 0`` rewritten in ``w`` and ``a'``."""
    gap: float


@dataclass(frozen=True)
class IrreducibilityReport:
    delta: complex
    irreducible: bool
    threshold: float

    def __bool__(self) -> bool:
        return self.irreducible


class PairRoute(Enum):
    case1_unit = "case1-unit"
    case1_theta_zero = "case1-theta-zero"
    case2_linear = "case2-linear"
    kernel = "kernel"


@dataclass(frozen=True, eq=False)
class PairMetric:
    u: float
    metric: MetricOperator
    route: PairRoute
    w: Optional[float] = None


@dataclass(frozen=True, eq=False)
class Hermitization:
    rho: Mat2
    h: Mat2
