from dataclasses import dataclass
from typing import Optional

from ..errors import InvalidParameters
from .linalg import Mat2


@dataclass(frozen=True)
class MetricCoefficients:
    m_a: float
    """``|cos(theta / 2)|**2``"""
    m_b: float
    """``|sin(theta / 2)|**2``"""
    zeta: complex
    """``sin(theta / 2) cos(conj(theta) / 2)``"""


@dataclass(frozen=True)
class MetricParams:
    k: float = 1.0
    """Overall scale, the squared modulus of the second normalization."""
    u: float = 1.0
    """Squared modulus of the ratio of the two normalizations."""

    def __post_init__(self):
        if not (self.k > 0 and self.u > 0):
            raise InvalidParameters(f"k and u must be positive, got k={self.k!r}, u={self.u!r}")
        if self.k == float("inf") or self.u == float("inf"):
            raise InvalidParameters("k and u must be finite")


@dataclass(frozen=True, eq=False)
class MetricOperator:
    matrix: Mat2
    params: MetricParams
    coeffs: Optional[MetricCoefficients] = None
    """``None`` when the metric came from the spectral path instead of the angle form."""
    phi: Optional[complex] = None

    def __post_init__(self):
        self.matrix.setflags(write=False)


@dataclass(frozen=True)
class PseudoHermiticityCheck:
    holds: bool
    residual: float
    """``||O^dagger eta - eta O||`` (Frobenius)."""
    threshold: float

    def __bool__(self) -> bool:
        return self.holds
