import cmath
import math
from dataclasses import dataclass

from ..errors import InvalidParameters
from .mixins import EntryFormMixin


@dataclass(frozen=True)
class QuasiHermitianOp(EntryFormMixin):
    """A validated operator ``q I + H0`` with ``H0 = [[a, b], [c, -a]]`` and ``a**2 + b c`` real and nonnegative.

    Build these through :func:`src.quasi.validate_quasi_hermitian` or :func:`src.quasi.from_entries`; the dataclass
    itself does not re-check the invariants.
    """

    q: float
    a: complex
    b: complex
    c: complex


@dataclass(frozen=True)
class AngleForm:
    """``H0 = E [[cos t, exp(-i p) sin t], [exp(i p) sin t, -cos t]]`` with complex angles t, p."""

    energy: float
    theta: complex
    phi: complex

    def __post_init__(self):
        if not math.isfinite(self.energy) or self.energy < 0:
            raise InvalidParameters(f"E must be finite and nonnegative, got {self.energy!r}")
        if not (cmath.isfinite(self.theta) and cmath.isfinite(self.phi)):
            raise InvalidParameters("theta and phi must be finite")
        if not 0 <= self.theta.real < math.pi:
            raise InvalidParameters(f"Re(theta) must lie in [0, pi), got {self.theta.real!r}")
        if not 0 <= self.phi.real < 2 * math.pi:
            raise InvalidParameters(f"Re(phi) must lie in [0, 2 pi), got {self.phi.real!r}")
        object.__setattr__(self, "theta", complex(self.theta))
        object.__setattr__(self, "phi", complex(self.phi))
