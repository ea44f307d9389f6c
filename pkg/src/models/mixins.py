import cmath

import numpy as np

from .linalg import Mat2


class EntryFormMixin:
    """Views shared by operators stored as ``q I + [[a, b], [c, -a]]``."""

    q: float
    a: complex
    b: complex
    c: complex

    @property
    def traceless(self) -> Mat2:
        return np.array([[self.a, self.b], [self.c, -self.a]], dtype=np.complex128)

    @property
    def matrix(self) -> Mat2:
        return self.traceless + self.q * np.eye(2, dtype=np.complex128)

    @property
    def discriminant(self) -> complex:
        """``a**2 + b c``, i.e. ``-det`` of the traceless part."""
        return complex(self.a * self.a + self.b * self.c)

    @property
    def energy(self) -> float:
        """Half the level splitting, E = sqrt(a**2 + b c) on the real nonnegative branch."""
        return cmath.sqrt(max(self.discriminant.real, 0.0)).real

    @property
    def eigenvalues(self) -> tuple[float, float]:
        return self.q + self.energy, self.q - self.energy

    def is_triangular(self, tol: float) -> bool:
        """Exactly one off-diagonal entry vanishes while ``a`` does not."""
        scale = max(1.0, abs(self.a), abs(self.b), abs(self.c))
        b_zero = abs(self.b) <= tol * scale
        c_zero = abs(self.c) <= tol * scale
        return b_zero != c_zero and abs(self.a) > tol * scale
