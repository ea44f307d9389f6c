from dataclasses import dataclass, field
from typing import Optional

import numpy as np
import numpy.typing as npt

Mat2 = npt.NDArray[np.complex128]
Vec2 = npt.NDArray[np.complex128]
RealVector = npt.NDArray[np.float64]


@dataclass(frozen=True, eq=False)
class Eigen2:
    values: tuple[complex, complex]
    vectors: tuple[Vec2, Vec2]
    """Unit-norm eigenvectors, in the order of ``values``. For a Jordan block both entries are the same vector."""
    diagonalizable: bool
    coincident: bool

    def has_real_spectrum(self, tol: float, scale: float = 1.0) -> bool:
        return all(abs(value.imag) <= tol * max(1.0, scale) for value in self.values)


@dataclass(frozen=True, eq=False)
class RealLinearSystem:
    rows: npt.NDArray[np.float64]
    rhs: RealVector
    n_unknowns: int

    def __post_init__(self):
        rows = np.atleast_2d(np.asarray(self.rows, dtype=np.float64))
        rhs = np.asarray(self.rhs, dtype=np.float64).reshape(-1)
        if self.n_unknowns <= 0:
            raise ValueError("n_unknowns must be positive")
        if rows.shape[1] != self.n_unknowns:
            raise ValueError(f"every row must have {self.n_unknowns} coefficients, got {rows.shape[1]}")
        if rows.shape[0] != rhs.shape[0]:
            raise ValueError(f"{rows.shape[0]} rows but {rhs.shape[0]} right-hand sides")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "rhs", rhs)

    @classmethod
    def homogeneous(cls, rows) -> "RealLinearSystem":
        rows = np.atleast_2d(np.asarray(rows, dtype=np.float64))
        return cls(rows, np.zeros(rows.shape[0]), rows.shape[1])

    @property
    def is_homogeneous(self) -> bool:
        return not np.any(self.rhs)


@dataclass(frozen=True, eq=False)
class LinearSolution:
    rank: int
    n_unknowns: int
    pivot_columns: tuple[int, ...]
    solution: Optional[RealVector] = None
    """Particular solution (free variables set to zero); ``None`` for homogeneous systems."""
    kernel_basis: tuple[RealVector, ...] = field(default_factory=tuple)

    @property
    def is_unique(self) -> bool:
        return self.rank == self.n_unknowns

    @property
    def nullity(self) -> int:
        return self.n_unknowns - self.rank
