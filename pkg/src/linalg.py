"""Closed-form complex 2x2 linear algebra.

Every matrix is a ``(2, 2)`` ``complex128`` numpy array and every function returns a fresh array, so values can be
shared between threads freely. Norms are Frobenius norms throughout.
"""
import logging

import numpy as np

from .errors import Inconsistent, NonFiniteInput, NotPositiveDefinite
from .models.linalg import Eigen2, LinearSolution, Mat2, RealLinearSystem, Vec2
from .settings import get_tolerances

logger = logging.getLogger(__name__)

IDENTITY: Mat2 = np.eye(2, dtype=np.complex128)
IDENTITY.setflags(write=False)

DEGENERACY_TOLERANCE = 1e-9


def as_mat2(value) -> Mat2:
    """Coerce ``value`` to a finite 2x2 complex matrix."""
    matrix = np.array(value, dtype=np.complex128)
    if matrix.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {matrix.shape}")
    if not np.all(np.isfinite(matrix)):
        raise NonFiniteInput("matrix entries must be finite")
    return matrix


def as_vec2(value) -> Vec2:
    vector = np.array(value, dtype=np.complex128).reshape(-1)
    if vector.shape != (2,):
        raise ValueError(f"expected a 2-vector, got shape {vector.shape}")
    if not np.all(np.isfinite(vector)):
        raise NonFiniteInput("vector entries must be finite")
    return vector


def scaled(tol: float, *scales: float) -> float:
    """Mixed absolute/relative threshold ``tol * max(1, *scales)``."""
    return tol * max(1.0, *scales)


def adjoint(m: Mat2) -> Mat2:
    return np.conj(m).T.copy()


def trace2(m: Mat2) -> complex:
    return complex(m[0, 0] + m[1, 1])


def det2(m: Mat2) -> complex:
    return complex(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])


def frobenius(m) -> float:
    return float(np.linalg.norm(m))


def inverse2(m: Mat2) -> Mat2:
    det = det2(m)
    if det == 0:
        raise np.linalg.LinAlgError("singular 2x2 matrix")
    return np.array([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]], dtype=np.complex128) / det


def traceless_part(m: Mat2) -> Mat2:
    return m - 0.5 * trace2(m) * IDENTITY


def is_hermitian(m: Mat2, tol: float | None = None) -> bool:
    tol = get_tolerances().hermitian_abs if tol is None else tol
    return frobenius(m - adjoint(m)) <= scaled(tol, frobenius(m))


def is_scalar(m: Mat2, tol: float = DEGENERACY_TOLERANCE) -> bool:
    return frobenius(traceless_part(m)) <= scaled(tol, frobenius(m))


def commutator(a: Mat2, b: Mat2) -> Mat2:
    return a @ b - b @ a


def commutator_det_expanded(a0: Mat2, b0: Mat2) -> complex:
    """det([A0, B0]) of two traceless matrices, expanded in their entries.

    With A0 = [[a, b], [c, -a]] and B0 = [[a', b'], [c', -a']] this is
    ``4 (a b' - b a')(a c' - c a') - (b c' - c b')**2``.
    """
    a, b, c = a0[0, 0], a0[0, 1], a0[1, 0]
    ap, bp, cp = b0[0, 0], b0[0, 1], b0[1, 0]
    return complex(4 * (a * bp - b * ap) * (a * cp - c * ap) - (b * cp - c * bp) ** 2)


def _null_vector(m: Mat2, value: complex) -> Vec2:
    """Unit vector spanning the kernel of ``m - value I``, read off its better-conditioned row."""
    shifted = m - value * IDENTITY
    from_first_row = np.array([shifted[0, 1], -shifted[0, 0]], dtype=np.complex128)
    from_second_row = np.array([-shifted[1, 1], shifted[1, 0]], dtype=np.complex128)
    candidate = from_first_row if np.linalg.norm(from_first_row) >= np.linalg.norm(from_second_row) else from_second_row
    norm = np.linalg.norm(candidate)
    if norm == 0:
        return np.array([1, 0], dtype=np.complex128)
    return candidate / norm


def eigen2(m: Mat2) -> Eigen2:
    """Eigen-decomposition from the trace and determinant.

    The larger-magnitude root is taken from the quadratic formula and the other one from ``det / root`` so neither
    loses digits to cancellation.
    """
    m = as_mat2(m)
    half_trace = 0.5 * trace2(m)
    det = det2(m)
    root = np.sqrt(complex(half_trace * half_trace - det))
    first = half_trace + root if abs(half_trace + root) >= abs(half_trace - root) else half_trace - root
    second = det / first if first != 0 else half_trace - root
    scale = frobenius(m)
    coincident = abs(first - second) <= scaled(DEGENERACY_TOLERANCE, scale)
    scalar = is_scalar(m)
    if scalar:
        vectors = (np.array([1, 0], dtype=np.complex128), np.array([0, 1], dtype=np.complex128))
    elif coincident:
        vector = _null_vector(m, 0.5 * (first + second))
        vectors = (vector, vector.copy())
    else:
        vectors = (_null_vector(m, first), _null_vector(m, second))
    diagonalizable = scalar or not coincident
    if not diagonalizable:
        logger.debug("Jordan block detected: eigenvalue %s is defective", first)
    return Eigen2(
        values=(complex(first), complex(second)),
        vectors=vectors,
        diagonalizable=diagonalizable,
        coincident=coincident,
    )


def pd_sqrt(m: Mat2) -> Mat2:
    """Unique Hermitian positive-definite square root, ``(M + sqrt(det M) I) / sqrt(tr M + 2 sqrt(det M))``."""
    m = as_mat2(m)
    tolerances = get_tolerances()
    if frobenius(m - adjoint(m)) > scaled(tolerances.hermitian_abs, frobenius(m)):
        raise NotPositiveDefinite("matrix is not Hermitian")
    trace = trace2(m).real
    det = det2(m).real
    if trace <= 0 or det <= 0:
        raise NotPositiveDefinite(f"matrix is not positive-definite (trace={trace!r}, det={det!r})")
    root_det = np.sqrt(det)
    root = (m + root_det * IDENTITY) / np.sqrt(trace + 2 * root_det)
    return 0.5 * (root + adjoint(root))


def solve_real_linear(system: RealLinearSystem, pivot_tol: float | None = None) -> LinearSolution:
    """Gaussian elimination with partial pivoting down to reduced row-echelon form.

    A column is free when its best remaining pivot is at most ``pivot_tol`` times the largest pivot accepted so far
    (the largest entry of the coefficient matrix before the first one). Homogeneous systems return a kernel basis;
    inhomogeneous ones a particular solution with every free variable set to zero, plus the kernel basis when the
    solution is not unique.
    """
    pivot_tol = get_tolerances().pivot if pivot_tol is None else pivot_tol
    rows = system.rows.copy()
    rhs = system.rhs.copy()
    n_rows, n_cols = rows.shape
    largest = float(np.max(np.abs(rows))) if rows.size else 0.0
    largest_pivot = 0.0
    pivot_columns: list[int] = []
    row = 0
    for col in range(n_cols):
        if row >= n_rows:
            break
        best = row + int(np.argmax(np.abs(rows[row:, col])))
        candidate = abs(rows[best, col])
        if largest == 0 or candidate <= pivot_tol * (largest_pivot or largest):
            continue
        largest_pivot = max(largest_pivot, float(candidate))
        if best != row:
            rows[[row, best]] = rows[[best, row]]
            rhs[[row, best]] = rhs[[best, row]]
        pivot = rows[row, col]
        rows[row] /= pivot
        rhs[row] /= pivot
        for other in range(n_rows):
            if other != row and rows[other, col] != 0:
                factor = rows[other, col]
                rows[other] -= factor * rows[row]
                rhs[other] -= factor * rhs[row]
        pivot_columns.append(col)
        row += 1
    rank = len(pivot_columns)
    logger.debug("Row-reduced %dx%d system: rank %d, pivots %s", n_rows, n_cols, rank, pivot_columns)

    if not system.is_homogeneous and rank < n_rows:
        residual = float(np.max(np.abs(rhs[rank:])))
        if residual > pivot_tol * max(1.0, float(np.max(np.abs(system.rhs)))):
            raise Inconsistent(f"system has no solution (leftover right-hand side {residual:.3g})")

    free_columns = [col for col in range(n_cols) if col not in pivot_columns]
    kernel = []
    for free in free_columns:
        vector = np.zeros(n_cols)
        vector[free] = 1.0
        for index, col in enumerate(pivot_columns):
            vector[col] = -rows[index, free]
        kernel.append(vector)

    solution = None
    if not system.is_homogeneous:
        solution = np.zeros(n_cols)
        for index, col in enumerate(pivot_columns):
            solution[col] = rhs[index]
    return LinearSolution(
        rank=rank,
        n_unknowns=n_cols,
        pivot_columns=tuple(pivot_columns),
        solution=solution,
        kernel_basis=tuple(kernel),
    )
