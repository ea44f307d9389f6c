"""Brute-force verification: Hermitian solutions of ``O^dagger eta = eta O`` found by row reduction alone.

Nothing here uses the angle form or the closed-form metric; :func:`cross_validate` compares the two routes.
"""
import logging
from typing import Optional, Sequence

import numpy as np

from . import observables
from .errors import DegeneratePair, NoCompatibleMetric
from .linalg import adjoint, as_mat2, det2, frobenius, solve_real_linear, trace2
from .metric import metric_family, params_of
from .models import (
    CheckResult,
    CrossValidationReport,
    IntertwinerSolution,
    Mat2,
    MetricParams,
    QuasiHermitianOp,
    RealLinearSystem,
)
from .settings import get_tolerances

logger = logging.getLogger(__name__)

# Vectorization order of a Hermitian eta: (eta_11, eta_22, Re eta_12, Im eta_12).
HERMITIAN_BASIS: tuple[Mat2, ...] = (
    np.array([[1, 0], [0, 0]], dtype=np.complex128),
    np.array([[0, 0], [0, 1]], dtype=np.complex128),
    np.array([[0, 1], [1, 0]], dtype=np.complex128),
    np.array([[0, 1j], [-1j, 0]], dtype=np.complex128),
)

FAMILY_SAMPLES = (0.25, 1.0, 3.0)


def hermitian_from_vector(x) -> Mat2:
    return sum(coefficient * basis for coefficient, basis in zip(x, HERMITIAN_BASIS))


def hermitian_to_vector(m: Mat2) -> np.ndarray:
    return np.array([m[0, 0].real, m[1, 1].real, m[0, 1].real, m[0, 1].imag])


def intertwiner_rows(o: Mat2) -> np.ndarray:
    """The 8x4 real system whose kernel is the Hermitian solutions of ``O^dagger eta - eta O = 0``."""
    o = as_mat2(o)
    columns = []
    for basis in HERMITIAN_BASIS:
        image = adjoint(o) @ basis - basis @ o
        columns.append(np.concatenate([image.real.reshape(-1), image.imag.reshape(-1)]))
    return np.column_stack(columns)


def _pd_search(basis: Sequence[Mat2]) -> Optional[Mat2]:
    """A positive-definite element of ``span(basis)``, or ``None``.

    ``det(sum x_j B_j)`` is a real quadratic form in ``x``; a Hermitian 2x2 matrix with positive determinant is
    definite, so the span holds a positive-definite element iff that form takes a positive value. Its top eigenvector
    is the most deeply interior direction; the sign is fixed by the trace.
    """
    if not basis:
        return None
    n = len(basis)
    form = np.zeros((n, n))
    dets = [det2(b).real for b in basis]
    for j in range(n):
        form[j, j] = dets[j]
        for k in range(j + 1, n):
            form[j, k] = form[k, j] = 0.5 * (det2(basis[j] + basis[k]).real - dets[j] - dets[k])
    values, vectors = np.linalg.eigh(form)
    scale = max(frobenius(b) for b in basis) ** 2
    if values[-1] <= get_tolerances().internal * scale:
        return None
    candidate = sum(x * b for x, b in zip(vectors[:, -1], basis))
    if trace2(candidate).real < 0:
        candidate = -candidate
    candidate = 0.5 * (candidate + adjoint(candidate))
    return candidate / frobenius(candidate)


def intertwiner_space(ops: Sequence[Mat2]) -> IntertwinerSolution:
    if not 1 <= len(ops) <= 2:
        raise ValueError(f"expected one or two operators, got {len(ops)}")
    rows = np.vstack([intertwiner_rows(o) for o in ops])
    solution = solve_real_linear(RealLinearSystem.homogeneous(rows))
    kernel = tuple(hermitian_from_vector(x / np.linalg.norm(x)) for x in solution.kernel_basis)
    logger.debug("Intertwiner kernel of %d operator(s): dimension %d", len(ops), len(kernel))
    return IntertwinerSolution(kernel_basis=kernel, rank=solution.rank, pd_witness=_pd_search(kernel))


def pd_representative(solution: IntertwinerSolution) -> Optional[Mat2]:
    return _pd_search(solution.kernel_basis)


def distance_to_span(m: Mat2, basis: Sequence[Mat2]) -> float:
    """Relative distance of the Hermitian ``m`` from ``span(basis)``."""
    target = hermitian_to_vector(m)
    if not basis:
        return 1.0
    columns = np.column_stack([hermitian_to_vector(b) for b in basis])
    coefficients, *_ = np.linalg.lstsq(columns, target, rcond=None)
    return float(np.linalg.norm(columns @ coefficients - target) / np.linalg.norm(target))


def _normalized(m: Mat2) -> Mat2:
    return m / frobenius(m)


def _check(name: str, deviation: float, detail: str = "") -> CheckResult:
    return CheckResult(
        name=name,
        deviation=deviation,
        passed=deviation <= get_tolerances().cross_validation,
        detail=detail,
    )


def _validate_single(h: QuasiHermitianOp, solution: IntertwinerSolution) -> list[CheckResult]:
    checks = []
    for u in FAMILY_SAMPLES:
        metric = metric_family(h, MetricParams(1.0, u))
        checks.append(_check(f"family-in-kernel(u={u})", distance_to_span(metric.matrix, solution.kernel_basis)))
    if solution.pd_witness is None:
        checks.append(CheckResult("kernel-has-metric", 1.0, False, "no positive-definite kernel element"))
    elif h.energy > 0:
        params = params_of(h, solution.pd_witness)
        rebuilt = metric_family(h, MetricParams(1.0, params.u)).matrix
        deviation = frobenius(_normalized(rebuilt) - solution.pd_witness)
        checks.append(_check("kernel-metric-in-family", deviation, f"u={params.u!r}"))
    return checks


def _validate_pair(h: QuasiHermitianOp, hp: QuasiHermitianOp, solution: IntertwinerSolution) -> list[CheckResult]:
    try:
        result = observables.metric_from_pair(h, hp)
    except DegeneratePair as e:
        # a reducible pair either leaves the ray free or shares no positive-definite metric
        justified = solution.dimension != 1 or solution.pd_witness is None
        return [CheckResult("refusal-justified", 0.0 if justified else 1.0, justified, e.message)]
    except NoCompatibleMetric as e:
        justified = solution.pd_witness is None or solution.dimension != 1
        return [CheckResult("refusal-justified", 0.0 if justified else 1.0, justified, e.message)]
    if solution.dimension != 1 or solution.pd_witness is None:
        return [CheckResult("unique-ray", 1.0, False, f"kernel dimension {solution.dimension}")]
    deviation = frobenius(_normalized(result.metric.matrix) - solution.pd_witness)
    return [_check("unique-ray", deviation, f"u={result.u!r}")]


def cross_validate(h: QuasiHermitianOp, hp: QuasiHermitianOp | None = None) -> CrossValidationReport:
    """Compare the closed-form metrics of ``h`` (or of the pair) with the row-reduced intertwiner kernel."""
    if hp is None:
        solution = intertwiner_space([h.matrix])
        expected = 2 if h.energy > 0 else 4
        checks = _validate_single(h, solution)
    else:
        solution = intertwiner_space([h.matrix, hp.matrix])
        irreducible = bool(observables.irreducibility_test(h, hp))
        expected = 1 if irreducible and solution.pd_witness is not None else None
        checks = _validate_pair(h, hp, solution)
    if expected is not None:
        matches = solution.dimension == expected
        checks.append(
            CheckResult(
                "kernel-dimension",
                0.0 if matches else 1.0,
                matches,
                f"expected {expected}, got {solution.dimension}",
            )
        )
    return CrossValidationReport(
        kernel_dimension=solution.dimension,
        expected_dimension=expected,
        checks=tuple(checks),
    )
