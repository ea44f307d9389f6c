"""The two-parameter family of metric operators that make a quasi-Hermitian operator pseudo-Hermitian."""
import cmath
import logging
from typing import Union

import numpy as np

from .errors import AngleUnrepresentable, ZeroNormalization
from .linalg import adjoint, as_vec2, eigen2, frobenius
from .models import (
    AngleForm,
    Mat2,
    MetricCoefficients,
    MetricOperator,
    MetricParams,
    PseudoHermiticityCheck,
    QuasiHermitianOp,
    Vec2,
)
from .quasi import to_angle_form
from .settings import get_tolerances

logger = logging.getLogger(__name__)

MetricLike = Union[MetricOperator, Mat2]


def metric_matrix(eta: MetricLike) -> Mat2:
    return eta.matrix if isinstance(eta, MetricOperator) else np.asarray(eta, dtype=np.complex128)


def metric_coefficients(theta: complex) -> MetricCoefficients:
    cos_half = cmath.cos(theta / 2)
    sin_half = cmath.sin(theta / 2)
    return MetricCoefficients(
        m_a=abs(cos_half) ** 2,
        m_b=abs(sin_half) ** 2,
        zeta=sin_half * cos_half.conjugate(),
    )


def adjoint_eigenvectors(af: AngleForm, n1: complex, n2: complex) -> tuple[Vec2, Vec2]:
    """Eigenvectors of ``H0^dagger`` for ``+E`` and ``-E``, scaled by the normalizations ``n1`` and ``n2``."""
    if n1 == 0 or n2 == 0:
        raise ZeroNormalization("both normalizations must be nonzero")
    half = af.theta.conjugate() / 2
    phase = cmath.exp(1j * af.phi.conjugate())
    first = n1 * np.array([cmath.cos(half), phase * cmath.sin(half)], dtype=np.complex128)
    second = n2 * np.array([cmath.sin(half), -phase * cmath.cos(half)], dtype=np.complex128)
    return first, second


def spectral_metric(first: Vec2, second: Vec2) -> Mat2:
    """``|first><first| + |second><second|``."""
    return np.outer(first, first.conj()) + np.outer(second, second.conj())


def build_metric(af: AngleForm, params: MetricParams) -> MetricOperator:
    coeffs = metric_coefficients(af.theta)
    m_a, m_b, zeta = coeffs.m_a, coeffs.m_b, coeffs.zeta
    u, k = params.u, params.k
    phi = af.phi
    off_diagonal = cmath.exp(-1j * phi) * (u * zeta - zeta.conjugate())
    matrix = k * np.array(
        [
            [m_a * u + m_b, off_diagonal],
            [off_diagonal.conjugate(), np.exp(2 * phi.imag) * (m_a + m_b * u)],
        ],
        dtype=np.complex128,
    )
    return MetricOperator(matrix=matrix, params=params, coeffs=coeffs, phi=phi)


def _signed_adjoint_eigenvectors(op: QuasiHermitianOp) -> tuple[Vec2, Vec2]:
    """Unit eigenvectors of ``H0^dagger`` for ``+E`` and ``-E``, from the eigen-decomposition."""
    eig = eigen2(adjoint(op.traceless))
    first, second = eig.vectors
    if eig.values[0].real < eig.values[1].real:
        first, second = second, first
    return first, second


def _signed_right_eigenvectors(op: QuasiHermitianOp) -> tuple[Vec2, Vec2]:
    eig = eigen2(op.traceless)
    first, second = eig.vectors
    if eig.values[0].real < eig.values[1].real:
        first, second = second, first
    return first, second


def metric_family(op: QuasiHermitianOp, params: MetricParams) -> MetricOperator:
    """Metric of any valid operator for the given ``(k, u)``.

    Operators with an angle form go through :func:`build_metric`. Triangular operators and those with
    ``Re(theta) = pi`` use ``k (u |v+><v+| + |v-><v-|)`` with ``v+-`` the unit eigenvectors of ``H0^dagger``.
    """
    try:
        return build_metric(to_angle_form(op), params)
    except AngleUnrepresentable as e:
        logger.debug("No angle form (%s); using the adjoint eigenvectors", e.code)
    first, second = _signed_adjoint_eigenvectors(op)
    matrix = params.k * spectral_metric(np.sqrt(params.u) * first, second)
    return MetricOperator(matrix=0.5 * (matrix + adjoint(matrix)), params=params)


def spectral_weights(op: QuasiHermitianOp, eta: MetricLike, af: AngleForm | None = None) -> tuple[float, float]:
    """Weights ``(w+, w-)`` with ``eta = w+ |p+><p+| + w- |p-><p-|``.

    ``p+-`` are the angle-form adjoint eigenvectors with unit normalizations when ``af`` is given, and unit-norm
    eigenvectors of ``H0^dagger`` otherwise. Each weight is read off with the matching right eigenvector ``r`` of
    ``H0``, which is orthogonal to the other adjoint eigenvector: ``w = <r|eta|r> / |<p|r>|**2``.
    """
    matrix = metric_matrix(eta)
    if af is not None:
        adjoint_vectors = adjoint_eigenvectors(af, 1, 1)
    else:
        adjoint_vectors = _signed_adjoint_eigenvectors(op)
    weights = []
    for p, r in zip(adjoint_vectors, _signed_right_eigenvectors(op)):
        weights.append((np.vdot(r, matrix @ r) / abs(np.vdot(p, r)) ** 2).real)
    return weights[0], weights[1]


def params_of(op: QuasiHermitianOp, eta: MetricLike, af: AngleForm | None = None) -> MetricParams:
    """The ``(k, u)`` that reproduce ``eta`` within :func:`metric_family` of ``op`` (``E > 0``)."""
    if af is None:
        try:
            af = to_angle_form(op)
        except AngleUnrepresentable:
            pass
    plus, minus = spectral_weights(op, eta, af)
    return MetricParams(k=minus, u=plus / minus)


def inner_product_plus(eta: MetricLike, psi, chi) -> complex:
    """``<psi|eta chi>``, conjugate-linear in ``psi``."""
    return complex(np.vdot(as_vec2(psi), metric_matrix(eta) @ as_vec2(chi)))


def norm_plus(eta: MetricLike, psi) -> float:
    return float(np.sqrt(max(inner_product_plus(eta, psi, psi).real, 0.0)))


def check_pseudo_hermitian(o: Mat2, eta: MetricLike, tol: float | None = None) -> PseudoHermiticityCheck:
    tol = get_tolerances().accept if tol is None else tol
    o = np.asarray(o, dtype=np.complex128)
    matrix = metric_matrix(eta)
    residual = frobenius(adjoint(o) @ matrix - matrix @ o)
    threshold = tol * frobenius(matrix) * frobenius(o)
    return PseudoHermiticityCheck(holds=residual <= threshold, residual=residual, threshold=threshold)
