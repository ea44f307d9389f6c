"""Validation of quasi-Hermitian 2x2 operators and the (E, theta, phi) parametrization of their traceless part."""
import cmath
import logging
import math

import numpy as np

from .errors import AngleUnrepresentable, NotQuasiHermitian, NotQuasiHermitianReason, TriangularUnrepresentable
from .linalg import as_mat2, eigen2, frobenius, scaled, trace2
from .models import AngleForm, Mat2, QuasiHermitianOp
from .settings import get_tolerances

logger = logging.getLogger(__name__)

TWO_PI = 2 * math.pi


def _algebraic_verdict(
    q: complex, a: complex, b: complex, c: complex, scale: float, tol: float
) -> NotQuasiHermitianReason | None:
    if abs(q.imag) > scaled(tol, abs(q)):
        return NotQuasiHermitianReason.complex_trace
    disc = a * a + b * c
    if abs(disc.imag) > scaled(tol, abs(disc)) or disc.real < -tol:
        return NotQuasiHermitianReason.complex_or_negative_discriminant
    # E = 0 within the eigenvalue-coincidence threshold: only the zero traceless part is diagonalizable.
    if 2 * math.sqrt(abs(disc)) <= scaled(tol, scale):
        if math.sqrt(2 * abs(a) ** 2 + abs(b) ** 2 + abs(c) ** 2) > scaled(tol, scale):
            return NotQuasiHermitianReason.non_diagonalizable
    return None


def validate_quasi_hermitian(m: Mat2) -> QuasiHermitianOp:
    """Split ``m = q I + H0`` and accept it iff it is diagonalizable with a real spectrum.

    The algebraic route (real trace, ``a**2 + b c`` in ``[0, inf)``, no nilpotent part) decides; the eigen-decomposition
    route is evaluated alongside and any disagreement between the two is logged.
    """
    m = as_mat2(m)
    tol = get_tolerances().accept
    scale = frobenius(m)
    q = 0.5 * trace2(m)
    a = complex(0.5 * (m[0, 0] - m[1, 1]))
    b = complex(m[0, 1])
    c = complex(m[1, 0])
    reason = _algebraic_verdict(q, a, b, c, scale, tol)

    eig = eigen2(m)
    spectral_ok = eig.diagonalizable and eig.has_real_spectrum(tol, scale)
    if spectral_ok != (reason is None):
        logger.warning(
            "Acceptance routes disagree for %s: algebraic=%s, spectral=%s", m.tolist(), reason, spectral_ok
        )

    if reason is not None:
        logger.debug("Rejected %s: %s", m.tolist(), reason.value)
        raise NotQuasiHermitian(reason, _REASON_MESSAGES[reason])
    return QuasiHermitianOp(q=q.real, a=a, b=b, c=c)


_REASON_MESSAGES = {
    NotQuasiHermitianReason.complex_trace: "the trace is not real",
    NotQuasiHermitianReason.complex_or_negative_discriminant: "a**2 + b c is not a nonnegative real number",
    NotQuasiHermitianReason.non_diagonalizable: "the operator has a nonzero nilpotent part and is not diagonalizable",
}


def from_entries(q: float, a: complex, b: complex, c: complex) -> QuasiHermitianOp:
    matrix = np.array([[q + a, b], [c, q - a]], dtype=np.complex128)
    return validate_quasi_hermitian(matrix)


def to_angle_form(op: QuasiHermitianOp) -> AngleForm:
    """Angles of the traceless part on the branch ``Re(theta)`` in ``[0, pi)``, ``Re(phi)`` in ``[0, 2 pi)``.

    ``theta`` is the principal complex arccos of ``a / E``; ``exp(i phi)`` is read off ``c`` (or ``exp(-i phi)`` off
    ``b``, whichever is larger) so that both off-diagonal entries are reproduced, not only their product. ``E = 0``
    maps to ``theta = phi = 0``, and ``phi = 0`` whenever ``sin(theta) = 0``.
    """
    tol = get_tolerances().accept
    energy = op.energy
    scale = max(abs(op.a), abs(op.b), abs(op.c))
    if energy <= scaled(tol, scale):
        return AngleForm(energy=0.0, theta=0j, phi=0j)
    if op.is_triangular(tol):
        raise TriangularUnrepresentable(
            "exactly one off-diagonal entry vanishes; the angle form would need exp(-+i phi) sin(theta) = 0"
        )

    theta = complex(np.arccos(complex(op.a / energy)))
    theta = complex(max(theta.real, 0.0), theta.imag)
    if theta.real >= math.pi - tol:
        raise AngleUnrepresentable("a / E is real and at most -1, which puts Re(theta) at pi")
    sin_theta = cmath.sin(theta)
    if sin_theta == 0 or max(abs(op.b), abs(op.c)) <= tol * scale:
        return AngleForm(energy=energy, theta=theta, phi=0j)

    if abs(op.c) >= abs(op.b):
        phi = -1j * cmath.log(op.c / (energy * sin_theta))
    else:
        phi = 1j * cmath.log(op.b / (energy * sin_theta))
    re_phi = math.fmod(phi.real, TWO_PI)
    if re_phi < 0:
        re_phi += TWO_PI
    if re_phi >= TWO_PI:
        re_phi = 0.0
    return AngleForm(energy=energy, theta=theta, phi=complex(re_phi, phi.imag))


def from_angle_form(af: AngleForm) -> QuasiHermitianOp:
    sin_theta = cmath.sin(af.theta)
    return QuasiHermitianOp(
        q=0.0,
        a=af.energy * cmath.cos(af.theta),
        b=af.energy * cmath.exp(-1j * af.phi) * sin_theta,
        c=af.energy * cmath.exp(1j * af.phi) * sin_theta,
    )
