from enum import Enum


class QuasiHermitianError(ValueError):
    """Base class of every refusal raised by the numerical core.

    ``code`` is the machine-readable identifier the CLI reports in its ``{"error": code, "detail": message}`` object.
    """

    code: str = "quasi-hermitian-error"

    def __init__(self, message: str, code: str | None = None):
        super().__init__(message)
        self.message = message
        if code is not None:
            self.code = code


class NonFiniteInput(QuasiHermitianError):
    code = "non-finite"


class InvalidParameters(QuasiHermitianError):
    code = "invalid-parameters"


class NotPositiveDefinite(QuasiHermitianError):
    code = "not-positive-definite"


class Inconsistent(QuasiHermitianError):
    code = "inconsistent"


class NotQuasiHermitianReason(Enum):
    complex_trace = "complex-trace"
    complex_or_negative_discriminant = "complex-or-negative-discriminant"
    non_diagonalizable = "non-diagonalizable"


class NotQuasiHermitian(QuasiHermitianError):
    code = "not-quasi-hermitian"

    def __init__(self, reason: NotQuasiHermitianReason, message: str):
        super().__init__(message)
        self.reason = reason


class AngleUnrepresentable(QuasiHermitianError):
    """The operator is valid but has no (E, theta, phi) form with Re(theta) in [0, pi)."""

    code = "angle-unrepresentable"


class TriangularUnrepresentable(AngleUnrepresentable):
    code = "triangular-unrepresentable"


class ZeroNormalization(QuasiHermitianError):
    code = "zero-normalization"


class CaseMismatch(QuasiHermitianError):
    code = "case-mismatch"


class PostconditionFailed(QuasiHermitianError):
    code = "postcondition-failed"


class NoCompatibleMetric(QuasiHermitianError):
    code = "no-compatible-metric"


class DegeneratePair(QuasiHermitianError):
    code = "degenerate-pair"


class NotCompatible(QuasiHermitianError):
    code = "not-compatible"
