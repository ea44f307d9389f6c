import math

import numpy as np
import pytest

from src.models import AngleForm, MatrixDocument, QuasiHermitianOp
from src.quasi import from_angle_form, to_angle_form, validate_quasi_hermitian
from src.settings import TOLERANCE_ENV_VAR, Settings

# H0 = [[0, 1], [4, 0]] and the Case 2 observable generated from a' = i, w = 1 at u = 2.
WORKED_H = np.array([[0, 1], [4, 0]], dtype=np.complex128)
WORKED_HP = np.array([[1j, 4 + 1.5j], [16 - 6j, -1j]], dtype=np.complex128)
WORKED_METRIC_U1 = np.diag([1.0, 0.25]).astype(np.complex128)
WORKED_METRIC_U2 = np.array([[1.5, 0.25], [0.25, 0.375]], dtype=np.complex128)

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_Z = np.diag([1.0, -1.0]).astype(np.complex128)


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    monkeypatch.delenv(TOLERANCE_ENV_VAR, raising=False)
    Settings.reset_instance()
    yield
    Settings.reset_instance()


@pytest.fixture
def worked_h():
    return validate_quasi_hermitian(WORKED_H)


@pytest.fixture
def worked_hp():
    return validate_quasi_hermitian(WORKED_HP)


@pytest.fixture
def worked_angle(worked_h):
    return to_angle_form(worked_h)


def matrix_document(m, label=None) -> dict:
    return MatrixDocument(np.asarray(m, dtype=np.complex128), label).to_json_dict()


def random_operator(rng: np.random.Generator, real_theta: bool = False) -> QuasiHermitianOp:
    """A valid operator with an angle form, shifted by a random multiple of the identity."""
    af = AngleForm(
        energy=rng.uniform(0.5, 3),
        theta=complex(rng.uniform(0.2, math.pi - 0.2), 0.0 if real_theta else rng.uniform(-1, 1)),
        phi=complex(rng.uniform(0, 2 * math.pi), rng.uniform(-0.5, 0.5)),
    )
    return validate_quasi_hermitian(from_angle_form(af).matrix + rng.uniform(-2, 2) * np.eye(2))
