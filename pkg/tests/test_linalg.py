import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from src.errors import Inconsistent, NonFiniteInput, NotPositiveDefinite
from src.linalg import (
    IDENTITY,
    adjoint,
    as_mat2,
    commutator,
    commutator_det_expanded,
    det2,
    eigen2,
    inverse2,
    is_hermitian,
    pd_sqrt,
    solve_real_linear,
    trace2,
    traceless_part,
)
from src.models import RealLinearSystem
from src.oracle import intertwiner_rows

from .conftest import WORKED_H, WORKED_HP, WORKED_METRIC_U2

ENTRY = st.floats(min_value=-10, max_value=10, allow_nan=False, allow_infinity=False)


@st.composite
def complex_matrices(draw):
    parts = draw(arrays(np.float64, (2, 2, 2), elements=ENTRY))
    return parts[0] + 1j * parts[1]


def test_commutator_examples():
    m = np.array([[1, 2j], [3, 4]], dtype=np.complex128)
    assert np.allclose(commutator(IDENTITY, m), 0)
    upper = np.array([[0, 1], [0, 0]], dtype=np.complex128)
    assert np.allclose(commutator(np.diag([1, -1]).astype(complex), upper), [[0, 2], [0, 0]])


def test_worked_pair_commutator_determinant():
    # det([H0, H0']) = +128; the irreducibility quantity is its negative.
    assert det2(commutator(WORKED_H, WORKED_HP)) == pytest.approx(128)
    assert commutator_det_expanded(WORKED_H, WORKED_HP) == pytest.approx(128)


@settings(max_examples=200)
@given(complex_matrices(), complex_matrices())
def test_expanded_commutator_determinant_matches_direct(a, b):
    a0, b0 = traceless_part(a), traceless_part(b)
    direct = det2(commutator(a0, b0))
    scale = max(1.0, np.linalg.norm(a0) * np.linalg.norm(b0)) ** 2
    assert abs(commutator_det_expanded(a0, b0) - direct) <= 1e-10 * scale


def test_eigen2_examples():
    eig = eigen2(np.diag([1, -1]))
    assert sorted(v.real for v in eig.values) == [-1, 1]
    assert eig.diagonalizable

    jordan = eigen2([[0, 1], [0, 0]])
    assert jordan.values == (0, 0)
    assert not jordan.diagonalizable
    assert jordan.coincident

    worked = eigen2(WORKED_H)
    assert sorted(v.real for v in worked.values) == pytest.approx([-2, 2])
    assert worked.diagonalizable


def test_eigen2_scalar_matrix_is_diagonalizable():
    eig = eigen2(3 * IDENTITY)
    assert eig.coincident and eig.diagonalizable
    assert np.allclose(np.column_stack(eig.vectors), IDENTITY)


@settings(max_examples=200)
@given(complex_matrices())
def test_eigen2_reproduces_trace_determinant_and_vectors(m):
    eig = eigen2(m)
    first, second = eig.values
    scale = max(1.0, np.linalg.norm(m))
    assert abs(first + second - trace2(m)) <= 1e-10 * scale
    assert abs(first * second - det2(m)) <= 1e-9 * scale**2
    # eigenvectors of nearly coincident eigenvalues are ill-conditioned; the residual bound needs a gap
    if abs(first - second) >= 1e-4 * scale:
        assert eig.diagonalizable
        _assert_eigenpairs(m, eig, scale)


def _assert_eigenpairs(m, eig, scale):
    for value, vector in zip(eig.values, eig.vectors):
        assert np.linalg.norm(vector) == pytest.approx(1, rel=1e-12)
        assert np.linalg.norm(m @ vector - value * vector) <= 1e-10 * scale


def test_eigen2_residuals_over_many_matrices():
    rng = np.random.default_rng(29)
    for _ in range(10_000):
        m = rng.uniform(-10, 10, (2, 2)) + 1j * rng.uniform(-10, 10, (2, 2))
        eig = eigen2(m)
        scale = max(1.0, np.linalg.norm(m))
        if abs(eig.values[0] - eig.values[1]) >= 1e-4 * scale:
            _assert_eigenpairs(m, eig, scale)


@settings(max_examples=200)
@given(complex_matrices(), complex_matrices())
def test_adjoint_reverses_products(a, b):
    scale = max(1.0, np.linalg.norm(a) * np.linalg.norm(b))
    assert np.linalg.norm(adjoint(a @ b) - adjoint(b) @ adjoint(a)) <= 1e-12 * scale


@settings(max_examples=200)
@given(complex_matrices())
def test_commutator_with_itself_vanishes(a):
    assert np.linalg.norm(commutator(a, a)) <= 1e-12 * max(1.0, np.linalg.norm(a)) ** 2


def test_as_mat2_rejects_non_finite_and_wrong_shape():
    with pytest.raises(NonFiniteInput):
        as_mat2([[np.nan, 0], [0, 1]])
    with pytest.raises(ValueError):
        as_mat2([1, 2, 3])


def test_pd_sqrt_examples():
    assert np.allclose(pd_sqrt(IDENTITY), IDENTITY)
    assert np.allclose(pd_sqrt(np.diag([4, 0.25])), np.diag([2, 0.5]))
    root = pd_sqrt(WORKED_METRIC_U2)
    assert np.allclose(root @ root, WORKED_METRIC_U2, atol=1e-10)
    assert is_hermitian(root)
    assert np.all(np.linalg.eigvalsh(root) > 0)


@pytest.mark.parametrize(
    "m",
    [
        np.diag([1.0, -1.0]),
        np.array([[1, 2], [0, 1]]),
        -IDENTITY,
    ],
)
def test_pd_sqrt_rejects(m):
    with pytest.raises(NotPositiveDefinite):
        pd_sqrt(m)


def test_inverse2():
    m = np.array([[2, 1j], [0, 3]], dtype=np.complex128)
    assert np.allclose(inverse2(m) @ m, IDENTITY)
    with pytest.raises(np.linalg.LinAlgError):
        inverse2(np.zeros((2, 2)))


def test_adjoint_is_conjugate_transpose():
    m = np.array([[1, 2j], [3, 4 - 1j]])
    assert np.array_equal(adjoint(m), m.conj().T)


def test_solve_identity_system():
    solution = solve_real_linear(RealLinearSystem(np.eye(2), [3, 5], 2))
    assert solution.is_unique
    assert np.allclose(solution.solution, [3, 5])
    assert solution.kernel_basis == ()


def test_solve_homogeneous_kernel():
    solution = solve_real_linear(RealLinearSystem.homogeneous([[1, 1]]))
    assert solution.rank == 1
    assert solution.nullity == 1
    (vector,) = solution.kernel_basis
    assert vector[0] == pytest.approx(-vector[1])
    assert vector[0] != 0


def test_solve_underdetermined_particular_solution():
    solution = solve_real_linear(RealLinearSystem([[1, 2, 0], [0, 0, 1]], [4, 1], 3))
    assert not solution.is_unique
    assert np.allclose(np.array([[1, 2, 0], [0, 0, 1]]) @ solution.solution, [4, 1])
    (vector,) = solution.kernel_basis
    assert np.allclose(np.array([[1, 2, 0], [0, 0, 1]]) @ vector, 0)


def test_rank_threshold_follows_the_largest_pivot():
    # 1e-7 is small next to the largest entry but not next to the pivot 1 found before it
    solution = solve_real_linear(RealLinearSystem([[1, 1e4], [0, 1e-7]], [1e4, 1e-7], 2))
    assert solution.rank == 2
    assert solution.is_unique
    assert np.allclose(solution.solution, [0, 1])

    solution = solve_real_linear(RealLinearSystem.homogeneous([[1, 1e4], [0, 1e-11]]))
    assert solution.rank == 1
    assert solution.nullity == 1


def test_solve_inconsistent():
    with pytest.raises(Inconsistent):
        solve_real_linear(RealLinearSystem([[1, 1], [2, 2]], [1, 3], 2))


def test_linear_system_validates_shape():
    with pytest.raises(ValueError):
        RealLinearSystem([[1, 2]], [1, 2], 2)
    with pytest.raises(ValueError):
        RealLinearSystem([[1, 2]], [1], 3)


def test_joint_intertwiner_system_has_rank_three():
    rows = np.vstack([intertwiner_rows(WORKED_H), intertwiner_rows(WORKED_HP)])
    assert rows.shape == (16, 4)
    solution = solve_real_linear(RealLinearSystem.homogeneous(rows))
    assert solution.rank == 3
    assert solution.nullity == 1
