import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from src.errors import CaseMismatch, DegeneratePair, InvalidParameters, NoCompatibleMetric, NotCompatible
from src.linalg import adjoint, eigen2, is_hermitian
from src.metric import build_metric, check_pseudo_hermitian, metric_family
from src.models import (
    AngleForm,
    Case1Params,
    Case2Params,
    Case2ReBParams,
    CaseLabel,
    MetricParams,
    PairRoute,
    QuasiHermitianOp,
    SpectralParams,
)
from src.observables import (
    case_coefficients,
    commutator_determinant,
    construct_compatible,
    construct_from_metric,
    discriminant_d,
    free_params_of,
    hermitize,
    irreducibility_test,
    metric_from_pair,
    reality_constraints,
    sample_compatible,
    shares_eigenvector,
)
from src.quasi import validate_quasi_hermitian

from .conftest import SIGMA_X, SIGMA_Z, WORKED_H, WORKED_HP, WORKED_METRIC_U1, WORKED_METRIC_U2, random_operator

HALF_PI = complex(math.pi / 2)

angles = st.builds(
    AngleForm,
    energy=st.floats(min_value=0.1, max_value=10),
    theta=st.builds(complex, st.floats(min_value=0.05, max_value=3.09), st.floats(min_value=-2, max_value=2)),
    phi=st.builds(complex, st.floats(min_value=0, max_value=6.28), st.floats(min_value=-1, max_value=1)),
)
weights = st.floats(min_value=0.05, max_value=10)
free = st.floats(min_value=-5, max_value=5)


def test_case_coefficients_examples(worked_angle):
    assert case_coefficients(AngleForm(1, 0j, complex(2)), 3).case_label is CaseLabel.case1
    assert case_coefficients(AngleForm(1, complex(math.pi / 3), 0j), 1).case_label is CaseLabel.case1

    cc = case_coefficients(worked_angle, 2)
    assert cc.lam == pytest.approx(0.25)
    assert cc.r == pytest.approx(3 / 8)
    assert cc.s == pytest.approx(3 / 2)
    assert cc.case_label is CaseLabel.case2
    assert cc.case_label.label() == "Case2"


def test_case_coefficients_rejects_non_positive_u(worked_angle):
    with pytest.raises(InvalidParameters):
        case_coefficients(worked_angle, 0)


def test_construct_case1_hermitian():
    observable = construct_compatible(AngleForm(1, HALF_PI, 0j), 1, Case1Params(re_a_prime=1, b_prime=1j))
    assert observable.op.c == pytest.approx(-1j)
    assert np.allclose(observable.op.traceless, [[1, 1j], [-1j, -1]])
    assert is_hermitian(observable.op.matrix)


def test_construct_case1_theta_zero():
    observable = construct_compatible(AngleForm(1, 0j, 0j), 2, Case1Params(re_a_prime=0, b_prime=1))
    assert observable.op.c == pytest.approx(2)
    assert check_pseudo_hermitian(observable.op.matrix, np.diag([2, 1]))


def test_construct_worked_case2(worked_angle):
    observable = construct_compatible(worked_angle, 2, Case2Params(a_prime=1j, w=1))
    assert observable.op.b == pytest.approx(4 + 1.5j, rel=1e-10)
    assert observable.op.c == pytest.approx(16 - 6j, rel=1e-10)
    assert observable.op.discriminant == pytest.approx(72, rel=1e-10)
    assert observable.case_label is CaseLabel.case2
    assert check_pseudo_hermitian(observable.op.matrix, WORKED_METRIC_U2)


def test_construct_case2_from_real_part_of_b(worked_angle):
    observable = construct_compatible(worked_angle, 2, Case2ReBParams(a_prime=1j, re_b_prime=4))
    assert np.allclose(observable.op.traceless, WORKED_HP, rtol=1e-10)


def test_construct_rejects_case_mismatch(worked_angle):
    with pytest.raises(CaseMismatch):
        construct_compatible(worked_angle, 2, Case1Params(re_a_prime=0, b_prime=1))
    with pytest.raises(CaseMismatch):
        construct_compatible(AngleForm(1, 0j, 0j), 2, Case2Params(a_prime=1j, w=1))


def test_free_params_round_trip(worked_angle, worked_hp):
    params = free_params_of(worked_angle, 2, worked_hp)
    assert isinstance(params, Case2Params)
    assert params.a_prime == pytest.approx(1j)
    assert params.w == pytest.approx(1)
    with pytest.raises(NotCompatible):
        free_params_of(worked_angle, 1, worked_hp)


@pytest.mark.parametrize(
    ("a", "b", "c", "expected"),
    [
        (1, 1j, -1j, 2),
        (1j, 4 + 1.5j, 16 - 6j, 72),
        (0, 1, -1, -1),
    ],
)
def test_reality_constraints_examples(a, b, c, expected):
    constraints = reality_constraints(QuasiHermitianOp(q=0.0, a=complex(a), b=complex(b), c=complex(c)))
    assert constraints.re_part == pytest.approx(expected)
    assert constraints.im_part == pytest.approx(0, abs=1e-12)
    assert constraints.satisfied(1e-10) == (expected >= 0)


@settings(max_examples=500)
@given(angles, weights, weights, free, free, free)
def test_constraints_are_automatic(af, u, k, x, y, z):
    cc = case_coefficients(af, u)
    # Near the Case 1 boundary b' and c' grow like 1 / lambda and cancel in a'**2 + b' c'.
    assume(cc.case_label is CaseLabel.case1 or abs(cc.lam) > 1e-3)
    if cc.case_label is CaseLabel.case1:
        params = Case1Params(re_a_prime=x, b_prime=complex(y, z))
    else:
        params = Case2Params(a_prime=complex(x, y), w=z)
    observable = construct_compatible(af, u, params)
    constraints = reality_constraints(observable.op)
    assert constraints.satisfied(1e-10)
    assert check_pseudo_hermitian(observable.op.matrix, build_metric(af, MetricParams(k=k, u=u)))


@settings(max_examples=500)
@given(angles, weights, free, free, free)
def test_discriminant_is_nonnegative(af, u, x, y, w):
    cc = case_coefficients(af, u)
    if cc.case_label is CaseLabel.case1:
        return
    report = discriminant_d(af, u, complex(x, y), w)
    lam_sq = abs(cc.lam) ** 2
    scale = (lam_sq * (x * x + 2 * abs(w * x) / cc.r) + cc.s * w * w / cc.r) / report.gap
    assert report.d >= -1e-10 * max(1.0, scale)
    assert report.d == pytest.approx(report.d_completed_square, abs=1e-10 * max(1.0, scale))
    assert report.gap == pytest.approx(math.exp(2 * af.phi.imag) * u, rel=1e-10)
    lhs_scale = max(1.0, scale * report.gap + cc.r * cc.s * y * y)
    assert report.constraint_lhs == pytest.approx(report.gap * (report.d + y * y), abs=1e-9 * lhs_scale)


def test_irreducibility_examples(worked_h, worked_hp):
    proportional = validate_quasi_hermitian(4 * WORKED_H)
    assert not irreducibility_test(worked_h, proportional)
    assert irreducibility_test(worked_h, proportional).delta == 0
    assert not irreducibility_test(worked_h, validate_quasi_hermitian(WORKED_H + 3 * np.eye(2)))

    report = irreducibility_test(worked_h, worked_hp)
    assert report
    assert report.delta == pytest.approx(-128)
    assert commutator_determinant(worked_h, worked_hp) == pytest.approx(128)


def test_shared_eigenvector_pair_is_reducible():
    h = validate_quasi_hermitian([[1, 1], [0, -1]])
    hp = validate_quasi_hermitian([[2, 5], [0, -2]])
    assert not irreducibility_test(h, hp)
    assert shares_eigenvector(h, hp)


def test_irreducibility_agrees_with_shared_eigenvectors():
    rng = np.random.default_rng(7)
    compared = 0
    for _ in range(2000):
        h, hp = (random_operator(rng) for _ in range(2))
        if rng.random() < 0.3:
            hp = validate_quasi_hermitian(rng.uniform(-3, 3) * h.traceless + rng.uniform(-3, 3) * np.eye(2))
        report = irreducibility_test(h, hp)
        if report.threshold / 10 <= abs(report.delta) <= 10 * report.threshold:
            continue
        assert bool(report) != shares_eigenvector(h, hp)
        assert report.delta == pytest.approx(-commutator_determinant(h, hp), rel=1e-10, abs=report.threshold)
        compared += 1
    assert compared > 1900


def test_metric_from_pair_hermitian():
    result = metric_from_pair(validate_quasi_hermitian(SIGMA_X), validate_quasi_hermitian([[1, 1j], [-1j, -1]]))
    assert result.u == pytest.approx(1)
    assert result.route is PairRoute.case1_unit
    assert np.allclose(result.metric.matrix, np.eye(2))


def test_metric_from_pair_theta_zero():
    result = metric_from_pair(validate_quasi_hermitian(SIGMA_Z), validate_quasi_hermitian([[0, 1], [2, 0]]))
    assert result.u == pytest.approx(2)
    assert result.route is PairRoute.case1_theta_zero
    assert np.allclose(result.metric.matrix, np.diag([2, 1]))


def test_metric_from_pair_worked_case2(worked_h, worked_hp):
    result = metric_from_pair(worked_h, worked_hp)
    assert result.u == pytest.approx(2, rel=1e-10)
    assert result.w == pytest.approx(1, rel=1e-10)
    assert result.route is PairRoute.case2_linear
    assert np.allclose(result.metric.matrix, WORKED_METRIC_U2, rtol=1e-10)


def test_metric_from_pair_diagonal_observable_picks_unit_u(worked_h):
    result = metric_from_pair(worked_h, validate_quasi_hermitian(SIGMA_Z))
    assert result.u == pytest.approx(1)
    assert np.allclose(result.metric.matrix, WORKED_METRIC_U1)


def test_metric_from_pair_without_angle_form():
    h = validate_quasi_hermitian([[1, 1], [0, -1]])
    metric = metric_family(h, MetricParams(1, 3))
    # eta^-1 X is eta-pseudo-Hermitian for every Hermitian X.
    hp = validate_quasi_hermitian(np.linalg.inv(metric.matrix) @ SIGMA_X)
    assert irreducibility_test(h, hp)
    result = metric_from_pair(h, hp)
    assert result.route is PairRoute.kernel
    assert result.u == pytest.approx(3, rel=1e-8)


def test_metric_from_pair_refuses_reducible(worked_h):
    with pytest.raises(DegeneratePair):
        metric_from_pair(worked_h, validate_quasi_hermitian(4 * WORKED_H))


def test_metric_from_pair_refuses_incompatible():
    with pytest.raises(NoCompatibleMetric):
        metric_from_pair(validate_quasi_hermitian(SIGMA_Z), validate_quasi_hermitian([[2, 1j], [1j, -2]]))


def test_hermitize_examples(worked_h, worked_angle):
    result = hermitize(worked_h, WORKED_METRIC_U1)
    assert np.allclose(result.h, [[0, 2], [2, 0]])
    assert np.allclose(result.rho, np.diag([1, 2]))

    result = hermitize(worked_h, build_metric(worked_angle, MetricParams(1, 2)))
    assert is_hermitian(result.h, 1e-9)
    assert sorted(v.real for v in eigen2(result.h).values) == pytest.approx([-2, 2], rel=1e-10)

    hermitian = validate_quasi_hermitian(SIGMA_X)
    result = hermitize(hermitian, np.eye(2))
    assert np.allclose(result.rho, np.eye(2))
    assert np.allclose(result.h, SIGMA_X)


def test_hermitize_rejects_wrong_metric(worked_h):
    with pytest.raises(NotCompatible):
        hermitize(worked_h, np.eye(2))


def test_hermitize_preserves_spectrum():
    rng = np.random.default_rng(3)
    for _ in range(200):
        h = random_operator(rng)
        metric = metric_family(h, MetricParams(k=rng.uniform(0.1, 5), u=rng.uniform(0.1, 5)))
        result = hermitize(h, metric)
        scale = np.linalg.norm(result.h)
        assert np.linalg.norm(result.h - adjoint(result.h)) <= 1e-9 * scale
        assert sorted(np.linalg.eigvalsh(0.5 * (result.h + adjoint(result.h)))) == pytest.approx(
            sorted(h.eigenvalues), rel=1e-8, abs=1e-8
        )


def test_sampler_is_deterministic(worked_h):
    first = sample_compatible(worked_h, 2, 5, seed=42)
    second = sample_compatible(worked_h, 2, 5, seed=42)
    assert [np.array_equal(a.op.matrix, b.op.matrix) for (a, _), (b, _) in zip(first, second)] == [True] * 5
    other = sample_compatible(worked_h, 2, 5, seed=43)
    assert not np.array_equal(first[0][0].op.matrix, other[0][0].op.matrix)


def test_sampler_options(worked_h):
    assert sample_compatible(worked_h, 2, 0, seed=0) == []
    samples = sample_compatible(worked_h, 2, 20, seed=1, irreducible_only=True, alt_b=True)
    assert len(samples) == 20
    assert all(report.irreducible for _, report in samples)
    assert all(isinstance(observable.generated_from, Case2ReBParams) for observable, _ in samples)
    with pytest.raises(InvalidParameters):
        sample_compatible(worked_h, 2, -1, seed=0)


def test_sampler_case1_for_hermitian_operator():
    samples = sample_compatible(validate_quasi_hermitian(SIGMA_X), 1, 10, seed=5)
    assert all(observable.case_label is CaseLabel.case1 for observable, _ in samples)
    assert all(is_hermitian(observable.op.matrix, 1e-10) for observable, _ in samples)


def test_sampled_observables_satisfy_constraints():
    rng = np.random.default_rng(19)
    labels = {CaseLabel.case1: 0, CaseLabel.case2: 0}
    for seed in range(1000):
        case1 = seed % 4 == 0
        h = random_operator(rng, real_theta=case1)
        u = 1.0 if case1 else float(rng.uniform(0.1, 10))
        metric = metric_family(h, MetricParams(k=1.0, u=u))
        for observable, _ in sample_compatible(h, u, 100, seed=seed):
            assert reality_constraints(observable.op).satisfied(1e-10)
            assert check_pseudo_hermitian(observable.op.matrix, metric, tol=1e-9)
            labels[observable.case_label] += 1
    assert labels == {CaseLabel.case1: 25_000, CaseLabel.case2: 75_000}


def test_construct_from_metric_example():
    h = validate_quasi_hermitian(np.diag([-1, 1]))
    observable = construct_from_metric(h, 2, SpectralParams(x11=1, x22=4, x12=0j))
    assert np.allclose(observable.op.matrix, np.diag([1, 2]))
    assert observable.case_label is CaseLabel.spectral
    assert observable.case_label.label() == "Spectral"


@pytest.mark.parametrize("m", [np.diag([-1, 1]), [[1, 1], [0, -1]], [[-2, 1], [-3, 2]]])
@pytest.mark.parametrize("u", [0.5, 2.0])
def test_sampler_without_angle_form(m, u):
    h = validate_quasi_hermitian(m)
    samples = sample_compatible(h, u, 50, seed=7, irreducible_only=True)
    assert len(samples) == 50
    for k in (1.0, 3.0):
        metric = metric_family(h, MetricParams(k=k, u=u))
        for observable, report in samples:
            assert observable.case_label is CaseLabel.spectral
            assert isinstance(observable.generated_from, SpectralParams)
            assert report.irreducible
            assert reality_constraints(observable.op).satisfied(1e-10)
            assert check_pseudo_hermitian(observable.op.matrix, metric)
    again = sample_compatible(h, u, 50, seed=7, irreducible_only=True)
    assert all(np.array_equal(a.op.matrix, b.op.matrix) for (a, _), (b, _) in zip(samples, again))


def test_pair_metric_recovers_u_for_operator_without_angle_form():
    h = validate_quasi_hermitian([[-2, 1], [-3, 2]])
    for observable, _ in sample_compatible(h, 2.5, 5, seed=3, irreducible_only=True):
        result = metric_from_pair(h, observable.op)
        assert result.route is PairRoute.kernel
        assert result.u == pytest.approx(2.5, rel=1e-8)
