"""Observables compatible with a given operator, irreducibility of pairs, and the metric a pair pins down."""
import cmath
import logging
import math

import numpy as np

from .errors import (
    AngleUnrepresentable,
    CaseMismatch,
    DegeneratePair,
    Inconsistent,
    InvalidParameters,
    NoCompatibleMetric,
    NotCompatible,
    NotQuasiHermitian,
    PostconditionFailed,
)
from .linalg import commutator, det2, eigen2, frobenius, inverse2, pd_sqrt, scaled, solve_real_linear
from . import oracle
from .metric import (
    MetricLike,
    build_metric,
    check_pseudo_hermitian,
    metric_coefficients,
    metric_family,
    metric_matrix,
    params_of,
)
from .models import (
    AngleForm,
    Case1Params,
    Case2Params,
    Case2ReBParams,
    CaseCoefficients,
    CaseLabel,
    CompatibleObservable,
    DiscriminantReport,
    Hermitization,
    IrreducibilityReport,
    MetricOperator,
    MetricParams,
    ObservableFreeParams,
    PairMetric,
    PairRoute,
    QuasiHermitianOp,
    RealityConstraints,
    RealLinearSystem,
    SpectralParams,
)
from .quasi import to_angle_form, validate_quasi_hermitian
from .settings import get_tolerances

logger = logging.getLogger(__name__)

SAMPLE_RANGE = 5.0
MAX_SAMPLE_ATTEMPTS_PER_ITEM = 100


def case_coefficients(af: AngleForm, u: float) -> CaseCoefficients:
    """``lambda``, ``r`` and ``s`` of the compatibility equations, and which of the two cases applies.

    The label comes from ``lambda`` itself; the structural rule (theta = 0, or theta real and u = 1) is evaluated too
    and a disagreement is logged.
    """
    if not u > 0:
        raise InvalidParameters(f"u must be positive, got {u!r}")
    tolerances = get_tolerances()
    coeffs = metric_coefficients(af.theta)
    zeta = coeffs.zeta
    lam = cmath.exp(1j * af.phi.conjugate()) * (u * zeta.conjugate() - zeta)
    r = math.exp(2 * af.phi.imag) * (coeffs.m_a + coeffs.m_b * u)
    s = coeffs.m_a * u + coeffs.m_b
    vanishing = abs(lam) <= scaled(tolerances.internal, abs(zeta) * (1 + u))
    label = CaseLabel.case1 if vanishing else CaseLabel.case2

    structural = abs(af.theta) <= tolerances.internal or (
        abs(af.theta.imag) <= tolerances.internal and abs(u - 1) <= tolerances.internal
    )
    if structural != vanishing:
        logger.warning("Case rules disagree for theta=%s, u=%s: |lambda|=%g", af.theta, u, abs(lam))
    return CaseCoefficients(lam=lam, r=r, s=s, case_label=label)


def _case2_w(cc: CaseCoefficients, params: Case2Params | Case2ReBParams) -> float:
    if isinstance(params, Case2Params):
        return params.w
    # lambda b' = w + i r Im(a'), so Re(b') = Re((w + i r Im(a')) / lambda) is affine in w.
    inverse = 1 / cc.lam
    if abs(inverse.real) <= get_tolerances().internal * abs(inverse):
        raise InvalidParameters("Re(b') does not determine w when lambda is purely imaginary")
    return (params.re_b_prime + cc.r * params.a_prime.imag * inverse.imag) / inverse.real


def construct_compatible(af: AngleForm, u: float, params: ObservableFreeParams) -> CompatibleObservable:
    """The observable generated by ``params`` that is pseudo-Hermitian for every metric ``build_metric(af, (k, u))``."""
    cc = case_coefficients(af, u)
    if params.case_label != cc.case_label:
        raise CaseMismatch(
            f"{type(params).__name__} parameters given but theta={af.theta}, u={u} is {cc.case_label.label()}"
        )
    if isinstance(params, Case1Params):
        a_prime = complex(params.re_a_prime)
        b_prime = complex(params.b_prime)
        c_prime = (cc.s / cc.r) * b_prime.conjugate()
    else:
        a_prime = complex(params.a_prime)
        w = _case2_w(cc, params)
        lam_sq = abs(cc.lam) ** 2
        b_prime = (w + 1j * cc.r * a_prime.imag) / cc.lam
        c_prime = (cc.s * w - 2 * lam_sq * a_prime.real - 1j * cc.r * cc.s * a_prime.imag) / (
            cc.r * cc.lam.conjugate()
        )
    op = QuasiHermitianOp(q=float(params.q_prime), a=a_prime, b=b_prime, c=c_prime)

    internal = get_tolerances().internal
    if not reality_constraints(op).satisfied(internal):
        raise PostconditionFailed(f"a'**2 + b' c' = {op.discriminant} is not a nonnegative real number")
    check = check_pseudo_hermitian(op.matrix, build_metric(af, MetricParams(1.0, u)), tol=internal)
    if not check:
        raise PostconditionFailed(f"observable is not pseudo-Hermitian (residual {check.residual:.3g})")
    return CompatibleObservable(op=op, generated_from=params, case_label=cc.case_label, u_used=u)


def free_params_of(af: AngleForm, u: float, op: QuasiHermitianOp) -> ObservableFreeParams:
    """Recover the free parameters that :func:`construct_compatible` would need to produce ``op``."""
    cc = case_coefficients(af, u)
    if cc.case_label is CaseLabel.case1:
        params = Case1Params(re_a_prime=op.a.real, b_prime=op.b, q_prime=op.q)
    else:
        params = Case2Params(a_prime=op.a, w=(cc.lam * op.b).real, q_prime=op.q)
    rebuilt = construct_compatible(af, u, params).op
    deviation = frobenius(rebuilt.matrix - op.matrix)
    if deviation > scaled(get_tolerances().accept, frobenius(op.matrix)):
        raise NotCompatible(f"operator is not compatible with u={u} (deviation {deviation:.3g})")
    return params


def reality_constraints(op: QuasiHermitianOp) -> RealityConstraints:
    disc = op.discriminant
    return RealityConstraints(re_part=disc.real, im_part=disc.imag, scale=abs(op.a * op.a) + abs(op.b * op.c))


def discriminant_d(af: AngleForm, u: float, a_prime: complex, w: float) -> DiscriminantReport:
    """The quantity whose nonnegativity makes ``Re(a'**2 + b' c') >= 0`` automatic in Case 2."""
    cc = case_coefficients(af, u)
    lam_sq = abs(cc.lam) ** 2
    gap = cc.gap
    re_a, im_a = a_prime.real, a_prime.imag
    d = (lam_sq * (re_a**2 - 2 * w * re_a / cc.r) + cc.s * w**2 / cc.r) / gap
    d_completed_square = (lam_sq * (re_a - w / cc.r) ** 2 + (w / cc.r) ** 2 * gap) / gap
    constraint_lhs = (
        lam_sq * (re_a**2 - im_a**2 - 2 * w * re_a / cc.r) + cc.r * cc.s * im_a**2 + cc.s * w**2 / cc.r
    )
    return DiscriminantReport(
        d=d,
        d_completed_square=d_completed_square,
        constraint_lhs=constraint_lhs,
        gap=gap,
    )


def irreducibility_test(h: QuasiHermitianOp, hp: QuasiHermitianOp) -> IrreducibilityReport:
    """``delta = (b c' - c b')**2 - 4 (a b' - b a')(a c' - c a')``; the pair is irreducible iff it is nonzero.

    ``delta`` equals ``-det([H0, H0'])``.
    """
    a, b, c = h.a, h.b, h.c
    ap, bp, cp = hp.a, hp.b, hp.c
    delta = complex((b * cp - c * bp) ** 2 - 4 * (a * bp - b * ap) * (a * cp - c * ap))
    scale = max(frobenius(h.traceless), frobenius(hp.traceless))
    threshold = get_tolerances().accept * scale**4
    return IrreducibilityReport(delta=delta, irreducible=abs(delta) > threshold, threshold=threshold)


def commutator_determinant(h: QuasiHermitianOp, hp: QuasiHermitianOp) -> complex:
    return det2(commutator(h.traceless, hp.traceless))


def shares_eigenvector(h: QuasiHermitianOp, hp: QuasiHermitianOp, tol: float | None = None) -> bool:
    """Whether the two operators have a common eigenvector, by direct comparison of their eigenvectors."""
    tol = get_tolerances().accept if tol is None else tol
    first = eigen2(h.traceless)
    second = eigen2(hp.traceless)
    scale = max(frobenius(h.traceless), frobenius(hp.traceless))
    if frobenius(h.traceless) <= tol * max(1.0, scale) or frobenius(hp.traceless) <= tol * max(1.0, scale):
        return True
    for v in first.vectors:
        for w in second.vectors:
            if abs(v[0] * w[1] - v[1] * w[0]) <= tol:
                return True
    return False


def _is_compatible(h: QuasiHermitianOp, hp: QuasiHermitianOp, metric: MetricOperator) -> bool:
    return bool(check_pseudo_hermitian(h.matrix, metric)) and bool(check_pseudo_hermitian(hp.matrix, metric))


def _theta_zero_u(af: AngleForm, hp: QuasiHermitianOp) -> complex:
    """Solve ``c' (a + b u) = (a u + b) exp(-2 Im(phi)) conj(b')`` for ``u``."""
    coeffs = metric_coefficients(af.theta)
    scaled_b = math.exp(-2 * af.phi.imag) * hp.b.conjugate()
    denominator = hp.c * coeffs.m_b - coeffs.m_a * scaled_b
    if denominator == 0:
        raise NoCompatibleMetric("b' vanishes, so the observable does not fix u")
    return (coeffs.m_b * scaled_b - hp.c * coeffs.m_a) / denominator


def _case2_u(af: AngleForm, hp: QuasiHermitianOp) -> tuple[float, float]:
    """Solve ``b' (u conj(zeta) - zeta) exp(i conj(phi)) = w + i exp(2 Im(phi)) (a + b u) Im(a')`` for ``(u, w)``."""
    coeffs = metric_coefficients(af.theta)
    zeta = coeffs.zeta
    beta = cmath.exp(1j * af.phi.conjugate()) * hp.b
    weight = math.exp(2 * af.phi.imag)
    im_a = hp.a.imag
    system = RealLinearSystem(
        rows=[
            [(beta * zeta.conjugate()).real, -1.0],
            [(beta * zeta.conjugate()).imag - weight * coeffs.m_b * im_a, 0.0],
        ],
        rhs=[(beta * zeta).real, (beta * zeta).imag + weight * coeffs.m_a * im_a],
        n_unknowns=2,
    )
    solution = solve_real_linear(system)
    if not solution.is_unique:
        raise NoCompatibleMetric("the linear system for (u, w) is singular")
    u, w = solution.solution
    return float(u), float(w)


def _metric_from_kernel(h: QuasiHermitianOp, hp: QuasiHermitianOp, af: AngleForm | None) -> PairMetric:
    solution = oracle.intertwiner_space([h.matrix, hp.matrix])
    if solution.dimension != 1 or solution.pd_witness is None:
        raise NoCompatibleMetric(
            f"joint intertwiner kernel has dimension {solution.dimension} and "
            f"{'a' if solution.pd_witness is not None else 'no'} positive-definite element"
        )
    params = params_of(h, solution.pd_witness, af)
    if af is not None:
        metric = build_metric(af, MetricParams(1.0, params.u))
    else:
        metric = metric_family(h, MetricParams(1.0, params.u))
    return PairMetric(u=params.u, metric=metric, route=PairRoute.kernel)


def metric_from_pair(h: QuasiHermitianOp, hp: QuasiHermitianOp) -> PairMetric:
    """The unique (``k = 1``) metric for which both operators of an irreducible pair are pseudo-Hermitian."""
    report = irreducibility_test(h, hp)
    if not report:
        raise DegeneratePair(f"the pair is reducible (delta={report.delta}); its metric is not unique")
    try:
        af = to_angle_form(h)
    except AngleUnrepresentable as e:
        logger.debug("No angle form for H (%s); solving through the intertwiner kernel", e.code)
        result = _metric_from_kernel(h, hp, None)
        if not _is_compatible(h, hp, result.metric):
            raise NoCompatibleMetric("the kernel metric fails the pseudo-Hermiticity check")
        return result

    tol = get_tolerances().accept
    w = None
    if abs(af.theta) <= get_tolerances().internal:
        u_complex = _theta_zero_u(af, hp)
        if abs(u_complex.imag) > scaled(tol, abs(u_complex)):
            raise NoCompatibleMetric(f"solved u = {u_complex} is not real")
        u, route = u_complex.real, PairRoute.case1_theta_zero
    else:
        u, route = None, PairRoute.case2_linear
        if abs(af.theta.imag) <= get_tolerances().internal and _is_compatible(
            h, hp, build_metric(af, MetricParams(1.0, 1.0))
        ):
            u, route = 1.0, PairRoute.case1_unit
        if u is None:
            try:
                u, w = _case2_u(af, hp)
            except (NoCompatibleMetric, Inconsistent) as e:
                logger.debug("Case 2 solve failed (%s); falling back to the intertwiner kernel", e)
                result = _metric_from_kernel(h, hp, af)
                u, route = result.u, result.route
    logger.debug("Pair metric route %s gave u=%r", route.value, u)

    if not (math.isfinite(u) and u > 0):
        raise NoCompatibleMetric(f"solved u = {u!r} is not positive")
    metric = build_metric(af, MetricParams(1.0, u))
    if not _is_compatible(h, hp, metric):
        raise NoCompatibleMetric(f"the metric for u = {u!r} does not make both operators pseudo-Hermitian")
    return PairMetric(u=u, metric=metric, route=route, w=w)


def hermitize(h: QuasiHermitianOp, eta: MetricLike) -> Hermitization:
    """``rho = eta^(-1/2)`` and the Hermitian ``h = rho^(-1) H rho``."""
    matrix = h.matrix
    check = check_pseudo_hermitian(matrix, eta)
    if not check:
        raise NotCompatible(f"operator is not pseudo-Hermitian for this metric (residual {check.residual:.3g})")
    root = pd_sqrt(metric_matrix(eta))
    rho = inverse2(root)
    return Hermitization(rho=rho, h=root @ matrix @ rho)


def construct_from_metric(h: QuasiHermitianOp, u: float, params: SpectralParams) -> CompatibleObservable:
    """The observable ``q' I + eta**(-1) X``, with ``eta = metric_family(h, (1, u))`` and ``X`` Hermitian.

    Works for every valid ``h``, including those without an angle form. Raises :class:`NotQuasiHermitian` in the
    measure-zero event that ``X`` makes the result non-diagonalizable.
    """
    eta = metric_family(h, MetricParams(1.0, u))
    x = np.array(
        [[params.x11, params.x12], [complex(params.x12).conjugate(), params.x22]],
        dtype=np.complex128,
    )
    matrix = params.q_prime * np.eye(2, dtype=np.complex128) + inverse2(eta.matrix) @ x
    op = validate_quasi_hermitian(matrix)

    internal = get_tolerances().internal
    if not reality_constraints(op).satisfied(internal):
        raise PostconditionFailed(f"a'**2 + b' c' = {op.discriminant} is not a nonnegative real number")
    check = check_pseudo_hermitian(op.matrix, eta, tol=internal)
    if not check:
        raise PostconditionFailed(f"observable is not pseudo-Hermitian (residual {check.residual:.3g})")
    return CompatibleObservable(op=op, generated_from=params, case_label=CaseLabel.spectral, u_used=u)


def _draw_params(
    rng: np.random.Generator, label: CaseLabel, alt_b: bool
) -> Case1Params | Case2Params | Case2ReBParams | SpectralParams:
    q_prime = float(rng.uniform(-SAMPLE_RANGE, SAMPLE_RANGE))
    first, second, third = rng.uniform(-SAMPLE_RANGE, SAMPLE_RANGE, size=3)
    if label is CaseLabel.case1:
        return Case1Params(re_a_prime=float(first), b_prime=complex(second, third), q_prime=q_prime)
    if label is CaseLabel.spectral:
        fourth = float(rng.uniform(-SAMPLE_RANGE, SAMPLE_RANGE))
        return SpectralParams(x11=float(first), x22=float(second), x12=complex(third, fourth), q_prime=q_prime)
    if alt_b:
        return Case2ReBParams(a_prime=complex(first, second), re_b_prime=float(third), q_prime=q_prime)
    return Case2Params(a_prime=complex(first, second), w=float(third), q_prime=q_prime)


def sample_compatible(
    h: QuasiHermitianOp,
    u: float,
    count: int,
    seed: int,
    *,
    irreducible_only: bool = False,
    alt_b: bool = False,
) -> list[tuple[CompatibleObservable, IrreducibilityReport]]:
    """Draw ``count`` observables compatible with ``h`` for the metric parameter ``u``, deterministically in ``seed``.

    Free parameters are uniform in ``[-5, 5]``. With ``irreducible_only`` draws that form a reducible pair with ``h``
    are discarded. Operators without an angle form are sampled through :func:`construct_from_metric`; ``alt_b`` has
    no effect on them.
    """
    if count < 0:
        raise InvalidParameters("count must be nonnegative")
    try:
        af = to_angle_form(h)
        label = case_coefficients(af, u).case_label
    except AngleUnrepresentable as e:
        logger.debug("No angle form (%s); sampling X through the metric", e.code)
        af, label = None, CaseLabel.spectral
    rng = np.random.default_rng(seed)
    samples = []
    attempts = 0
    while len(samples) < count:
        attempts += 1
        if attempts > MAX_SAMPLE_ATTEMPTS_PER_ITEM * max(count, 1):
            raise NoCompatibleMetric(f"found only {len(samples)} irreducible observables in {attempts - 1} draws")
        params = _draw_params(rng, label, alt_b)
        if af is None:
            try:
                observable = construct_from_metric(h, u, params)
            except NotQuasiHermitian:
                continue
        else:
            observable = construct_compatible(af, u, params)
        report = irreducibility_test(h, observable.op)
        if irreducible_only and not report:
            continue
        samples.append((observable, report))
    return samples
