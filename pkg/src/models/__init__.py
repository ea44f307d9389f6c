from .document import DocumentError, MatrixDocument
from .linalg import Eigen2, LinearSolution, Mat2, RealLinearSystem, RealVector, Vec2
from .metric import MetricCoefficients, MetricOperator, MetricParams, PseudoHermiticityCheck
from .observable import (
    Case1Params,
    Case2Params,
    Case2ReBParams,
    CaseCoefficients,
    CaseLabel,
    CompatibleObservable,
    DiscriminantReport,
    Hermitization,
    IrreducibilityReport,
    ObservableFreeParams,
    PairMetric,
    PairRoute,
    RealityConstraints,
    SpectralParams,
)
from .operator import AngleForm, QuasiHermitianOp
from .oracle import CheckResult, CrossValidationReport, IntertwinerSolution
