from typing import Optional

from ..linalg import eigen2
from ..metric import metric_family
from ..models import MatrixDocument, MetricParams
from ..observables import hermitize
from .base import BaseCommandHandler
from .errors import ValidationError
from .shared import (
    CommandResult,
    add_matrix_arguments,
    complex_pair,
    matrix_json,
    read_document,
    read_operator,
    require_positive,
)


class HermitizeHandler(BaseCommandHandler):
    name = "hermitize"
    matrix: str
    u: Optional[float]
    eta: Optional[str]

    def validate(self):
        if self.u is not None and self.eta is not None:
            raise ValidationError("--u and --eta are mutually exclusive")
        require_positive(self.u, "--u")
        self.document = read_document(self.matrix, "--matrix")
        self.eta_document: Optional[MatrixDocument] = None
        if self.eta is not None:
            self.eta_document = read_document(self.eta, "--eta")

    def execute(self) -> CommandResult:
        op = read_operator(self.document)
        if self.eta_document is not None:
            eta = self.eta_document.matrix
        else:
            eta = metric_family(op, MetricParams(k=1.0, u=1.0 if self.u is None else self.u))
        result = hermitize(op, eta)
        return self.result(
            True,
            rho=matrix_json(result.rho),
            h=matrix_json(result.h),
            eigenvalues=[complex_pair(value) for value in eigen2(result.h).values],
        )


def setup(subparsers):
    parser = subparsers.add_parser("hermitize", help="similarity transform to a Hermitian operator")
    add_matrix_arguments(parser, pair=False)
    parser.add_argument("--u", type=float, default=None, help="use the k = 1 metric with this u (default 1)")
    parser.add_argument("--eta", default=None, help="MatrixDocument of the metric to use instead of --u")
    parser.set_defaults(handler=HermitizeHandler)
