from ..metric import metric_family
from ..models import MetricParams
from ..observables import case_coefficients
from ..quasi import to_angle_form
from .base import BaseCommandHandler
from .shared import (
    CommandResult,
    add_matrix_arguments,
    complex_pair,
    matrix_json,
    read_document,
    read_operator,
    require_positive,
)


class MetricHandler(BaseCommandHandler):
    name = "metric"
    matrix: str
    u: float
    k: float

    def validate(self):
        require_positive(self.u, "--u")
        require_positive(self.k, "--k")
        self.document = read_document(self.matrix, "--matrix")

    def execute(self) -> CommandResult:
        op = read_operator(self.document)
        metric = metric_family(op, MetricParams(k=self.k, u=self.u))
        coefficients = None
        case = None
        if metric.coeffs is not None:
            coefficients = {
                "m_a": metric.coeffs.m_a,
                "m_b": metric.coeffs.m_b,
                "zeta": complex_pair(metric.coeffs.zeta),
            }
            cc = case_coefficients(to_angle_form(op), self.u)
            case = {
                "lambda": complex_pair(cc.lam),
                "r": cc.r,
                "s": cc.s,
                "gap": cc.gap,
                "label": cc.case_label.label(),
            }
        return self.result(
            True,
            eta=matrix_json(metric.matrix),
            params={"k": self.k, "u": self.u},
            route="angle" if metric.coeffs is not None else "spectral",
            coefficients=coefficients,
            case=case,
        )


def setup(subparsers):
    parser = subparsers.add_parser("metric", help="metric operator of the (k, u) family")
    add_matrix_arguments(parser, pair=False)
    parser.add_argument("--u", type=float, default=1.0, help="relative weight of the +E eigenprojector (default 1)")
    parser.add_argument("--k", type=float, default=1.0, help="overall scale (default 1)")
    parser.set_defaults(handler=MetricHandler)
