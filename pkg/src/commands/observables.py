from dataclasses import asdict

from ..models import (
    Case1Params,
    Case2Params,
    Case2ReBParams,
    CompatibleObservable,
    IrreducibilityReport,
    SpectralParams,
)
from ..observables import sample_compatible
from .base import BaseCommandHandler
from .errors import ValidationError
from .shared import (
    CommandResult,
    add_matrix_arguments,
    complex_pair,
    matrix_json,
    operator_json,
    read_document,
    read_operator,
    require_positive,
)

FreeParamsVariants = {
    Case1Params: "case1",
    Case2Params: "case2",
    Case2ReBParams: "case2-re-b",
    SpectralParams: "spectral",
}


def free_params_json(observable: CompatibleObservable) -> dict:
    params = {
        key: complex_pair(value) if isinstance(value, complex) else value
        for key, value in asdict(observable.generated_from).items()
    }
    params["variant"] = FreeParamsVariants[type(observable.generated_from)]
    return params


def sample_json(observable: CompatibleObservable, report: IrreducibilityReport) -> dict:
    return {
        "matrix": matrix_json(observable.op.matrix),
        **operator_json(observable.op),
        "case": observable.case_label.label(),
        "free_params": free_params_json(observable),
        "irreducible": report.irreducible,
        "delta": complex_pair(report.delta),
    }


class ObservablesHandler(BaseCommandHandler):
    name = "observables"
    matrix: str
    u: float
    seed: int
    count: int
    irreducible_only: bool
    alt_b: bool

    def validate(self):
        require_positive(self.u, "--u")
        if self.count < 0:
            raise ValidationError(f"--count must be nonnegative, got {self.count}")
        if self.seed < 0:
            raise ValidationError(f"--seed must be nonnegative, got {self.seed}")
        self.document = read_document(self.matrix, "--matrix")

    def execute(self) -> CommandResult:
        op = read_operator(self.document)
        samples = sample_compatible(
            op, self.u, self.count, self.seed, irreducible_only=self.irreducible_only, alt_b=self.alt_b
        )
        return self.result(
            True,
            u=self.u,
            seed=self.seed,
            observables=[sample_json(observable, report) for observable, report in samples],
        )


def setup(subparsers):
    parser = subparsers.add_parser("observables", help="sample observables compatible with H")
    add_matrix_arguments(parser, pair=False)
    parser.add_argument("--u", type=float, default=1.0, help="metric parameter u (default 1)")
    parser.add_argument("--seed", type=int, default=0, help="sampler seed (default 0)")
    parser.add_argument("--count", type=int, default=5, help="number of observables (default 5)")
    parser.add_argument("--irreducible-only", action="store_true", help="discard draws that are reducible with H")
    parser.add_argument("--alt-b", action="store_true", help="parameterize Case 2 by Re(b') instead of w")
    parser.set_defaults(handler=ObservablesHandler)
