from ..oracle import cross_validate
from .base import BaseCommandHandler
from .shared import CommandResult, add_matrix_arguments, read_document, read_operator


class VerifyHandler(BaseCommandHandler):
    name = "verify"
    matrix: str
    pair: str | None

    def validate(self):
        self.document = read_document(self.matrix, "--matrix")
        self.pair_document = read_document(self.pair, "--pair") if self.pair is not None else None

    def execute(self) -> CommandResult:
        h = read_operator(self.document)
        hp = read_operator(self.pair_document) if self.pair_document is not None else None
        report = cross_validate(h, hp)
        return self.result(
            report.passed,
            passed=report.passed,
            max_deviation=report.max_deviation,
            kernel_dimension=report.kernel_dimension,
            expected_dimension=report.expected_dimension,
            checks=[
                {"name": check.name, "deviation": check.deviation, "passed": check.passed, "detail": check.detail}
                for check in report.checks
            ],
        )


def setup(subparsers):
    parser = subparsers.add_parser("verify", help="cross-check the closed forms against the brute-force oracle")
    add_matrix_arguments(parser)
    parser.set_defaults(handler=VerifyHandler)
