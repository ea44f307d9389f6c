from .base import BaseCommandHandler
from .shared import CommandResult, add_matrix_arguments, operator_json, read_document, read_operator


class ValidateHandler(BaseCommandHandler):
    name = "validate"
    matrix: str

    def validate(self):
        self.document = read_document(self.matrix, "--matrix")

    def execute(self) -> CommandResult:
        op = read_operator(self.document)
        return self.result(True, label=self.document.label, **operator_json(op), eigenvalues=list(op.eigenvalues))


def setup(subparsers):
    parser = subparsers.add_parser("validate", help="check that a matrix is quasi-Hermitian and split it")
    add_matrix_arguments(parser, pair=False)
    parser.set_defaults(handler=ValidateHandler)
