from ..observables import commutator_determinant, irreducibility_test
from .base import BaseCommandHandler
from .shared import CommandResult, add_matrix_arguments, complex_pair, read_document, read_operator


class IrreducibleHandler(BaseCommandHandler):
    name = "irreducible"
    matrix: str
    pair: str

    def validate(self):
        self.document = read_document(self.matrix, "--matrix")
        self.pair_document = read_document(self.pair, "--pair")

    def execute(self) -> CommandResult:
        h = read_operator(self.document)
        hp = read_operator(self.pair_document)
        report = irreducibility_test(h, hp)
        return self.result(
            report.irreducible,
            delta=complex_pair(report.delta),
            threshold=report.threshold,
            commutator_det=complex_pair(commutator_determinant(h, hp)),
        )


def setup(subparsers):
    parser = subparsers.add_parser("irreducible", help="test whether H and H' share no eigenvector")
    add_matrix_arguments(parser, pair=True)
    parser.set_defaults(handler=IrreducibleHandler)
