from ..quasi import from_angle_form, to_angle_form
from .base import BaseCommandHandler
from .shared import CommandResult, add_matrix_arguments, complex_object, complex_pair, read_document, read_operator


class AngleHandler(BaseCommandHandler):
    name = "angle"
    matrix: str

    def validate(self):
        self.document = read_document(self.matrix, "--matrix")

    def execute(self) -> CommandResult:
        op = read_operator(self.document)
        af = to_angle_form(op)
        rebuilt = from_angle_form(af)
        return self.result(
            True,
            E=af.energy,
            theta=complex_object(af.theta),
            phi=complex_object(af.phi),
            q=op.q,
            entries={"a": complex_pair(rebuilt.a), "b": complex_pair(rebuilt.b), "c": complex_pair(rebuilt.c)},
        )


def setup(subparsers):
    parser = subparsers.add_parser("angle", help="angle parametrization (E, theta, phi) of the traceless part")
    add_matrix_arguments(parser, pair=False)
    parser.set_defaults(handler=AngleHandler)
