from ..observables import metric_from_pair
from .base import BaseCommandHandler
from .shared import CommandResult, add_matrix_arguments, matrix_json, read_document, read_operator


class PairMetricHandler(BaseCommandHandler):
    name = "pair-metric"
    matrix: str
    pair: str

    def validate(self):
        self.document = read_document(self.matrix, "--matrix")
        self.pair_document = read_document(self.pair, "--pair")

    def execute(self) -> CommandResult:
        result = metric_from_pair(read_operator(self.document), read_operator(self.pair_document))
        return self.result(
            True,
            u=result.u,
            eta=matrix_json(result.metric.matrix),
            route=result.route.value,
            w=result.w,
        )


def setup(subparsers):
    parser = subparsers.add_parser("pair-metric", help="recover the unique (k = 1) metric of an irreducible pair")
    add_matrix_arguments(parser, pair=True)
    parser.set_defaults(handler=PairMetricHandler)
