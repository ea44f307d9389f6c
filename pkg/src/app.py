import json
import logging
import sys
from argparse import RawDescriptionHelpFormatter
from importlib import import_module
from pathlib import Path
from pkgutil import iter_modules
from traceback import print_exception
from typing import Optional, Sequence

from . import __version__
from .commands.errors import ValidationError
from .commands.shared import CommandResult, ExitCode, JsonArgumentParser
from .settings import InvalidTolerance, Settings
from .singleton import SingletonClass

logger = logging.getLogger(__name__)

BRANCH_CONVENTIONS = """\
angle branch conventions:
  E      sqrt(a**2 + b c) on the real nonnegative branch
  theta  principal complex arccos of a / E, with Re(theta) in [0, pi)
  phi    read off c (or b when |b| > |c|), with Re(phi) in [0, 2 pi)
  E = 0 gives theta = phi = 0; sin(theta) = 0 gives phi = 0.

Matrix documents are {"matrix": [[[re, im], [re, im]], [[re, im], [re, im]]], "label": "..."}, given inline or as a
file path. Exit codes: 0 success, 1 false verdict or refusal, 2 malformed input.
"""


class QH2App(SingletonClass):
    def __init__(self):
        if getattr(self, "parser", None) is not None:
            return
        self.parser = JsonArgumentParser(
            prog="qh2",
            description="Metric operators and compatible observables of quasi-Hermitian 2x2 operators.",
            epilog=BRANCH_CONVENTIONS,
            formatter_class=RawDescriptionHelpFormatter,
        )
        self.parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
        self.parser.add_argument("--indent", type=int, default=None, help="pretty-print the JSON output")
        self.subparsers = self.parser.add_subparsers(dest="command", required=True, parser_class=JsonArgumentParser)
        self.setup_hook()

    def setup_hook(self):
        for module in iter_modules([str(Path(__file__).parent / "commands")]):
            extension = import_module(f"src.commands.{module.name}")
            setup = getattr(extension, "setup", None)
            if setup is not None:
                setup(self.subparsers)
                logger.debug("Loaded command module %s", module.name)

    def dispatch(self, argv: Sequence[str]) -> tuple[CommandResult, Optional[int]]:
        try:
            Settings()
        except InvalidTolerance as e:
            return CommandResult(ExitCode.malformed_input, {"error": "invalid-tolerance", "detail": str(e)}), None
        try:
            args = self.parser.parse_args(list(argv))
        except ValidationError as e:
            return CommandResult(ExitCode.malformed_input, e.to_json_dict()), None
        handler = args.handler(**vars(args))
        try:
            return handler.run(), args.indent
        except Exception as e:
            print_exception(e)
            return (
                CommandResult(
                    ExitCode.malformed_input,
                    {"command": args.command, "error": "internal-error", "detail": f"{type(e).__name__}: {e}"},
                ),
                args.indent,
            )

    def run(self, argv: Sequence[str]) -> int:
        """Run one command and print its JSON result to stdout; returns the exit code."""
        result, indent = self.dispatch(argv)
        separators = None if indent is not None else (",", ":")
        text = json.dumps(result.payload, sort_keys=True, indent=indent, separators=separators, allow_nan=False)
        sys.stdout.write(text + "\n")
        return int(result.exit_code)
