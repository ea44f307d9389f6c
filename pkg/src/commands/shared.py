import json
import math
from argparse import ArgumentParser
from dataclasses import dataclass
from enum import IntEnum
from pathlib import Path
from typing import Optional

from ..errors import NotQuasiHermitian, QuasiHermitianError
from ..models import DocumentError, Mat2, MatrixDocument, QuasiHermitianOp
from ..quasi import validate_quasi_hermitian
from .errors import ValidationError


class ExitCode(IntEnum):
    success = 0
    false_verdict = 1
    """A false verdict or a refusal (not quasi-Hermitian, reducible, no compatible metric, ...)."""
    malformed_input = 2


@dataclass(frozen=True)
class CommandResult:
    exit_code: ExitCode
    payload: dict


class JsonArgumentParser(ArgumentParser):
    """Reports usage errors as :class:`ValidationError` instead of exiting."""

    def error(self, message: str):
        raise ValidationError(message, code="usage")


def complex_pair(z: complex) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def complex_object(z: complex) -> dict:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def matrix_json(m: Mat2) -> list:
    return [[complex_pair(x) for x in row] for row in m]


def operator_json(op: QuasiHermitianOp) -> dict:
    return {
        "q": op.q,
        "a": complex_pair(op.a),
        "b": complex_pair(op.b),
        "c": complex_pair(op.c),
        "E": op.energy,
    }


def read_document(value: str, option: str) -> MatrixDocument:
    """Inline JSON when ``value`` starts with ``{``, otherwise a path to a UTF-8 JSON file."""
    if value.lstrip().startswith("{"):
        text = value
    else:
        try:
            text = Path(value).read_text(encoding="utf-8")
        except OSError as e:
            raise ValidationError(f"{option}: cannot read {value!r}: {e.strerror}", code="unreadable-file") from None
        except UnicodeDecodeError as e:
            raise ValidationError(f"{option}: {value!r} is not UTF-8: {e.reason}", code="unreadable-file") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValidationError(f"{option}: invalid JSON: {e.msg}", code="invalid-json") from None
    except (ValueError, RecursionError) as e:
        # over-long integer literals and nesting past the recursion limit
        raise ValidationError(f"{option}: invalid JSON: {e}", code="invalid-json") from None
    try:
        return MatrixDocument.load_from_json_dict(data)
    except DocumentError as e:
        raise ValidationError(f"{option}: {e}", code="invalid-document") from None


def read_operator(document: MatrixDocument) -> QuasiHermitianOp:
    return validate_quasi_hermitian(document.matrix)


def require_positive(value: Optional[float], option: str) -> None:
    if value is not None and not (math.isfinite(value) and value > 0):
        raise ValidationError(f"{option} must be a positive finite number, got {value!r}")


def refusal_payload(command: str, error: QuasiHermitianError) -> dict:
    payload = {"command": command, "verdict": False, "error": error.code, "detail": error.message}
    if isinstance(error, NotQuasiHermitian):
        payload["reason"] = error.reason.value
    return payload


def add_matrix_arguments(parser: ArgumentParser, pair: Optional[bool] = None) -> None:
    """Add ``-m``; ``-p`` is required when ``pair`` is true, optional when it is ``None`` and left out when false."""
    parser.add_argument("-m", "--matrix", required=True, help="MatrixDocument: inline JSON or a file path")
    if pair is not False:
        parser.add_argument(
            "-p",
            "--pair",
            required=bool(pair),
            default=None,
            help="second MatrixDocument (the observable H')",
        )
