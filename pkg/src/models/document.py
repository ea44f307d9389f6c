import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .linalg import Mat2


class DocumentError(ValueError):
    pass


def _is_finite_number(part) -> bool:
    if isinstance(part, bool) or not isinstance(part, (int, float)):
        return False
    try:
        return math.isfinite(part)
    except OverflowError:
        # integers beyond the double range
        return False


def _parse_entry(entry, row: int, col: int) -> complex:
    if not isinstance(entry, list) or len(entry) != 2:
        raise DocumentError(f"entry [{row}][{col}] must be a [re, im] pair")
    re, im = entry
    for part in (re, im):
        if not _is_finite_number(part):
            raise DocumentError(f"entry [{row}][{col}] must hold two finite numbers")
    return complex(re, im)


@dataclass(frozen=True, eq=False)
class MatrixDocument:
    matrix: Mat2
    label: Optional[str] = None

    @classmethod
    def load_from_json_dict(cls, json_dict) -> "MatrixDocument":
        if not isinstance(json_dict, dict) or "matrix" not in json_dict:
            raise DocumentError('document must be an object with a "matrix" key')
        rows = json_dict["matrix"]
        if not isinstance(rows, list) or len(rows) != 2 or any(not isinstance(r, list) or len(r) != 2 for r in rows):
            raise DocumentError('"matrix" must be a 2x2 array of [re, im] pairs')
        label = json_dict.get("label")
        if label is not None and not isinstance(label, str):
            raise DocumentError('"label" must be a string')
        matrix = np.array(
            [[_parse_entry(rows[i][j], i, j) for j in range(2)] for i in range(2)],
            dtype=np.complex128,
        )
        return cls(matrix=matrix, label=label)

    def to_json_dict(self) -> dict:
        data = {"matrix": [[[z.real, z.imag] for z in (complex(x) for x in row)] for row in self.matrix]}
        if self.label is not None:
            data["label"] = self.label
        return data
