"""The on-disk state file format used by the CLI.

A state file is a JSON document:

    {
      "dim": 3,
      "label": "optional free text",
      "matrix": [[[re, im], [re, im], ...], ...]
    }

with the matrix given row-major and every entry as a [real, imaginary]
pair. Values are written in Python's shortest round-trip decimal form, so a
read-back matrix is bit-identical to the one written.
"""

import json
from typing import TextIO

import numpy as np

from .errors import StateFileParseError

__all__ = ["matrix_to_document", "write_state", "read_state"]


def matrix_to_document(matrix: np.ndarray, label: str | None = None) -> dict:
    """Build the JSON document for a complex square matrix."""
    mat = np.asarray(matrix, dtype=complex)
    doc = {
        "dim": int(mat.shape[0]),
        "matrix": [
            [[float(entry.real), float(entry.imag)] for entry in row] for row in mat
        ],
    }
    if label is not None:
        doc["label"] = label
    return doc


def write_state(fp: TextIO, matrix: np.ndarray, label: str | None = None) -> None:
    """Serialize a matrix (plus optional label) as a state file."""
    json.dump(matrix_to_document(matrix, label), fp, indent=1)
    fp.write("\n")


def _parse_entry(entry, where: str) -> complex:
    if (
        not isinstance(entry, (list, tuple))
        or len(entry) != 2
        or not all(isinstance(part, (int, float)) for part in entry)
    ):
        raise StateFileParseError(
            f"ParseError: entry {where} must be a [re, im] number pair, got {entry!r}"
        )
    value = complex(entry[0], entry[1])
    if not (np.isfinite(value.real) and np.isfinite(value.imag)):
        raise StateFileParseError(f"ParseError: entry {where} is not finite")
    return value


def read_state(fp: TextIO) -> tuple[np.ndarray, str | None]:
    """Parse a state file into (raw complex matrix, label).

    Schema problems raise StateFileParseError; whether the matrix is a valid
    density matrix is left to the caller's validation step.
    """
    try:
        doc = json.load(fp)
    except json.JSONDecodeError as err:
        raise StateFileParseError(f"ParseError: invalid JSON ({err})") from err
    if not isinstance(doc, dict):
        raise StateFileParseError("ParseError: top level must be an object")
    dim = doc.get("dim")
    rows = doc.get("matrix")
    if not isinstance(dim, int) or isinstance(dim, bool):
        raise StateFileParseError(f"ParseError: 'dim' must be an integer, got {dim!r}")
    if not isinstance(rows, list) or len(rows) != dim:
        raise StateFileParseError(
            f"ParseError: 'matrix' must be a list of {dim} rows"
        )
    label = doc.get("label")
    if label is not None and not isinstance(label, str):
        raise StateFileParseError(f"ParseError: 'label' must be a string, got {label!r}")
    matrix = np.empty((dim, dim), dtype=complex)
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != dim:
            raise StateFileParseError(
                f"ParseError: row {i} must be a list of {dim} entries"
            )
        for j, entry in enumerate(row):
            matrix[i, j] = _parse_entry(entry, f"[{i}][{j}]")
    return matrix, label
