"""JSON and CSV encodings for states, operators, and tables.

Schemas:

* exact state:    {"qubits": m, "scale_sqrt2_exponent": s,
                   "amplitudes": [[basis_index, amplitude], ...]}
* exact operator: {"n": n, "scale_sqrt2_exponent": s,
                   "entries": [[row, col, re_num, re_den, im_num, im_den], ...]}
                  (0-based, sparse, sorted row-major)
* float matrix:   {"n": m, "matrix": [[[re, im], ...], ...]} (dense)

JSON output is deterministic: sorted keys, fixed separators, trailing
newline.  Float CSV uses 17 significant digits.
"""

from __future__ import annotations

import json
from fractions import Fraction

import numpy as np

from .exactmat import ScaledGaussianOperator, zeros_fractions
from .separability import ReductionEntry
from .states import ScaledIntState


class ParseError(ValueError):
    """Raised when an input document does not match any known schema."""


def dumps(document) -> str:
    return json.dumps(document, sort_keys=True, indent=2) + "\n"


def state_to_dict(state: ScaledIntState) -> dict:
    return {
        "qubits": state.qubits,
        "scale_sqrt2_exponent": state.scale,
        "amplitudes": [[i, a] for i, a in state.nonzero_items()],
    }


def state_from_dict(document: dict) -> ScaledIntState:
    try:
        qubits = int(document["qubits"])
        scale = int(document["scale_sqrt2_exponent"])
        pairs = document["amplitudes"]
        amplitudes = np.zeros(1 << qubits, dtype=np.int64)
        for index, amplitude in pairs:
            amplitudes[int(index)] = int(amplitude)
        return ScaledIntState(qubits, amplitudes, scale)
    except ParseError:
        raise
    except Exception as exc:
        raise ParseError(f"malformed state document: {exc}") from exc


def operator_to_dict(op: ScaledGaussianOperator) -> dict:
    entries = [
        [r, c, re.numerator, re.denominator, im.numerator, im.denominator]
        for r, c, re, im in op.nonzero_items()
    ]
    return {
        "n": op.qubits,
        "scale_sqrt2_exponent": op.scale,
        "entries": entries,
    }


def operator_from_dict(document: dict) -> ScaledGaussianOperator:
    try:
        n = int(document["n"])
        scale = int(document["scale_sqrt2_exponent"])
        dim = 1 << n
        re = zeros_fractions((dim, dim))
        im = zeros_fractions((dim, dim))
        for row, col, re_num, re_den, im_num, im_den in document["entries"]:
            re[row, col] = Fraction(int(re_num), int(re_den))
            im[row, col] = Fraction(int(im_num), int(im_den))
        return ScaledGaussianOperator(n, re, im, scale)
    except ParseError:
        raise
    except Exception as exc:
        raise ParseError(f"malformed operator document: {exc}") from exc


def float_matrix_to_dict(matrix: np.ndarray) -> dict:
    matrix = np.asarray(matrix, dtype=np.complex128)
    dim = matrix.shape[0]
    qubits = dim.bit_length() - 1
    rows = [
        [[float(v.real), float(v.imag)] for v in row] for row in matrix
    ]
    return {"n": qubits, "matrix": rows}


def float_matrix_from_dict(document: dict) -> np.ndarray:
    try:
        n = int(document["n"])
        dim = 1 << n
        out = np.zeros((dim, dim), dtype=np.complex128)
        rows = document["matrix"]
        if len(rows) != dim:
            raise ParseError(f"expected {dim} rows")
        for r, row in enumerate(rows):
            if len(row) != dim:
                raise ParseError(f"expected {dim} columns in row {r}")
            for c, (re, im) in enumerate(row):
                out[r, c] = complex(float(re), float(im))
        return out
    except ParseError:
        raise
    except Exception as exc:
        raise ParseError(f"malformed matrix document: {exc}") from exc


def load_document(text: str):
    """Parse a JSON document into a state, exact operator, or float matrix."""
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from exc
    if not isinstance(document, dict):
        raise ParseError("expected a JSON object")
    if "amplitudes" in document:
        return state_from_dict(document)
    if "entries" in document:
        return operator_from_dict(document)
    if "matrix" in document:
        return float_matrix_from_dict(document)
    raise ParseError("document matches no known schema")


def operator_float_csv(op, label: str | None = None) -> str:
    """Sparse CSV of an operator's float entries, 17 significant digits."""
    if isinstance(op, ScaledGaussianOperator):
        matrix = op.to_complex()
    else:
        matrix = np.asarray(op, dtype=np.complex128)
    lines = ["row,col,re,im"] if label is None else [f"# {label}", "row,col,re,im"]
    rows, cols = np.nonzero(matrix)
    for r, c in zip(rows, cols):
        v = matrix[r, c]
        lines.append(f"{r},{c},{v.real:.17g},{v.imag:.17g}")
    return "\n".join(lines) + "\n"


def table_to_csv(rows: list[ReductionEntry]) -> str:
    lines = ["m,distance,numerator,denominator,decimal"]
    for row in rows:
        lines.append(
            f"{row.m},{row.distance},{row.numerator},{row.denominator},{row.decimal:.4f}"
        )
    return "\n".join(lines) + "\n"


def table_to_json(rows: list[ReductionEntry]) -> str:
    payload = [
        {
            "m": row.m,
            "distance": row.distance,
            "numerator": row.numerator,
            "denominator": row.denominator,
            "decimal": round(row.decimal, 4),
        }
        for row in rows
    ]
    return dumps(payload)
