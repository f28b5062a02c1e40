"""
Plain-text file formats.

Matrix / vector::

    rows cols
    v v v ...        (one line per row, 17 significant digits)

Vectors are written as n x 1 matrices; either orientation is read back.

Index set::

    count
    i i i ...

Certificate: ``key value`` header lines (mode, k, s, w, C*), then the
witness as ``witness n`` followed by its values, then ``T`` and ``S`` each as
``name count`` followed by the indices. Blank lines and ``#`` comments are
ignored everywhere.
"""

import logging
from pathlib import Path
from typing import Iterator, List, Tuple

import numpy as np

from errors import ParseError
from nsp_verifier.model import NspCertificate, NspMode

logger = logging.getLogger(__name__)


def fmt(value: float) -> str:
    return "%.17g" % value


def _lines(path) -> Iterator[Tuple[int, List[str]]]:
    """(1-based line number, tokens) for every non-empty line."""
    with open(path, encoding="utf-8") as handle:
        for number, raw in enumerate(handle, start=1):
            tokens = raw.split("#", 1)[0].split()
            if tokens:
                yield number, tokens


def _int(path, number, token, what) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(path, number, f"{what} must be an integer, got '{token}'") from None


def _floats(path, number, tokens) -> List[float]:
    try:
        return [float(t) for t in tokens]
    except ValueError as e:
        raise ParseError(path, number, f"bad number: {e}") from None


def _read_values(path, lines, count: int, start_number: int, what: str) -> np.ndarray:
    values: List[float] = []
    number = start_number
    while len(values) < count:
        item = next(lines, None)
        if item is None:
            raise ParseError(path, number + 1, f"{what}: expected {count} values, found {len(values)}")
        number, tokens = item
        values.extend(_floats(path, number, tokens))
        if len(values) > count:
            raise ParseError(path, number, f"{what}: more than {count} values")
    return np.array(values, dtype=np.float64)


def write_matrix(path, matrix) -> Path:
    matrix = np.atleast_2d(np.asarray(matrix, dtype=np.float64))
    path = Path(path)
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(f"{matrix.shape[0]} {matrix.shape[1]}\n")
        for row in matrix:
            handle.write(" ".join(fmt(v) for v in row) + "\n")
    return path


def write_vector(path, vector) -> Path:
    return write_matrix(path, np.asarray(vector, dtype=np.float64).reshape(-1, 1))


def read_matrix(path) -> np.ndarray:
    lines = _lines(path)
    item = next(lines, None)
    if item is None:
        raise ParseError(path, 1, "empty file, expected 'rows cols'")
    number, header = item
    if len(header) != 2:
        raise ParseError(path, number, "expected 'rows cols'")
    rows = _int(path, number, header[0], "rows")
    cols = _int(path, number, header[1], "cols")
    if rows < 1 or cols < 1:
        raise ParseError(path, number, f"dimensions must be positive, got {rows}x{cols}")
    values = _read_values(path, lines, rows * cols, number, "matrix")
    extra = next(lines, None)
    if extra is not None:
        raise ParseError(path, extra[0], "unexpected data after matrix")
    if not np.all(np.isfinite(values)):
        raise ParseError(path, number, "matrix contains non-finite values")
    return values.reshape(rows, cols)


def read_vector(path) -> np.ndarray:
    matrix = read_matrix(path)
    if 1 not in matrix.shape:
        raise ParseError(path, 1, f"expected a vector, got a {matrix.shape[0]}x{matrix.shape[1]} matrix")
    return matrix.ravel()


def write_index_set(path, indices) -> Path:
    indices = np.asarray(indices, dtype=np.int64).ravel()
    path = Path(path)
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(f"{indices.size}\n")
        handle.write(" ".join(str(int(i)) for i in indices) + "\n")
    return path


def _read_indices(path, lines, count: int, number: int, what: str) -> np.ndarray:
    indices: List[int] = []
    while len(indices) < count:
        item = next(lines, None)
        if item is None:
            raise ParseError(path, number + 1, f"{what}: expected {count} indices, found {len(indices)}")
        number, tokens = item
        indices.extend(_int(path, number, t, "index") for t in tokens)
        if len(indices) > count:
            raise ParseError(path, number, f"{what}: more than {count} indices")
    if any(i < 0 for i in indices):
        raise ParseError(path, number, f"{what}: negative index")
    return np.array(indices, dtype=np.int64)


def read_index_set(path) -> np.ndarray:
    lines = _lines(path)
    item = next(lines, None)
    if item is None:
        raise ParseError(path, 1, "empty file, expected the index count")
    number, header = item
    if len(header) != 1:
        raise ParseError(path, number, "expected the index count alone on the first line")
    count = _int(path, number, header[0], "count")
    indices = _read_indices(path, lines, count, number, "index set")
    extra = next(lines, None)
    if extra is not None:
        raise ParseError(path, extra[0], "unexpected data after index set")
    return np.sort(indices)


def format_certificate(certificate: NspCertificate) -> str:
    lines = [
        f"mode {certificate.mode.value}",
        f"k {certificate.k}",
        f"s {certificate.s}",
        f"w {fmt(certificate.weight)}",
        f"C* {fmt(certificate.optimal_constant)}",
        f"witness {certificate.witness.size}",
        " ".join(fmt(v) for v in certificate.witness),
        f"T {certificate.witness_T.size}",
        " ".join(str(int(i)) for i in certificate.witness_T),
        f"S {certificate.witness_S.size}",
        " ".join(str(int(i)) for i in certificate.witness_S),
    ]
    return "\n".join(lines) + "\n"


def write_certificate(path, certificate: NspCertificate) -> Path:
    path = Path(path)
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(format_certificate(certificate))
    return path


def read_certificate(path) -> NspCertificate:
    lines = _lines(path)
    header = {}
    number = 0
    for key in ("mode", "k", "s", "w", "C*", "witness"):
        item = next(lines, None)
        if item is None:
            raise ParseError(path, number + 1, f"missing '{key}' line")
        number, tokens = item
        if len(tokens) != 2 or tokens[0] != key:
            raise ParseError(path, number, f"expected '{key} <value>'")
        header[key] = (number, tokens[1])

    number, mode = header["mode"]
    try:
        mode = NspMode(mode)
    except ValueError:
        raise ParseError(path, number, f"unknown mode '{mode}'") from None
    k = _int(path, header["k"][0], header["k"][1], "k")
    s = _int(path, header["s"][0], header["s"][1], "s")
    weight = _floats(path, header["w"][0], [header["w"][1]])[0]
    constant = _floats(path, header["C*"][0], [header["C*"][1]])[0]
    number, length = header["witness"]
    witness = _read_values(path, lines, _int(path, number, length, "witness length"), number, "witness")

    sets = {}
    for name in ("T", "S"):
        item = next(lines, None)
        if item is None:
            raise ParseError(path, number + 1, f"missing '{name}' line")
        number, tokens = item
        if len(tokens) != 2 or tokens[0] != name:
            raise ParseError(path, number, f"expected '{name} <count>'")
        count = _int(path, number, tokens[1], f"{name} count")
        sets[name] = _read_indices(path, lines, count, number, name)
    return NspCertificate(mode=mode, k=k, s=s, weight=weight, optimal_constant=constant,
                          witness=witness, witness_T=sets["T"], witness_S=sets["S"])
