"""Plain-text edge-list format.

The first line is a header ``turan-forge v1 key=value ...``; each following
line is ``<min_id> <max_id>`` in ascending lexicographic order.  Constructed
graphs carry ``t p a n g`` in the header; other graphs at least ``n``.
"""

from __future__ import annotations

import io
import os

import numpy as np

from .errors import InvalidParameterError

MAGIC = "turan-forge"
VERSION = "v1"


def format_header(**fields) -> str:
    return " ".join([MAGIC, VERSION] + [f"{k}={v}" for k, v in fields.items()])


def parse_header(line: str) -> dict[str, int]:
    tokens = line.split()
    if tokens[:2] != [MAGIC, VERSION]:
        raise InvalidParameterError(f"not a {MAGIC} {VERSION} edge list")
    fields = {}
    for tok in tokens[2:]:
        key, sep, value = tok.partition("=")
        if not sep:
            raise InvalidParameterError(f"malformed header field {tok!r}")
        fields[key] = int(value)
    if "n" not in fields:
        raise InvalidParameterError("header is missing the part size n")
    return fields


def dumps(edges: np.ndarray, **header) -> str:
    buf = io.StringIO()
    buf.write(format_header(**header) + "\n")
    for u, v in np.asarray(edges).tolist():
        buf.write(f"{u} {v}\n")
    return buf.getvalue()


def write(path: str | os.PathLike, edges: np.ndarray, **header) -> None:
    # newline="\n" keeps bytes identical across platforms
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(dumps(edges, **header))


def loads(text: str) -> tuple[dict[str, int], np.ndarray]:
    lines = text.splitlines()
    if not lines:
        raise InvalidParameterError("empty edge list")
    header = parse_header(lines[0])
    pairs = []
    for lineno, ln in enumerate(lines[1:], start=2):
        tokens = ln.split()
        if not tokens:
            continue
        if len(tokens) != 2:
            raise InvalidParameterError(f"line {lineno}: expected two vertex ids")
        try:
            pairs.append((int(tokens[0]), int(tokens[1])))
        except ValueError:
            raise InvalidParameterError(f"line {lineno}: non-integer vertex id") from None
    return header, np.array(pairs, dtype=np.int64).reshape(-1, 2)


def read(path: str | os.PathLike) -> tuple[dict[str, int], np.ndarray]:
    with open(path, encoding="ascii") as fh:
        return loads(fh.read())
