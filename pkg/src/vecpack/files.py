"""Instance CSV and JSON report I/O."""

from __future__ import annotations

import csv
import io
import json

import numpy as np

from .core import Instance, RawInstance, normalize

NORMALIZED_HEADERS = {("s", "l"): 2, ("s", "l", "t"): 3}
RAW_HEADER = ("size", "load")


class FormatError(ValueError):
    """The input file cannot be parsed."""


def parse_instance(text, rho=None, cap_s=None, cap_l=None) -> Instance:
    """Parse instance CSV text.

    Accepts a normalized ``s,l`` / ``s,l,t`` header, or a raw ``size,load``
    header together with both capacities.  An empty text is an empty 2-D
    instance.  Capacity problems surface as :class:`vecpack.core.PackingError`.
    """
    rows = [r for r in csv.reader(io.StringIO(text)) if r]
    if not rows:
        return Instance(np.zeros((0, 2)), rho=rho)
    header = tuple(h.strip().lower() for h in rows[0])
    if header in NORMALIZED_HEADERS:
        dims = NORMALIZED_HEADERS[header]
    elif header == RAW_HEADER:
        if cap_s is None or cap_l is None:
            raise FormatError("a size,load file needs --cap-s and --cap-l")
        dims = 2
    else:
        raise FormatError(f"unrecognized header {','.join(rows[0])!r}")
    values = []
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != dims:
            raise FormatError(f"line {lineno}: expected {dims} fields")
        try:
            values.append([float(x) for x in row])
        except ValueError:
            raise FormatError(f"line {lineno}: non-numeric field") from None
    w = np.array(values, dtype=np.float64).reshape(-1, dims)
    if not np.all(np.isfinite(w)):
        raise FormatError("weights must be finite")
    if header == RAW_HEADER:
        inst = normalize(RawInstance(w, cap_s, cap_l))
        return inst if rho is None else Instance(inst.weights, rho=rho)
    return Instance(w, rho=rho)


def read_instance(path, **kwargs) -> Instance:
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read(), **kwargs)


def format_instance(weights) -> str:
    w = np.asarray(weights, dtype=np.float64)
    dims = w.shape[1] if w.ndim == 2 else 2
    lines = ["s,l" if dims == 2 else "s,l,t"]
    lines.extend(",".join(repr(x) for x in row) for row in w.tolist())
    return "\n".join(lines) + "\n"


def write_text(path, text):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
