"""Matrix file formats for the CLI and tests.

JSON: {"rows": n, "cols": m, "re": [...], "im": [...]} row-major ("im"
optional for real matrices).  CSV: one row per line, entries as Python
complex literals like "1.5+2j" or plain reals.
"""
import json

import numpy as np

from .errors import DomainError


def load_matrix(path):
    path = str(path)
    if path.endswith(".json"):
        with open(path) as fh:
            doc = json.load(fh)
        try:
            rows, cols = int(doc["rows"]), int(doc["cols"])
            re = np.asarray(doc["re"], dtype=float)
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"bad matrix JSON in {path}: {exc}") from exc
        im = np.asarray(doc.get("im", np.zeros_like(re)), dtype=float)
        if re.size != rows * cols or im.size != rows * cols:
            raise DomainError(
                f"matrix JSON in {path}: entry count {re.size} != "
                f"rows*cols {rows * cols}")
        return (re + 1j * im).reshape(rows, cols)
    # CSV of complex literals
    out = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            try:
                out.append([complex(tok.strip().replace("i", "j"))
                            for tok in line.split(",")])
            except ValueError as exc:
                raise DomainError(f"bad CSV entry in {path}: {exc}") from exc
    if not out or len({len(r) for r in out}) != 1:
        raise DomainError(f"ragged or empty CSV matrix in {path}")
    return np.asarray(out, dtype=complex)


def save_matrix_json(path, m):
    m = np.asarray(m, dtype=complex)
    doc = {"rows": m.shape[0], "cols": m.shape[1],
           "re": m.real.ravel().tolist(), "im": m.imag.ravel().tolist()}
    with open(path, "w") as fh:
        json.dump(doc, fh)
