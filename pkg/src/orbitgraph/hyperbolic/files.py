"""Plain-text generator files: a model header line followed by one matrix
per blank-line-separated block, entries row-major.

Example::

    model uhp
    # the two standard modular generators
    0 -1
    1 0

    1 1
    0 1

Halfspace matrices use Python complex literals (``1+2j``); Lorentz headers
carry the dimension (``model lorentz 3``).
"""

from __future__ import annotations

import numpy as np

from .models import HyperbolicModel, Isometry, model_from_name


def _parse_entry(tok: str, dtype):
    if dtype == np.complex128:
        return complex(tok)
    return float(tok)


def read_generator_file(path) -> list:
    """Parse a generator file into a list of Isometry objects."""
    with open(path, "r", encoding="utf-8") as fh:
        raw = fh.read()
    model = None
    blocks: list = [[]]
    for line in raw.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            if blocks[-1]:
                blocks.append([])
            continue
        if line.lower().startswith("model"):
            parts = line.split()
            name = parts[1] if len(parts) > 1 else ""
            if len(parts) > 2:
                name += parts[2]
            model = model_from_name(name)
            continue
        blocks[-1].append(line)
    if model is None:
        raise ValueError(f"{path}: missing 'model <name>' header")
    if not blocks[-1]:
        blocks.pop()
    dtype = model.identity().dtype
    shape = model.matrix_shape()
    gens = []
    for bi, block in enumerate(blocks):
        rows = [[_parse_entry(t, dtype) for t in line.split()] for line in block]
        mat = np.array(rows, dtype=dtype)
        if mat.shape != shape:
            raise ValueError(
                f"{path}: matrix {bi + 1} has shape {mat.shape}, "
                f"model {model.name} needs {shape}")
        gens.append(Isometry(mat, model))
    if not gens:
        raise ValueError(f"{path}: no matrices found")
    return gens


def _fmt(x) -> str:
    if isinstance(x, complex):
        return repr(x).strip("()")
    return repr(x)


def write_generator_file(path, generators) -> None:
    model = generators[0].model
    header = model.name
    if header.startswith("lorentz"):
        header = f"lorentz {model.n}"
    lines = [f"model {header}", ""]
    for g in generators:
        for row in np.asarray(g.matrix):
            lines.append(" ".join(_fmt(complex(v) if np.iscomplexobj(g.matrix)
                                       else float(v)) for v in row))
        lines.append("")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines))
