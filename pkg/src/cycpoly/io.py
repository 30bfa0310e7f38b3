"""Plain-text matroid files.

Two layouts are read::

    binary R C            circuits N
    <R rows of C bits>    ground l1 ... lN
    labels l1 ... lC      <one circuit per line>

``#`` starts a comment.
"""

from __future__ import annotations

from typing import List

from .errors import AxiomViolation, FreeMatroid, ParseError
from .matroid import BinaryMatroid, Matroid, from_circuits, from_gf2_matrix


def _content_lines(text: str) -> List[str]:
    out = []
    for ln in text.splitlines():
        ln = ln.split("#", 1)[0].strip()
        if ln:
            out.append(ln)
    return out


def parse_matroid(text: str) -> Matroid:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty matroid file")
    head = lines[0].split()
    try:
        if head[0] == "binary" and len(head) == 3:
            r, c = int(head[1]), int(head[2])
            if len(lines) != r + 2:
                raise ParseError(f"expected {r} rows and a labels line")
            rows = lines[1 : r + 1]
            for row in rows:
                if len(row) != c or set(row) - {"0", "1"}:
                    raise ParseError(f"bad matrix row {row!r}")
            lab = lines[r + 1].split()
            if lab[0] != "labels" or len(lab) != c + 1:
                raise ParseError("labels line must list one label per column")
            return from_gf2_matrix(rows, lab[1:])
        if head[0] == "circuits" and len(head) == 2:
            k = int(head[1])
            ground = lines[1].split() if len(lines) > 1 else []
            if not ground or ground[0] != "ground":
                raise ParseError("missing ground line")
            circ = [ln.split() for ln in lines[2:]]
            if len(circ) != k:
                raise ParseError(f"expected {k} circuits, found {len(circ)}")
            return from_circuits(circ, ground[1:])
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    except (AxiomViolation, KeyError) as exc:
        raise ParseError(f"invalid circuit family: {exc}") from exc
    except FreeMatroid as exc:
        raise ParseError(f"free matroid: {exc}") from exc
    raise ParseError(f"unknown header {lines[0]!r}")


def format_matroid(M: Matroid) -> str:
    if isinstance(M, BinaryMatroid):
        rows = M.matrix_strings()
        body = [f"binary {len(rows)} {M.n}"] + rows + ["labels " + " ".join(M.labels)]
    else:
        body = [f"circuits {len(M.circuits)}", "ground " + " ".join(M.labels)]
        body += [" ".join(M.to_labels(c)) for c in M.circuits]
    return "\n".join(body) + "\n"


def read_text(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
