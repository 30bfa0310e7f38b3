"""Command-line entry point: ``cycpoly <subcommand> ...``.

Results go to stdout as JSON (``--format text`` or ``--pretty`` for a human
rendering).  Errors are reported as JSON on stderr with exit status 1 for
bad input, 2 for exceeded caps and 3 for a failed mathematical check.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional, Sequence

from . import caps
from .errors import CapExceeded, CycPolyError, ParseError, PropertyViolation
from .fixtures import MATROIDS, named
from .graphs import cographic_matroid, cycle_matroid, parse_graph
from .io import format_matroid, parse_matroid, read_text
from .matroid import Matroid, cycles, d, dual
from .minors import find_minor, retract_violation
from .polytope import cycle_polytope, dimension
from .toric import mu
from .verify import Options, run_all

EXIT_INPUT, EXIT_CAP, EXIT_PROPERTY = 1, 2, 3


def _split_labels(s: str) -> List[str]:
    return [x for x in s.replace(",", " ").split() if x]


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    if not os.path.exists(path) and named(path) is not None:
        return format_matroid(named(path))
    return read_text(path)


def _is_graph(text: str) -> bool:
    for ln in text.splitlines():
        ln = ln.split("#", 1)[0].strip()
        if ln:
            return ln.split()[0] == "graph"
    return False


def load_matroid(path: str, use_dual: bool = False) -> Matroid:
    """A matroid from a matroid file, a graph file (``--dual`` for cographic) or a fixture name."""
    text = _read_source(path)
    if _is_graph(text):
        G = parse_graph(text)
        return cographic_matroid(G) if use_dual else cycle_matroid(G)
    M = parse_matroid(text)
    return dual(M) if use_dual else M


def _sets(M: Matroid, masks) -> List[List[str]]:
    return [list(M.to_labels(m)) for m in masks]


# ------------------------------------------------------------- subcommands


def cmd_circuits(args) -> dict:
    M = load_matroid(args.input, args.dual)
    return {"labels": list(M.labels), "circuits": _sets(M, M.circuits)}


def cmd_cycles(args) -> dict:
    M = load_matroid(args.input, args.dual)
    return {"labels": list(M.labels), "cycles": _sets(M, cycles(M).cycles)}


def cmd_polytope(args) -> dict:
    M = load_matroid(args.input, args.dual)
    P = cycle_polytope(M)
    dim = dimension(P)
    if dim != d(M):
        raise PropertyViolation(f"dimension {dim} differs from the coparallel class count {d(M)}")
    return {"labels": list(P.labels), "vertices": [list(v) for v in P.vertices], "dimension": dim}


def cmd_mu(args) -> dict:
    M = load_matroid(args.input, args.dual)
    return mu(M, args.method, args.degree_cap).to_dict()


def _target(spec: str) -> Matroid:
    M = named(spec)
    if M is not None:
        return M
    return load_matroid(spec)


def cmd_minor(args) -> dict:
    M = load_matroid(args.input, args.dual)
    N = _target(args.target)
    kind = "general" if args.kind == "minor" else args.kind
    w = find_minor(M, N, kind)
    return {"target": args.target, "kind": args.kind, "minor_free": w is None,
            "witness": None if w is None else w.to_dict()}


def cmd_retract(args) -> dict:
    M = load_matroid(args.input, args.dual)
    E, Ep = _split_labels(args.E), _split_labels(args.Eprime)
    for lab in E + Ep:
        if lab not in M.index:
            raise ParseError(f"unknown label {lab!r}")
    why = retract_violation(M, E, Ep)
    return {"E": E, "Eprime": Ep, "is_retract": why is None,
            "reason": None if why is None else f"{type(why).__name__}: {why}"}


def cmd_graph(args) -> dict:
    G = parse_graph(_read_source(args.input))
    M = cographic_matroid(G) if args.dual else cycle_matroid(G)
    if args.emit == "matroid":
        return {"_raw": format_matroid(M)}
    return {"kind": "cographic" if args.dual else "graphic", "labels": list(M.labels),
            "matrix": M.matrix_strings(), "circuits": _sets(M, M.circuits)}


def cmd_verify(args) -> dict:
    only = [int(x) for x in _split_labels(args.only)] if args.only else None
    results = run_all(Options(method=args.method, degree_cap=args.degree_cap), only)
    payload = {"results": [r.to_dict() for r in results], "passed": all(r.status != "fail" for r in results)}
    payload["_lines"] = [r.line() for r in results]
    return payload


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cycpoly", description="Cycle polytopes and cycle ideals of binary matroids.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default=None)
    common.add_argument("--pretty", action="store_true", help="human-readable output")
    sub = p.add_subparsers(dest="command", required=True)

    def with_input(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("input", help="matroid file, graph file, fixture name, or - for stdin")
        sp.add_argument("--dual", action="store_true", help="use the dual (cographic for graphs)")
        sp.set_defaults(func=func)
        return sp

    with_input("circuits", cmd_circuits, "list circuits")
    with_input("cycles", cmd_cycles, "list cycles")
    with_input("polytope", cmd_polytope, "cycle polytope vertices and dimension")
    sp = with_input("mu", cmd_mu, "minimal generator degrees of the cycle ideal")
    sp.add_argument("--method", choices=("saturation", "fiber"), default="saturation")
    sp.add_argument("--degree-cap", type=int, default=caps.DEFAULT_DEGREE_CAP)
    sp = with_input("minor", cmd_minor, "minor search against a target")
    sp.add_argument("--target", required=True, help=f"one of {', '.join(sorted(MATROIDS))} or a file")
    sp.add_argument("--kind", choices=("minor", "series", "g-series"), default="minor")
    sp = with_input("retract", cmd_retract, "test a binary matroidal retract")
    sp.add_argument("--E", required=True)
    sp.add_argument("--Eprime", required=True)
    sp = sub.add_parser("graph", parents=[common], help="graphic or cographic matroid of a graph file")
    sp.add_argument("input")
    sp.add_argument("--dual", action="store_true")
    sp.add_argument("--emit", choices=("json", "matroid"), default="json",
                    help="'matroid' writes the matroid file format for piping into other subcommands")
    sp.set_defaults(func=cmd_graph)
    sp = sub.add_parser("verify-paper", parents=[common], help="run the acceptance checks")
    sp.add_argument("--method", choices=("saturation", "fiber"), default=None)
    sp.add_argument("--degree-cap", type=int, default=caps.DEFAULT_DEGREE_CAP)
    sp.add_argument("--only", default=None, help="comma-separated criterion numbers")
    sp.set_defaults(func=cmd_verify)
    return p


def _render_text(payload: dict) -> str:
    if "_lines" in payload:
        return "\n".join(payload["_lines"])
    out = []
    for k, v in payload.items():
        if isinstance(v, list) and v and isinstance(v[0], list):
            out.append(f"{k}:")
            out.extend("  " + " ".join(map(str, row)) for row in v)
        else:
            out.append(f"{k}: {json.dumps(v)}")
    return "\n".join(out)


def _error(exc: BaseException, code: int) -> int:
    sys.stderr.write(json.dumps({"error": type(exc).__name__, "message": str(exc), "exit": code}) + "\n")
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = args.format or ("text" if args.pretty or args.command == "verify-paper" else "json")
    try:
        payload = args.func(args)
    except PropertyViolation as exc:
        return _error(exc, EXIT_PROPERTY)
    except CapExceeded as exc:
        return _error(exc, EXIT_CAP)
    except (CycPolyError, KeyError, ValueError) as exc:
        return _error(exc, EXIT_INPUT)
    if "_raw" in payload:
        sys.stdout.write(payload["_raw"])
        return 0
    if fmt == "text":
        print(_render_text(payload))
    else:
        payload.pop("_lines", None)
        print(json.dumps(payload))
    if args.command == "verify-paper" and not payload["passed"]:
        return EXIT_PROPERTY
    if args.command == "mu" and payload.get("degree_cap_hit") and payload.get("mu") is None:
        return EXIT_CAP
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
