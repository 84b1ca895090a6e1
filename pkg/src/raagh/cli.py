"""Command-line interface.

Subcommands:

- compute      analyse a graph file: Betti numbers, m2, h bounds, exact value
- generate     emit a catalog family graph in any of the text formats
- form         print the symbolic cup-form template, or its value at --alpha
- export       convert between graph formats / DOT
- verify-paper rerun the pinned acceptance corpus and print a pass/fail table

Exit codes: 0 success, 1 failed verification, 2 bad input (unreadable or
malformed), 3 exhaustive scan refused in --strict mode.  Output is byte
deterministic unless --timings is given.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time

from .form import AlphaVector, build_cup_form, dump_matrix, dump_template, substitute
from .graphs import (FORMATS, FamilyCertificate, Graph, ParseError,
                     generate_family, parse_graph, serialize_graph, to_dot)
from .hbounds import DecompositionReport, ExactValue, HReport, compute_h
from .solver import DEFAULT_CONFIG, CapExceeded, SolverConfig
from .verification import ACCEPTANCE_CHECKS, run_acceptance

SCHEMA_VERSION = 1


# --------------------------------------------------------------------------
# report documents
# --------------------------------------------------------------------------

def _graph_digest(g: Graph) -> str:
    payload = f"{g.n};" + ",".join(f"{u}-{v}" for u, v in g.edges)
    return hashlib.sha256(payload.encode()).hexdigest()


def _exact_dict(exact: ExactValue | None):
    if exact is None:
        return None
    return {"value": exact.value, "provenance": exact.provenance,
            "theorem_grade": exact.theorem_grade}


def _decomposition_dict(decomp: DecompositionReport | None):
    if decomp is None:
        return None
    pieces = []
    for piece in decomp.pieces:
        rep = piece.report
        pieces.append({
            "vertices": list(piece.vertices),
            "b2": rep.b2,
            "b4": rep.b4,
            "m2": rep.m2.m2 if rep.m2 else None,
            "exhaustive": bool(rep.m2 and rep.m2.exhaustive),
            "exact": _exact_dict(rep.exact),
        })
    return {
        "free_edges": [list(e) for e in decomp.free_edges],
        "pieces": pieces,
        "aggregate_exact": _exact_dict(decomp.aggregate_exact),
    }


def report_document(g: Graph, report: HReport, config: SolverConfig,
                    requested_mode: str, elapsed: float | None = None) -> dict:
    """JSON-ready report with a fixed key order (see report.schema.json)."""
    doc = {
        "schema_version": SCHEMA_VERSION,
        "input": {
            "vertices": g.n,
            "edges": len(g.edges),
            "sha256": _graph_digest(g),
        },
        "invariants": {
            "betti": list(report.betti_numbers),
            "b1": report.betti_numbers[1] if len(report.betti_numbers) > 1 else 0,
            "b2": report.b2,
            "b4": report.b4,
        },
        "m2": {
            "value": report.m2.m2 if report.m2 else None,
            "witness": report.m2.witness.to_bitstring() if report.m2 else None,
            "radical_dim": report.m2.radical_dim if report.m2 else None,
            "exhaustive": bool(report.m2 and report.m2.exhaustive),
            "mode": report.m2_mode,
        },
        "bounds": {
            "lower_trivial": report.lower_trivial,
            "lower_cohomological": report.lower_cohomological,
            "upper": report.upper,
        },
        "exact": _exact_dict(report.exact),
        "decomposition": _decomposition_dict(report.decomposition),
        "solver": {
            "cap": config.cap,
            "workers": config.workers,
            "mode": requested_mode,
        },
    }
    if elapsed is not None:
        doc["timings"] = {"total_seconds": round(elapsed, 3)}
    return doc


def render_text_report(report: HReport) -> str:
    g = report.graph
    lines = [f"graph: {g.n} vertices, {len(g.edges)} edges"]
    lines.append("betti: " + " ".join(str(b) for b in report.betti_numbers))
    if report.m2 is not None:
        cert = "certified" if report.m2.exhaustive else "not certified"
        lines.append(f"m2: {report.m2.m2} ({report.m2_mode}, {cert}; "
                     f"witness alpha={report.m2.witness.to_bitstring() or '-'}; "
                     f"radical dim {report.m2.radical_dim})")
    lines.append(f"bounds: {report.lower_trivial} <= h <= {report.upper}"
                 f" (cohomological lower bound {report.lower_cohomological})")
    if report.exact is not None:
        grade = "theorem" if report.exact.theorem_grade else "conjectural"
        lines.append(f"exact: h = {report.exact.value} "
                     f"[{report.exact.provenance}, {grade}]")
    else:
        lines.append("exact: unknown")
    decomp = report.decomposition
    if decomp is not None:
        lines.append(f"decomposition: {decomp.r} free edges, "
                     f"{len(decomp.pieces)} pieces")
        for piece in decomp.pieces:
            rep = piece.report
            exact = (f"h={rep.exact.value} [{rep.exact.provenance}]"
                     if rep.exact else "h unknown")
            verts = ",".join(str(v) for v in piece.vertices)
            lines.append(f"  piece {{{verts}}}: b2={rep.b2} "
                         f"m2={rep.m2.m2 if rep.m2 else '-'} {exact}")
        if decomp.aggregate_exact is not None:
            lines.append(f"  aggregate: h = {decomp.aggregate_exact.value}")
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# shared plumbing
# --------------------------------------------------------------------------

def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_output(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _env_int(name: str) -> int | None:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise ParseError(f"environment variable {name} must be an integer, "
                         f"got {raw!r}") from None


def _solver_config(args) -> SolverConfig:
    cap = args.cap if args.cap is not None else _env_int("RAAGH_CAP")
    workers = (args.workers if args.workers is not None
               else _env_int("RAAGH_WORKERS"))
    return SolverConfig(
        cap=cap if cap is not None else DEFAULT_CONFIG.cap,
        workers=workers if workers is not None else DEFAULT_CONFIG.workers,
    )


# --------------------------------------------------------------------------
# subcommands
# --------------------------------------------------------------------------

def cmd_compute(args) -> int:
    g = parse_graph(_read_input(args.input), args.format)
    config = _solver_config(args)
    requested = "heuristic" if args.heuristic else "exhaustive"
    start = time.perf_counter()
    report = compute_h(g, config, heuristic=args.heuristic, strict=args.strict)
    elapsed = time.perf_counter() - start
    if args.json:
        doc = report_document(g, report, config, requested,
                              elapsed if args.timings else None)
        text = json.dumps(doc, indent=2) + "\n"
    else:
        text = render_text_report(report)
        if args.timings:
            text += f"time: {elapsed:.3f}s\n"
    _write_output(text, args.out)
    return 0


def _parse_cells(raw: str):
    cells = []
    for chunk in raw.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = chunk.split(",")
        if len(parts) != 2:
            raise ParseError(f"bad grid cell {chunk!r}, expected x,y")
        try:
            cells.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"bad grid cell {chunk!r}, expected integers") from None
    if not cells:
        raise ParseError("grid needs at least one cell")
    return cells


def cmd_generate(args) -> int:
    family = args.family
    try:
        if family == "edgeless":
            cert = FamilyCertificate.edgeless(args.n)
        elif family == "complete":
            cert = FamilyCertificate.complete(args.n)
        elif family == "clique-string":
            cert = FamilyCertificate.clique_string(args.size, args.count)
        elif family == "face-string":
            cert = FamilyCertificate.face_string(args.count)
        elif family == "grid":
            cert = FamilyCertificate.grid(_parse_cells(args.cells))
        else:
            cert = FamilyCertificate.hex_triangle(args.side)
        g = generate_family(cert)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    _write_output(serialize_graph(g, args.format), args.out)
    return 0


def cmd_form(args) -> int:
    g = parse_graph(_read_input(args.input), args.format)
    template = build_cup_form(g)
    if args.alpha is None:
        text = dump_template(template)
    else:
        try:
            alpha = AlphaVector.from_bitstring(args.alpha)
            matrix = substitute(template, alpha)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
        text = dump_matrix(matrix)
    _write_output(text, args.out)
    return 0


def cmd_export(args) -> int:
    g = parse_graph(_read_input(args.input), args.format)
    target = "dot" if args.dot else args.to
    text = to_dot(g) if target == "dot" else serialize_graph(g, target)
    _write_output(text, args.out)
    return 0


def cmd_verify_paper(args) -> int:
    wanted = set(args.only) if args.only else None
    if wanted:
        known = {check_id for check_id, _, _ in ACCEPTANCE_CHECKS}
        unknown = wanted - known
        if unknown:
            raise ParseError("unknown check ids: " + ", ".join(sorted(unknown)))
    results = run_acceptance(wanted)
    width = max(len(r.check_id) for r in results)
    lines = []
    for r in results:
        mark = "PASS" if r.passed else "FAIL"
        lines.append(f"{mark}  {r.check_id.ljust(width)}  {r.description}")
        lines.append(f"      {' ' * width}  {r.detail}")
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} checks passed")
    _write_output("\n".join(lines) + "\n", args.out)
    return 0 if passed == len(results) else 1


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="raagh",
        description="h bounds and cup-form invariants for graph groups")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("input", help="graph file, or - for stdin")
        p.add_argument("--format", choices=FORMATS, default="edges",
                       help="input format (default: edges)")

    def add_out(p):
        p.add_argument("--out", help="write output to this file instead of stdout")

    p = sub.add_parser("compute", help="analyse a graph")
    add_input(p)
    add_out(p)
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    p.add_argument("--cap", type=int, default=None,
                   help="largest b4 the exhaustive scan accepts "
                        "(env RAAGH_CAP, default 28)")
    p.add_argument("--workers", type=int, default=None,
                   help="processes for the scan (env RAAGH_WORKERS, default 1)")
    p.add_argument("--heuristic", action="store_true",
                   help="trial functionals only; certifies just at the parity ceiling")
    p.add_argument("--strict", action="store_true",
                   help="fail (exit 3) instead of falling back to the heuristic "
                        "when b4 exceeds the cap")
    p.add_argument("--timings", action="store_true",
                   help="include wall-clock timing; breaks byte determinism")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("generate", help="emit a catalog family graph")
    p.add_argument("family", choices=("edgeless", "complete", "clique-string",
                                      "face-string", "grid", "hex-triangle"))
    p.add_argument("--n", type=int, default=0, help="vertices (edgeless/complete)")
    p.add_argument("--size", type=int, default=4,
                   help="clique size 4..7 (clique-string)")
    p.add_argument("--count", type=int, default=1,
                   help="number of cliques (clique-string/face-string)")
    p.add_argument("--cells", default="0,0",
                   help="grid cells as x,y;x,y;... (grid)")
    p.add_argument("--side", type=int, default=1, help="side length (hex-triangle)")
    p.add_argument("--format", choices=FORMATS, default="edges",
                   help="output format (default: edges)")
    add_out(p)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("form", help="print the cup-form template or a value")
    add_input(p)
    add_out(p)
    p.add_argument("--alpha", default=None,
                   help="0/1 string, position q = coefficient of 4-clique q; "
                        "prints the substituted GF(2) matrix")
    p.set_defaults(func=cmd_form)

    p = sub.add_parser("export", help="convert a graph to another format")
    add_input(p)
    add_out(p)
    p.add_argument("--to", choices=FORMATS + ("dot",), default="edges",
                   help="output format (default: edges)")
    p.add_argument("--dot", action="store_true", help="shorthand for --to dot")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("verify-paper",
                       help="rerun the pinned acceptance corpus")
    p.add_argument("--only", action="append", metavar="CHECK",
                   help="run a single named check (repeatable)")
    add_out(p)
    p.set_defaults(func=cmd_verify_paper)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: cannot read {exc.filename}", file=sys.stderr)
        return 2
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
