"""Command-line front end: enumerate, analyze, transform, export, tables.

Graphs travel between commands as dart-code streams (see planegraph.decode):
`#` lines are comments, a line starting `{` is one JSON-encoded graph, and
anything else is read as whitespace-separated text blocks.  All commands
accept `-` for stdin/stdout.  The `tables` command diffs the census against
the embedded catalog and is the regression gate for the whole pipeline.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from typing import Iterable, Optional, TextIO

from .catalog import rows_for
from .census import HedriteRecord, enumerate_hedrites, iter_census, match_catalog
from .circuits import cc_vector, central_circuits, intersection_vector, is_balanced, is_pure
from .links import dt_text, gauss_text, to_link
from .planegraph import PlaneGraph, decode, encode
from .structure import (
    classify_family,
    is_irreducible,
    rail_roads,
    shift,
    vertex_connectivity_class,
)
from .symmetry import point_group
from .transform import goldberg_coxeter, inflate_all, inflate_circuit, reduce

__all__ = ["main"]


# -- stream plumbing -----------------------------------------------------------


def _read_graphs(path: str) -> list[PlaneGraph]:
    """Parse a dart-code stream: comments, JSON lines, text blocks."""
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="ascii") as fh:
            text = fh.read()
    graphs = []
    tokens: list[str] = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("{"):
            if tokens:
                raise ValueError("JSON graph interrupts an unfinished text block")
            graphs.append(decode(line))
            continue
        tokens.extend(line.split())
        while tokens:
            try:
                n = int(tokens[0])
            except ValueError:
                raise ValueError(f"expected a vertex count, got {tokens[0]!r}")
            need = 1 + 8 * n
            if len(tokens) < need:
                break  # block continues on later lines
            graphs.append(decode(" ".join(tokens[:need])))
            tokens = tokens[need:]
    if tokens:
        raise ValueError(f"trailing dart-code fragment of {len(tokens)} tokens")
    return graphs


def _open_out(path: str) -> TextIO:
    return sys.stdout if path == "-" else open(path, "w", encoding="ascii")


def _graph_obj(g: PlaneGraph) -> dict:
    return json.loads(encode(g, "json"))


def _record_obj(rec: HedriteRecord) -> dict:
    """One jsonl record; carries n/theta/rotation so decode() accepts it."""
    fam = rec.family
    obj = _graph_obj(rec.graph)
    obj.update(
        i=rec.i,
        id=rec.local_id,
        group=rec.point_group,
        cc=rec.cc_vector,
        irreducible=rec.irreducible,
        pure=rec.pure,
        balanced=rec.balanced,
        three_connected=rec.three_connected,
        family=None if fam is None or fam.kind == "none" else {"kind": fam.kind, "m": fam.m},
        catalog=match_catalog(rec),
    )
    return obj


def _emit_records(records: Iterable[HedriteRecord], fmt: str, out: TextIO) -> int:
    count = 0
    for rec in records:
        if fmt == "jsonl":
            out.write(json.dumps(_record_obj(rec), separators=(",", ":")) + "\n")
        else:
            out.write(rec.header() + "\n")
            out.write(encode(rec.graph))
            out.write("\n")
        count += 1
    return count


# -- enumerate -------------------------------------------------------------------


def cmd_enumerate(args: argparse.Namespace) -> int:
    i_values = [args.i] if args.i is not None else list(range(4, 9))
    if args.n is not None:
        cells = [(i, args.n) for i in i_values]
    else:
        cells = [(i, n) for i in i_values for n in range(2, args.n_max + 1)]
    out = _open_out(args.output)
    try:
        for i, n in cells:
            _emit_records(enumerate_hedrites(i, n), args.format, out)
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


# -- analyze ---------------------------------------------------------------------


def _analysis(g: PlaneGraph) -> dict:
    fv = g.face_vector()
    i = fv.i_value if g.is_i_hedrite() else None
    circuits = central_circuits(g)
    obj = _graph_obj(g)
    obj["i"] = i
    obj["faces"] = {str(k): fv.p[k] for k in sorted(fv.p)}
    obj["group"] = point_group(g)
    obj["cc"] = cc_vector(g).text()
    obj["circuits"] = [
        {
            "length": c.length,
            "self_intersections": c.self_intersections,
            "int": intersection_vector(g, c).text(),
        }
        for c in circuits
    ]
    obj["pure"] = is_pure(g)
    obj["balanced"] = is_balanced(g)

    fam = classify_family(g)
    structure = {
        "irreducible": is_irreducible(g),
        "railroads": [
            {"faces": list(r.faces), "self_intersecting": r.self_intersecting}
            for r in rail_roads(g)
        ],
        "connectivity": vertex_connectivity_class(g),
        "family": None if fam.kind == "none" else {"kind": fam.kind, "m": fam.m},
        "shift": None,
    }
    if i == 4 and len(circuits) == 2:
        structure["shift"] = list(shift(g))
    obj["structure"] = structure

    link = to_link(g)
    obj["link"] = {
        "components": len(link.components),
        "composite": link.composite,
        "gauss": gauss_text(link),
        "dt": dt_text(link) if len(link.components) == 1 else None,
    }

    obj["catalog"] = None
    if i is not None and g.n_vertices <= 15:
        sig = (obj["group"], obj["cc"])
        hits = [r for r in rows_for(i, g.n_vertices) if (r.group, r.cc) == sig]
        if len(hits) == 1:
            obj["catalog"] = hits[0].catalog_id
    return obj


def cmd_analyze(args: argparse.Namespace) -> int:
    try:
        graphs = _read_graphs(args.input)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    report = [_analysis(g) for g in graphs]
    out = _open_out(args.output)
    try:
        json.dump(report, out, indent=2)
        out.write("\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


# -- transform -------------------------------------------------------------------


def _parse_pair(text: str, sep: str, what: str) -> tuple[int, int]:
    parts = text.split(sep)
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"{what} must be two integers joined by {sep!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"{what} must be two integers joined by {sep!r}")


def _gc_pair(text: str) -> tuple[int, int]:
    return _parse_pair(text, ",", "--gc")


def _circuit_step(text: str) -> tuple[int, int]:
    return _parse_pair(text, ":", "--inflate-circuit")


def _apply_transform(g: PlaneGraph, args: argparse.Namespace) -> PlaneGraph:
    if args.medial:
        return g.medial()
    if args.gc is not None:
        k, l = args.gc
        return goldberg_coxeter(g, k, l)
    if args.inflate is not None:
        return inflate_all(g, args.inflate)
    if args.inflate_circuit is not None:
        idx, t = args.inflate_circuit
        circuits = central_circuits(g)
        if not 0 <= idx < len(circuits):
            raise ValueError(f"graph has {len(circuits)} circuits, no index {idx}")
        return inflate_circuit(g, circuits[idx], t)
    idx = args.reduce
    roads = rail_roads(g)
    if not 0 <= idx < len(roads):
        raise ValueError(f"graph has {len(roads)} rail-roads, no index {idx}")
    return reduce(g, roads[idx])


def cmd_transform(args: argparse.Namespace) -> int:
    try:
        graphs = _read_graphs(args.input)
        results = [_apply_transform(g, args) for g in graphs]
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    out = _open_out(args.output)
    try:
        for g in results:
            if args.format == "json":
                out.write(encode(g, "json") + "\n")
            else:
                out.write(encode(g))
                out.write("\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


# -- export ----------------------------------------------------------------------


def cmd_export(args: argparse.Namespace) -> int:
    try:
        graphs = _read_graphs(args.input)
        lines = []
        for g in graphs:
            link = to_link(g)
            lines.append(gauss_text(link) if args.format == "gauss" else dt_text(link))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    out = _open_out(args.output)
    try:
        for line in lines:
            out.write(line + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


# -- tables ----------------------------------------------------------------------


def cmd_tables(args: argparse.Namespace) -> int:
    by_cell: dict[tuple[int, int], Counter] = {
        (i, n): Counter()
        for i in range(4, 9)
        for n in range(2, args.n_max + 1)
    }
    for rec in iter_census(args.n_max, threads=args.threads):
        by_cell[(rec.i, rec.n)][(rec.point_group, rec.cc_vector)] += 1

    passed = 0
    for (i, n), census in sorted(by_cell.items()):
        catalog = Counter((r.group, r.cc) for r in rows_for(i, n))
        total = sum(census.values())
        if census == catalog:
            passed += 1
            print(f"PASS i={i} n={n} graphs={total}")
            continue
        print(f"FAIL i={i} n={n} census={total} catalog={sum(catalog.values())}")
        for group, cc in sorted(census - catalog):
            print(f"  census only: {group} {cc}")
        for group, cc in sorted(catalog - census):
            print(f"  catalog only: {group} {cc}")
    cells = len(by_cell)
    print(f"summary: {passed}/{cells} cells match")
    return 0 if passed == cells else 1


# -- parser ----------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hedrite",
        description="Enumerate and analyze 4-valent plane graphs with 2-, 3- and 4-gonal faces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="generate all i-hedrites for given i and n")
    p.add_argument("--i", type=int, choices=range(4, 9), help="face-vector class (default: all)")
    p.add_argument("--n", type=int, help="exact vertex count")
    p.add_argument("--n-max", type=int, help="sweep vertex counts 2..N")
    p.add_argument("--format", choices=("text", "jsonl"), default="text")
    p.add_argument("--output", default="-", help="output file (default: stdout)")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("analyze", help="full JSON report for each input graph")
    p.add_argument("--input", default="-", help="dart-code file (default: stdin)")
    p.add_argument("--output", default="-")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("transform", help="apply one map operation to each input graph")
    p.add_argument("--input", default="-")
    p.add_argument("--output", default="-")
    p.add_argument("--format", choices=("text", "json"), default="text")
    verb = p.add_mutually_exclusive_group(required=True)
    verb.add_argument("--medial", action="store_true", help="medial graph")
    verb.add_argument("--gc", type=_gc_pair, metavar="K,L", help="Goldberg-Coxeter GC_{k,l}")
    verb.add_argument("--inflate", type=int, metavar="T", help="inflate every circuit T-fold")
    verb.add_argument(
        "--inflate-circuit",
        type=_circuit_step,
        metavar="IDX:T",
        help="inflate circuit IDX (central_circuits order) T-fold",
    )
    verb.add_argument("--reduce", type=int, metavar="IDX", help="collapse rail-road IDX")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("export", help="write link codes, one line per graph")
    p.add_argument("--input", default="-")
    p.add_argument("--output", default="-")
    p.add_argument("--format", choices=("gauss", "dt"), required=True)
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("tables", help="diff the census against the embedded catalog")
    p.add_argument("--n-max", type=int, default=15, help="largest vertex count (2..15)")
    p.add_argument("--threads", type=int, help="worker processes (HEDRITE_THREADS also caps)")
    p.set_defaults(func=cmd_tables)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "enumerate":
        if (args.n is None) == (args.n_max is None):
            parser.error("enumerate needs exactly one of --n / --n-max")
        if args.n is not None and args.n < 1:
            parser.error("--n must be at least 1")
        if args.n_max is not None and args.n_max < 2:
            parser.error("--n-max must be at least 2")
    if args.command == "transform":
        if args.gc is not None and not (args.gc[0] >= 1 and args.gc[1] >= 0):
            parser.error("--gc needs k >= 1, l >= 0")
        if args.inflate is not None and args.inflate < 1:
            parser.error("--inflate must be at least 1")
        if args.inflate_circuit is not None and args.inflate_circuit[1] < 1:
            parser.error("--inflate-circuit step must be at least 1")
    if args.command == "tables" and not 2 <= args.n_max <= 15:
        parser.error("--n-max must lie in 2..15 (the catalog stops at 15)")
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
