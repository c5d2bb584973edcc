"""Command-line interface: ``bei <command> ...`` (also ``python -m bei``).

Exit codes: 0 success, 1 usage, 2 invalid graph, 3 size guard exceeded,
4 a verification or formula/oracle disagreement was found.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
import time
from dataclasses import asdict
from pathlib import Path
from typing import Any, Optional

from .classes import ClassReport, classify
from .constructions import build_named, clique_fan, depth_target, minimal_dense_cw
from .depth import cm_classify_cw, depth_dispatch
from .graph import Graph, GraphError, is_connected, validate_graph
from .oracle import OracleGuardError

EXIT_OK, EXIT_USAGE, EXIT_GRAPH, EXIT_GUARD, EXIT_MISMATCH = 0, 1, 2, 3, 4

log = logging.getLogger("bei")


class UsageError(Exception):
    pass


# -- graph files -------------------------------------------------------------

def parse_graph(text: str) -> Graph:
    """Parse the text format (``n`` then ``u v`` per line, ``#`` comments) or the
    JSON format ``{"n": int, "edges": [[u, v], ...]}``."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _parse_json(stripped)
    return _parse_text(text)


def _parse_json(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"line {exc.lineno}: malformed JSON ({exc.msg})") from None
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise GraphError('JSON graph needs keys "n" and "edges"')
    edges = data["edges"]
    if not isinstance(edges, list) or not all(isinstance(e, list) for e in edges):
        raise GraphError('"edges" must be a list of [u, v] pairs')
    for k, e in enumerate(edges):
        _check_edge(data["n"], e, edges[:k], f"edge #{k + 1}")
    return validate_graph(data["n"], [tuple(e) for e in edges])


def _check_edge(n, e, earlier, where: str) -> None:
    try:
        validate_graph(n, list(earlier) + [e])
    except GraphError as exc:
        raise GraphError(f"{where}: {exc}") from None


def _parse_text(text: str) -> Graph:
    n: Optional[int] = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        try:
            values = [int(t) for t in tokens]
        except ValueError:
            raise GraphError(f"line {lineno}: expected integers, got {line!r}") from None
        if n is None:
            if len(values) != 1:
                raise GraphError(f"line {lineno}: first line must hold the vertex count")
            n = values[0]
            if n < 1:
                raise GraphError(f"line {lineno}: vertex count must be positive")
            continue
        if len(values) != 2:
            raise GraphError(f"line {lineno}: an edge line holds exactly two vertices")
        edge = (values[0], values[1])
        _check_edge(n, edge, edges, f"line {lineno}")
        edges.append(edge)
    if n is None:
        raise GraphError("empty graph file")
    return validate_graph(n, edges)


def serialize_graph(g: Graph, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps({"n": g.n, "edges": [list(e) for e in g.edges()]}) + "\n"
    return f"{g.n}\n" + "".join(f"{u} {v}\n" for u, v in g.edges())


def read_graph(path: str) -> Graph:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_graph(text)


# -- reports -----------------------------------------------------------------

REPORT_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["graph"],
    "properties": {
        "graph": {
            "type": "object",
            "required": ["n", "edges", "connected"],
            "properties": {
                "n": {"type": "integer", "minimum": 1},
                "edges": {"type": "array", "items": {"type": "array", "items": {"type": "integer"},
                                                     "minItems": 2, "maxItems": 2}},
                "connected": {"type": "boolean"},
            },
        },
        "classes": {"type": "object"},
        "minimal_primes": {
            "type": "array",
            "items": {"type": "object", "required": ["T", "height", "components"]},
        },
        "dim": {"type": "object"},
        "unmixed": {"type": "boolean"},
        "cm": {"type": "object", "required": ["is_cw", "cm", "matched_case"]},
        "depth": {"type": "object"},
        "timings": {"type": "object", "additionalProperties": {"type": "number"}},
    },
}


def _cw_json(cls: ClassReport) -> Optional[dict]:
    if cls.cw is None:
        return None
    d = cls.cw
    return {
        "U": sorted(d.U),
        "V": sorted(d.V),
        "leaves_of": {str(u): sorted(ls) for u, ls in sorted(d.leaves_of.items())},
        "triangles_of": {str(v): sorted(sorted(p) for p in ps)
                         for v, ps in sorted(d.triangles_of.items())},
    }


class Report:
    """Accumulates report sections and per-section timings."""

    def __init__(self, g: Graph):
        self.g = g
        self.data: dict[str, Any] = {
            "graph": {"n": g.n, "edges": [list(e) for e in g.edges()], "connected": is_connected(g)}
        }
        self.timings: dict[str, float] = {}

    def timed(self, name: str, fn, *args, **kwargs):
        start = time.perf_counter()
        try:
            return fn(*args, **kwargs)
        finally:
            self.timings[name] = round(time.perf_counter() - start, 6)

    def finish(self, with_timings: bool) -> dict:
        if with_timings:
            self.data["timings"] = self.timings
        return self.data


def _classes_section(r: Report) -> None:
    cls = r.timed("classes", classify, r.g)
    r.data["classes"] = {
        "bipartite": cls.bipartite,
        "tree": cls.tree,
        "chordal": cls.chordal,
        "block": cls.block,
        "generalized_block": cls.generalized_block,
        "triangle_free": cls.triangle_free,
        "cameron_walker": cls.cw is not None,
        "complete_bipartite_core": cls.complete_bipartite_core,
        "dense_cw": cls.dense_cw,
        "minimal_dense_cw": cls.minimal_dense_cw,
        "cw": _cw_json(cls),
    }


def _spectrum_section(r: Report) -> None:
    from .primes import minimal_primes

    primes = r.timed("spectrum", minimal_primes, r.g)
    r.data["minimal_primes"] = [
        {"T": sorted(p.T), "height": p.height, "components": [sorted(c) for c in p.components]}
        for p in primes
    ]
    heights = {p.height for p in primes}
    r.data["unmixed"] = len(heights) == 1
    r.data["dim"] = {"formula": 2 * r.g.n - min(heights)}


def _oracle_json(res) -> dict:
    return {"depth": res.depth, "dim": res.dim, "pd": res.pd, "cm": res.cm,
            "num_vars": res.num_vars, "field": res.field}


def _run_oracle(r: Report, field: str, force: bool):
    from .cache import cached_oracle

    return r.timed("oracle", cached_oracle, r.g, field=field, force=force)


def _dim_section(r: Report, method: str, force: bool) -> bool:
    from .primes import krull_dim

    out: dict[str, Any] = {}
    if method in ("formula", "both"):
        out["formula"] = r.timed("dim_formula", krull_dim, r.g)
    if method in ("oracle", "both"):
        out["oracle"] = _run_oracle(r, "gf2", force).dim
    agree = True
    if method == "both":
        agree = out["formula"] == out["oracle"]
        out["agree"] = agree
    r.data["dim"] = out
    return agree


def _depth_section(r: Report, method: str, field: str, force: bool) -> bool:
    out: dict[str, Any] = {}
    verdict = None
    if method in ("formula", "both"):
        verdict = r.timed("depth_formula", depth_dispatch, r.g)
        out["verdict"] = {"kind": verdict.kind, "lo": verdict.lo, "hi": verdict.hi,
                          "value": verdict.value, "provenance": verdict.provenance}
    if method in ("oracle", "both"):
        out["oracle"] = _oracle_json(_run_oracle(r, field, force))
    agree = True
    if method == "both":
        depth = out["oracle"]["depth"]
        agree = verdict.lo <= depth <= verdict.hi
        out["agree"] = agree
    r.data["depth"] = out
    return agree


def _cm_section(r: Report) -> None:
    v = r.timed("cm", cm_classify_cw, r.g)
    r.data["cm"] = {"is_cw": v.is_cw, "cm": v.cm, "matched_case": v.matched_case}


def _plain(data: dict, prefix: str = "") -> list[str]:
    lines = []
    for key, value in data.items():
        name = f"{prefix}{key}"
        if key == "minimal_primes":
            lines.append(f"{name}: {len(value)}")
            for p in value:
                lines.append(f"  T={{{','.join(map(str, p['T']))}}} height={p['height']} "
                             f"components={len(p['components'])}")
        elif isinstance(value, dict) and key != "cw":
            lines.extend(_plain(value, f"{name}."))
        elif key == "edges":
            lines.append(f"{name}: " + " ".join(f"{u}-{v}" for u, v in value))
        else:
            lines.append(f"{name}: {json.dumps(value, sort_keys=True)}")
    return lines


def _emit(data: dict, as_json: bool) -> None:
    if as_json:
        sys.stdout.write(json.dumps(data, sort_keys=True, indent=2) + "\n")
    else:
        sys.stdout.write("\n".join(_plain(data)) + "\n")


# -- commands ------------------------------------------------------------------

def cmd_classify(args) -> int:
    r = Report(read_graph(args.file))
    _classes_section(r)
    _emit(r.finish(not args.no_timings), args.json)
    return EXIT_OK


def cmd_spectrum(args) -> int:
    r = Report(read_graph(args.file))
    _spectrum_section(r)
    _emit(r.finish(not args.no_timings), args.json)
    return EXIT_OK


def cmd_dim(args) -> int:
    r = Report(read_graph(args.file))
    agree = _dim_section(r, args.method, args.force)
    _emit(r.finish(not args.no_timings), args.json)
    return EXIT_OK if agree else EXIT_MISMATCH


def cmd_depth(args) -> int:
    r = Report(read_graph(args.file))
    agree = _depth_section(r, args.method, args.field, args.force)
    _emit(r.finish(not args.no_timings), args.json)
    return EXIT_OK if agree else EXIT_MISMATCH


def cmd_cm(args) -> int:
    r = Report(read_graph(args.file))
    _cm_section(r)
    _emit(r.finish(not args.no_timings), args.json)
    return EXIT_OK


def cmd_construct(args) -> int:
    if args.named:
        g = build_named(args.named)
    elif args.minimal_dense:
        g = minimal_dense_cw(*args.minimal_dense)
    elif args.depth_target:
        g = depth_target(*args.depth_target)
    else:
        g = clique_fan(args.clique_fan[0], args.clique_fan[1], not args.no_leaf)
    if args.output:
        fmt = "json" if args.output.endswith(".json") else "text"
        Path(args.output).write_text(serialize_graph(g, fmt))
        log.info("wrote %s", args.output)
    else:
        sys.stdout.write(serialize_graph(g, "json" if args.json else "text"))
    return EXIT_OK


def cmd_verify(args) -> int:
    from .enumeration import verify_suite

    start = time.perf_counter()
    report = verify_suite(args.suite, args.max_n, jobs=args.jobs, field=args.field)
    data = {"suite": report.suite, "max_n": report.max_n, "checked": report.checked,
            "counterexamples": report.counterexamples, "notes": report.notes,
            "ok": report.ok}
    if not args.no_timings:
        data["timings"] = {"total": round(time.perf_counter() - start, 3)}
    _emit(data, args.json)
    return EXIT_OK if report.ok else EXIT_MISMATCH


ATLAS_COLUMNS = ["n", "canonical_id", "chordal", "block", "generalized_block", "cw", "dense_cw",
                 "minimal_dense_cw", "dim", "unmixed", "depth", "cm", "provenance"]


def cmd_table(args) -> int:
    from .enumeration import atlas, dim_depth_table

    rows = atlas(args.n, jobs=args.jobs)
    with open(args.output, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(ATLAS_COLUMNS)
        for row in rows:
            rec = asdict(row)
            writer.writerow([int(v) if isinstance(v, bool) else v
                             for v in (rec[c] for c in ATLAS_COLUMNS)])
    table = dim_depth_table(args.n, rows=rows)
    data = {"n": args.n, "graphs": len(rows), "csv": args.output,
            "pairs": [{"dim": d, "depth": t, "count": c, "witness": w} for d, t, c, w in table]}
    if args.json:
        _emit(data, True)
    else:
        sys.stdout.write(f"n={args.n}: {len(rows)} connected graphs, atlas written to {args.output}\n")
        sys.stdout.write("dim depth count witness\n")
        for d, t, c, w in table:
            sys.stdout.write(f"{d:3d} {t:5d} {c:5d} {w}\n")
    return EXIT_OK


# -- parser --------------------------------------------------------------------

COMMON_FLAGS = ("json", "no_timings", "force", "verbose")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit JSON instead of plain text")
    common.add_argument("--no-timings", action="store_true", default=argparse.SUPPRESS,
                        help="omit timings (makes output byte-reproducible)")
    common.add_argument("--force", action="store_true", default=argparse.SUPPRESS,
                        help="run the oracle beyond its size guard")
    common.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS)

    parser = _Parser(prog="bei", parents=[common],
                     description="Invariants of binomial edge ideals of graphs.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add(name, fn, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=fn)
        return p

    add("classify", cmd_classify, "graph-class report").add_argument("file")
    add("spectrum", cmd_spectrum, "minimal primes, heights, dimension").add_argument("file")
    p = add("dim", cmd_dim, "Krull dimension")
    p.add_argument("file")
    p.add_argument("--method", choices=["formula", "oracle", "both"], default="formula")
    p = add("depth", cmd_depth, "depth by formula and/or oracle")
    p.add_argument("file")
    p.add_argument("--method", choices=["formula", "oracle", "both"], default="formula")
    p.add_argument("--field", choices=["gf2", "rational"], default="gf2")
    add("cm", cmd_cm, "Cohen-Macaulay classification of Cameron-Walker graphs").add_argument("file")

    p = add("construct", cmd_construct, "build a named graph or construction")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--named", metavar="ID", help="P3, P5, T3, H, path(k), star(n)")
    group.add_argument("--minimal-dense", nargs=2, type=int, metavar=("R", "S"))
    group.add_argument("--depth-target", nargs=2, type=int, metavar=("T", "N"))
    group.add_argument("--clique-fan", nargs=2, type=int, metavar=("R", "S"))
    p.add_argument("--no-leaf", action="store_true", help="clique fan without u'_1")
    p.add_argument("-o", "--output")

    p = add("verify", cmd_verify, "exhaustive verification over the connected census")
    p.add_argument("--suite", choices=["main", "depth", "bounds", "dim"], required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--field", choices=["gf2", "rational"], default="gf2")

    p = add("table", cmd_table, "CSV atlas and (dim, depth) tally for one vertex count")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--jobs", type=int, default=1)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        sys.stderr.write(f"bei: error: {exc}\n")
        return EXIT_USAGE
    # flags are shared with the subparsers, so defaults are filled in after parsing
    for flag in COMMON_FLAGS:
        if not hasattr(args, flag):
            setattr(args, flag, False)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s", stream=sys.stderr)
    if args.force:
        log.warning("size guards disabled by --force")
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"bei: error: {exc}\n")
        return EXIT_USAGE
    except OracleGuardError as exc:
        sys.stderr.write(f"bei: size guard: {exc}\n")
        return EXIT_GUARD
    except GraphError as exc:
        sys.stderr.write(f"bei: invalid graph: {exc}\n")
        return EXIT_GRAPH


if __name__ == "__main__":
    sys.exit(main())
