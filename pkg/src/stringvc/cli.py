"""Command line front end: ``stringvc <subcommand> ...`` (or ``python -m stringvc``).

Exit status 0 means success, 2 means the input was rejected for a
mathematical reason (the output document says why), 1 means misuse or an
I/O problem.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

from . import io
from .approx import approximate_vertex_cover, promise_decide
from .coloring import PromiseViolation, eight_coloring
from .errors import StringVCError
from .geometry import ingest_segments
from .graph import SimpleGraph
from .nt_kernel import nt_partition
from .odd_cycles import odd_girth, strip_short_odd_cycles
from .representation import intersection_graph, validate
from .toolkit import (
    GRID_RECTILINEAR,
    GRID_SUBTREES,
    SEGMENTS,
    GeneratorConfig,
    SplitMix64,
    exact_vertex_cover,
    gen_grid_rectilinear,
    gen_grid_subtrees,
    gen_segments,
)

OK, FAILURE, REJECTED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def threads() -> int:
    """Parallelism cap from ``STRINGVC_THREADS``; the pipeline currently runs on one thread."""
    try:
        return max(1, int(os.environ.get("STRINGVC_THREADS", "1")))
    except ValueError:
        return 1


def _load_rep(path):
    return io.representation_from_json(io.read_json(path))


def _load_graph(path) -> SimpleGraph:
    """Graph file, or the intersection graph of a representation file."""
    doc = io.read_json(path)
    if isinstance(doc, dict) and "host" in doc:
        rep = io.representation_from_json(doc)
        return intersection_graph(rep)
    return io.graph_from_json(doc)


def _rejection(err: StringVCError) -> dict:
    return {"status": "rejected", "error": err.code, "message": str(err), "details": err.details}


def cmd_validate(args):
    report = validate(_load_rep(args.input))
    return (OK if report.ok else REJECTED), {"valid": report.ok, "violations": report.violations}


def cmd_intersect(args):
    return OK, io.graph_to_json(intersection_graph(_load_rep(args.input)))


def cmd_ingest(args):
    fam = io.segments_from_json(io.read_json(args.input))
    return OK, io.representation_to_json(ingest_segments(fam))


def cmd_odd_girth(args):
    og = odd_girth(_load_graph(args.input))
    return OK, {"odd_girth": None if og == math.inf else og}


def cmd_strip(args):
    res = strip_short_odd_cycles(_load_graph(args.input))
    return OK, {
        "x": list(res.removed),
        "cycles": [list(c) for c in res.cycles],
        "remaining": list(res.remaining),
        "g_prime": io.graph_to_json(res.g_prime),
    }


def cmd_nt(args):
    p = nt_partition(_load_graph(args.input))
    return OK, {"v0": list(p.v0), "v_half": list(p.v_half), "v1": list(p.v1)}


def cmd_color8(args):
    res = eight_coloring(_load_rep(args.input))
    if isinstance(res, PromiseViolation):
        return REJECTED, {"colors": [], "status": "promise_violation", "witness": list(res.witness)}
    return OK, {"colors": list(res.colors), "status": "ok", "witness": []}


def cmd_vc(args):
    cert = approximate_vertex_cover(_load_rep(args.input))
    return OK, {
        "q": list(cert.q),
        "lb2": cert.lb2,
        "phases": {"x": list(cert.x_set), "y": list(cert.y_set), "z": list(cert.z_set)},
        "cycles": [list(c) for c in cert.cycles],
    }


def cmd_decide(args):
    if args.k < 0:
        raise UsageError("-k must be non-negative")
    d = promise_decide(_load_graph(args.input), args.k)
    return OK, {"answer": d.answer, "lb2": d.lb2}


def cmd_vc_exact(args):
    size, cover = exact_vertex_cover(_load_graph(args.input))
    return OK, {"size": size, "cover": cover}


_GENERATORS = {
    SEGMENTS: lambda cfg: io.segments_to_json(gen_segments(cfg)),
    GRID_SUBTREES: lambda cfg: io.representation_to_json(gen_grid_subtrees(cfg)),
    GRID_RECTILINEAR: lambda cfg: io.representation_to_json(gen_grid_rectilinear(cfg)),
}


def cmd_gen(args):
    try:
        params = json.loads(args.params) if args.params else {}
    except json.JSONDecodeError as exc:
        raise UsageError(f"--params is not valid JSON: {exc}") from None
    if not isinstance(params, dict):
        raise UsageError("--params must be a JSON object")
    params.pop("seed", None)
    kind = params.setdefault("kind", SEGMENTS)
    if kind not in _GENERATORS:
        raise UsageError(f"unknown generator kind {kind!r}")
    try:
        base = GeneratorConfig(seed=args.seed, **params)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"bad generator parameters: {exc}") from None
    if args.out is None:
        return OK, _GENERATORS[kind](base)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    rng = SplitMix64(args.seed)
    entries = []
    for i in range(args.instances):
        cfg = GeneratorConfig.from_json({**base.to_json(), "seed": rng.next()})
        name = f"{i:05d}.json"
        io.write_json(out / name, _GENERATORS[kind](cfg))
        entries.append({"file": name, "config": cfg.to_json()})
    manifest = {"generator": "splitmix64-v1", "seed": args.seed, "instances": entries}
    io.write_json(out / "manifest.json", manifest)
    return OK, {"manifest": str(out / "manifest.json"), "count": len(entries)}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="stringvc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, func, help_text, source="input file"):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", help=source)
        p.add_argument("-o", "--output", help="write JSON here instead of standard output")
        p.add_argument("--json", action="store_true", help="accepted for compatibility; output is always JSON")
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "check a representation file", "representation file")
    add("intersect", cmd_intersect, "intersection graph of a representation", "representation file")
    add("ingest-segments", cmd_ingest, "planarize a segment file into a representation", "segment file")
    add("odd-girth", cmd_odd_girth, "exact odd girth", "graph or representation file")
    add("strip", cmd_strip, "remove odd cycles of length <= 11", "graph or representation file")
    add("nt", cmd_nt, "half-integral LP partition", "graph or representation file")
    add("color8", cmd_color8, "8-color a represented graph", "representation file")
    add("vc", cmd_vc, "11/6-approximate vertex cover", "representation file")
    p = add("decide", cmd_decide, "promise decision: vc <= k or vc > 11k/6", "graph or representation file")
    p.add_argument("-k", type=int, required=True)
    add("vc-exact", cmd_vc_exact, "exact minimum vertex cover (small graphs)", "graph or representation file")

    g = sub.add_parser("gen", help="generate instances")
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--params", help="JSON object of generator parameters, e.g. '{\"kind\": \"segments\", \"count\": 10}'")
    g.add_argument("--out", help="corpus directory; writes numbered files and manifest.json")
    g.add_argument("--instances", type=int, default=1)
    g.add_argument("-o", "--output")
    g.add_argument("--json", action="store_true")
    g.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "func", None):
            raise UsageError("a subcommand is required")
        status, doc = args.func(args)
    except UsageError as exc:
        print(f"stringvc: {exc}", file=sys.stderr)
        return FAILURE
    except (OSError, json.JSONDecodeError, io.FormatError) as exc:
        print(f"stringvc: {exc}", file=sys.stderr)
        return FAILURE
    except StringVCError as exc:
        status, doc = REJECTED, _rejection(exc)
        args_out = getattr(args, "output", None)
        _emit(doc, args_out)
        return status
    _emit(doc, args.output)
    return status


def _emit(doc, path):
    text = io.dumps(doc)
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
