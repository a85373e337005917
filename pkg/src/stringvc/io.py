"""JSON file formats.

graph           {"n": int, "edges": [[u, v], ...]}            0 <= u < v < n
representation  {"host": {"n", "edges", "rotations"}, "sets": [[...], ...], "labels": [...]}
segments        {"segments": [[x1, y1, x2, y2], ...]}

Keys are always written in the order shown, so identical inputs produce
byte-identical files.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .geometry import SegmentFamily
from .graph import SimpleGraph
from .representation import HostGraph, StringRepresentation


class FormatError(ValueError):
    """A document does not follow the declared file format."""


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2) + "\n"


def read_json(path: str | Path) -> Any:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def write_json(path: str | Path, doc: Any) -> None:
    Path(path).write_text(dumps(doc), encoding="utf-8")


def _int_list(value, what: str) -> list[int]:
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise FormatError(f"{what} must be a list of integers")
    return value


def graph_to_json(g: SimpleGraph) -> dict:
    return {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}


def graph_from_json(doc: dict) -> SimpleGraph:
    if not isinstance(doc, dict) or "n" not in doc or "edges" not in doc:
        raise FormatError('graph document needs "n" and "edges"')
    n = doc["n"]
    if not isinstance(n, int) or n < 0:
        raise FormatError('"n" must be a non-negative integer')
    seen = set()
    for e in doc["edges"]:
        u, v = _int_list(e, "edge")
        if not 0 <= u < v < n:
            raise FormatError(f"edge {e} must satisfy 0 <= u < v < n")
        if (u, v) in seen:
            raise FormatError(f"duplicate edge {e}")
        seen.add((u, v))
    return SimpleGraph.from_edges(n, seen)


def representation_to_json(rep: StringRepresentation) -> dict:
    doc = {
        "host": {
            "n": rep.host.n,
            "edges": [list(e) for e in rep.host.edges],
            "rotations": [list(r) for r in rep.host.rotations],
        },
        "sets": [list(s) for s in rep.sets],
    }
    if rep.labels is not None:
        doc["labels"] = list(rep.labels)
    return doc


def representation_from_json(doc: dict) -> StringRepresentation:
    """Parse without validating; run :func:`representation.validate` after."""
    try:
        host = doc["host"]
        hg = HostGraph.build(
            host["n"],
            [_int_list(e, "host edge") for e in host["edges"]],
            [_int_list(r, "rotation") for r in host["rotations"]],
        )
        sets = [_int_list(s, "set") for s in doc["sets"]]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed representation document: {exc}") from exc
    if any(len(e) != 2 for e in hg.edges):
        raise FormatError("host edges must be pairs")
    labels = doc.get("labels")
    if labels is not None and not isinstance(labels, list):
        raise FormatError('"labels" must be a list of strings')
    return StringRepresentation.build(hg, sets, labels)


def segments_to_json(fam: SegmentFamily) -> dict:
    return {"segments": fam.rows()}


def segments_from_json(doc: dict) -> SegmentFamily:
    if not isinstance(doc, dict) or "segments" not in doc:
        raise FormatError('segment document needs "segments"')
    rows = []
    for row in doc["segments"]:
        row = _int_list(row, "segment")
        if len(row) != 4:
            raise FormatError("segments are [x1, y1, x2, y2]")
        rows.append(row)
    return SegmentFamily.from_rows(rows)
