"""Instance and cut-system documents.

An instance file is a JSON object::

    {
      "version": 1,
      "graph": {"family": "grid"},
      "removed": [[0, 1]],
      "ignitions": [[0, 0]],
      "budget": 4
    }

Grid vertices serialize as ``[i, j]``, polyomino tiles as ``[ci, cj, t]``,
named vertices as strings.  Unknown fields are rejected everywhere.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .errors import ParseError
from .graphs import (
    SCHEMA_VERSION,
    Edge,
    GraphSpec,
    StarOfSubsets,
    Vertex,
    _require_fields,
    _check_int,
    _vkey,
    contains_vertex,
    make_edge,
    spec_from_json,
    spec_to_json,
    vertex_from_json,
    vertex_to_json,
)


@dataclass(frozen=True)
class Instance:
    """A containment question: graph, deleted vertices, ignitions, budget."""

    graph: GraphSpec
    removed: frozenset
    ignitions: frozenset
    budget: int


def validate_instance(inst: Instance) -> None:
    if inst.budget < 0:
        raise ParseError("budget must be non-negative")
    overlap = inst.ignitions & inst.removed
    if overlap:
        raise ParseError(f"ignition vertices {sorted(overlap, key=_vkey)} are "
                         "in the removed set")
    for v in inst.ignitions | inst.removed:
        if not contains_vertex(inst.graph, v):
            raise ParseError(f"vertex {v!r} is not in the graph")
    if isinstance(inst.graph, StarOfSubsets):
        if inst.removed:
            raise ParseError("subset-star instances do not support removed "
                             "vertices")
        if inst.ignitions - {"o"}:
            raise ParseError("subset-star fires can only ignite at the "
                             "center 'o'")


def make_instance(graph: GraphSpec, ignitions: Iterable[Vertex], budget: int,
                  removed: Iterable[Vertex] = ()) -> Instance:
    inst = Instance(graph, frozenset(removed), frozenset(ignitions), budget)
    validate_instance(inst)
    return inst


def instance_from_json(obj) -> Instance:
    _require_fields(obj, {"version", "graph", "removed", "ignitions", "budget"},
                    where="instance")
    if obj["version"] != SCHEMA_VERSION:
        raise ParseError(f"instance: unsupported version {obj['version']!r}")
    graph = spec_from_json(obj["graph"])
    for key in ("removed", "ignitions"):
        if not isinstance(obj[key], list):
            raise ParseError(f"instance: '{key}' must be a list of vertices")
    removed = [vertex_from_json(v) for v in obj["removed"]]
    ignitions = [vertex_from_json(v) for v in obj["ignitions"]]
    budget = _check_int(obj["budget"], "instance: budget", minimum=0)
    return make_instance(graph, ignitions, budget, removed)


def instance_to_json(inst: Instance) -> dict:
    return {
        "version": SCHEMA_VERSION,
        "graph": spec_to_json(inst.graph),
        "removed": [vertex_to_json(v) for v in sorted(inst.removed, key=_vkey)],
        "ignitions": [vertex_to_json(v) for v in sorted(inst.ignitions, key=_vkey)],
        "budget": inst.budget,
    }


def load_instance(path) -> Instance:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: not valid JSON ({exc})") from exc
    return instance_from_json(obj)


def dump_instance(inst: Instance, path=None) -> str:
    text = json.dumps(instance_to_json(inst), indent=2, sort_keys=True) + "\n"
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text


# -- cut systems ------------------------------------------------------------


def cut_from_json(obj, inst: Instance) -> frozenset:
    """Parse a cut file and check every edge against the instance graph."""
    _require_fields(obj, {"version", "edges"}, where="cut")
    if obj["version"] != SCHEMA_VERSION:
        raise ParseError(f"cut: unsupported version {obj['version']!r}")
    edges = set()
    for e in obj["edges"]:
        if not isinstance(e, list) or len(e) != 2:
            raise ParseError(f"cut: bad edge {e!r}")
        u, v = vertex_from_json(e[0]), vertex_from_json(e[1])
        edge = make_edge(u, v)
        for x in edge:
            if not contains_vertex(inst.graph, x):
                raise ParseError(f"cut: endpoint {x!r} is not in the graph")
            if x in inst.removed:
                raise ParseError(f"cut: edge {edge!r} touches removed vertex "
                                 f"{x!r}")
        edges.add(edge)
    return frozenset(edges)


def cut_to_json(cut: Iterable[Edge]) -> dict:
    ordered = sorted(cut, key=lambda e: (_vkey(e[0]), _vkey(e[1])))
    return {
        "version": SCHEMA_VERSION,
        "edges": [[vertex_to_json(u), vertex_to_json(v)] for u, v in ordered],
    }


def load_cut(path, inst: Instance) -> frozenset:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: not valid JSON ({exc})") from exc
    return cut_from_json(obj, inst)


def dump_cut(cut: Iterable[Edge], path=None) -> str:
    text = json.dumps(cut_to_json(cut), indent=2, sort_keys=True) + "\n"
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text
