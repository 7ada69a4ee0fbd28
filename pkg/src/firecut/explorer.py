"""Truncated breadth-first search over neighbor oracles.

These are the generic, object-level searches used for validation, small
instances, and cut verification.  The solver's large lattice searches go
through the array kernels instead; both must agree wherever they overlap.

Exploration order is deterministic: neighbor lists are sorted by vertex
encoding before enqueueing, so members come out in (distance, encoding)
order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import QueryError
from .graphs import (
    GraphOracle,
    Vertex,
    _vkey,
    make_edge,
    neighbors as spec_neighbors,
)


def _as_oracle(graph) -> GraphOracle:
    if isinstance(graph, GraphOracle):
        return graph
    return GraphOracle(graph)


@dataclass(frozen=True)
class Ball:
    """All vertices within a hop radius of a source set."""

    centers: frozenset
    radius: int
    members: tuple  # (distance, encoding) order
    frontier_edges: frozenset  # oracle edges with exactly one endpoint inside

    @property
    def member_set(self) -> frozenset:
        return frozenset(self.members)


@dataclass(frozen=True)
class ComponentReport:
    """Outcome of a size-bounded component search from one seed."""

    seed: Vertex
    finite: bool
    members: frozenset = frozenset()
    # Edges of the graph-minus-cut that leave the component; they can only
    # lead to removed vertices, since the component is maximal otherwise.
    escaping_edges: frozenset = frozenset()


def ball(graph, sources: Iterable[Vertex], radius: int) -> Ball:
    """Members and frontier of the distance-``radius`` ball around sources."""
    oracle = _as_oracle(graph)
    sources = set(sources)
    if not sources:
        raise QueryError("ball needs at least one source vertex")
    for s in sources:
        if not oracle.contains(s):
            raise QueryError(f"source vertex {s!r} is removed or absent")
    if radius < 0:
        raise QueryError("radius must be non-negative")

    dist = {s: 0 for s in sources}
    order = sorted(sources, key=_vkey)
    frontier = list(order)
    for d in range(1, radius + 1):
        nxt = []
        for u in frontier:
            for v in oracle.neighbors(u):
                if v not in dist:
                    dist[v] = d
                    nxt.append(v)
        nxt.sort(key=_vkey)
        order.extend(nxt)
        frontier = nxt
    member_set = set(order)
    edges = set()
    for u in order:
        for v in oracle.neighbors(u):
            if v not in member_set:
                edges.add(make_edge(u, v))
    return Ball(frozenset(sources), radius, tuple(order), frozenset(edges))


def component_bounded(graph, seed: Vertex, size_bound: int) -> ComponentReport:
    """Explore the seed's component, giving up once it exceeds the bound.

    Returns a finite report with full membership if the component has at
    most ``size_bound`` vertices, and a non-finite report as soon as
    ``size_bound + 1`` distinct vertices have been discovered.
    """
    oracle = _as_oracle(graph)
    if size_bound < 1:
        raise QueryError("size bound must be at least 1")
    if not oracle.contains(seed):
        raise QueryError(f"seed vertex {seed!r} is removed or absent")

    seen = {seed}
    queue = deque([seed])
    while queue:
        u = queue.popleft()
        for v in oracle.neighbors(u):
            if v not in seen:
                seen.add(v)
                if len(seen) > size_bound:
                    return ComponentReport(seed, finite=False,
                                           members=frozenset(seen))
                queue.append(v)
    escaping = set()
    for u in seen:
        for v in oracle.neighbors_keep_removed(u):
            if v not in seen:
                escaping.add(make_edge(u, v))
    return ComponentReport(seed, finite=True, members=frozenset(seen),
                           escaping_edges=frozenset(escaping))


def finite_components_near(graph, anchors: Iterable[Vertex],
                           size_bound: int) -> frozenset:
    """Vertices of all finite components adjacent to the anchor set.

    Runs a bounded component search from every neighbor of every anchor,
    treating the anchors themselves as blocked.  Components whose size
    exceeds ``size_bound`` are classified infinite and excluded.
    """
    oracle = _as_oracle(graph)
    anchors = set(anchors)
    if not anchors:
        return frozenset()
    blocked_oracle = GraphOracle(
        oracle.spec,
        removed=set(oracle.removed) | anchors,
        cut=oracle.cut,
    )
    seeds = set()
    for a in anchors:
        for v in spec_neighbors(oracle.spec, a):
            if blocked_oracle.contains(v):
                seeds.add(v)
    collected: set = set()
    infinite_touched: set = set()
    for seed in sorted(seeds, key=_vkey):
        if seed in collected or seed in infinite_touched:
            continue
        report = component_bounded(blocked_oracle, seed, size_bound)
        if report.finite:
            collected |= report.members
        else:
            infinite_touched |= report.members
    return frozenset(collected)
