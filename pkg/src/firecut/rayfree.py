"""Containment on ray-free graphs with infinite-degree hubs.

The encoding lists a finite explicit graph plus a set of hub vertices that
carry infinitely many never-enumerated pendant finite subtrees.  Fire
starting at finite-degree vertices is containable iff the ignitions can be
cut off from every hub: a component that reaches a hub is infinite (the
pendants cannot all be cut), while a hub-free component of a ray-free
graph is finite.

The decision reduces to min cut on the subgraph actually reachable from
the ignitions: BFS through finite-degree vertices collects the touched
components and the hubs adjacent to them, the network gives interior
edges capacity 1 and terminal edges a sentinel-infinite capacity, and a
cut within budget exists iff the fire is containable.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import QueryError
from .flow import FlowNetwork, max_flow
from .graphs import HubGraph, make_edge
from .instances import Instance, validate_instance
from .solver import Verdict


@dataclass(frozen=True)
class HatSets:
    """Explicit subgraph relevant to containment.

    ``v_hat``: finite-degree vertices of components touched by the fire;
    ``v_hat_inf``: hubs adjacent to them; ``induced_edges``: edges among
    those vertices, hub-hub edges omitted (a cut never uses them).
    """

    v_hat: frozenset
    v_hat_inf: frozenset
    induced_edges: frozenset


def _require_hub(instance: Instance) -> HubGraph:
    if not isinstance(instance.graph, HubGraph):
        raise QueryError("the ray-free solver handles hub-graph instances")
    return instance.graph


def build_hat_sets(instance: Instance) -> HatSets:
    """BFS from the ignitions through finite-degree vertices only.

    Hubs are collected when touched but never traversed; removed vertices
    block.  Terminates inside the explicit part because the encoding lists
    every finite-degree vertex reachable without crossing a hub.
    """
    spec = _require_hub(instance)
    validate_instance(instance)
    hubs = spec.hubs
    for ig in instance.ignitions:
        if ig in hubs:
            raise QueryError(f"ignition {ig!r} is an infinite-degree hub; "
                             "the fire cannot be contained")
    adj = spec.adjacency()
    removed = instance.removed
    v_hat: set = set()
    v_hat_inf: set = set()
    queue = deque(sorted(instance.ignitions))
    v_hat.update(queue)
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v in removed:
                continue
            if v in hubs:
                v_hat_inf.add(v)
                continue
            if v not in v_hat:
                v_hat.add(v)
                queue.append(v)
    kept = v_hat | v_hat_inf
    edges = set()
    for u, v in spec.edges:
        if u in hubs and v in hubs:
            continue
        if u in kept and v in kept and u not in removed and v not in removed:
            edges.add(make_edge(u, v))
    return HatSets(frozenset(v_hat), frozenset(v_hat_inf), frozenset(edges))


def build_network_rayfree(hats: HatSets, instance: Instance):
    """Flow network: interior edges capacity 1, terminal edges sentinel-inf.

    Returns ``(net, nodes, interior)`` where ``nodes`` maps node index to
    vertex id and ``interior`` lists the undirected edge behind each
    interior arc pair.
    """
    nodes = sorted(hats.v_hat | hats.v_hat_inf)
    index = {v: k for k, v in enumerate(nodes)}
    n = len(nodes)
    net = FlowNetwork(n + 2, n, n + 1)
    interior = []
    for u, v in sorted(hats.induced_edges):
        net.add_undirected_edge(index[u], index[v], 1)
        interior.append((u, v))
        interior.append((u, v))
    sentinel = net.sentinel_capacity()
    for v in sorted(instance.ignitions):
        net.add_arc(n, index[v], sentinel)
    for h in sorted(hats.v_hat_inf):
        net.add_arc(index[h], n + 1, sentinel)
    return net, nodes, interior


def solve_rayfree(instance: Instance) -> Verdict:
    """Containment verdict for a hub-graph instance."""
    spec = _require_hub(instance)
    validate_instance(instance)
    if not instance.ignitions:
        return Verdict(contained=True, cut=frozenset(), min_cut_value=0)
    for ig in instance.ignitions:
        if ig in spec.hubs:
            return Verdict(contained=False, reason="infinite-degree ignition")
    hats = build_hat_sets(instance)
    net, nodes, interior = build_network_rayfree(hats, instance)
    result = max_flow(net, early_stop=instance.budget)
    if result.exceeded:
        return Verdict(contained=False,
                       reason="minimum cut exceeds budget")
    cut = set()
    for a in result.cut_arcs:
        if int(a) >= len(interior):
            raise AssertionError("sentinel-capacity terminal arcs cannot sit "
                                 "in a finite minimum cut")
        u, v = interior[int(a)]
        cut.add(make_edge(u, v))
    if len(cut) != result.value:
        raise AssertionError("cut arcs did not map 1-1 onto graph edges")
    return Verdict(contained=True, cut=frozenset(cut),
                   min_cut_value=int(result.value))


def verify_cut_hub(instance: Instance, cut) -> bool:
    """Direct containment check: no ignition may reach a hub after the cut."""
    spec = _require_hub(instance)
    validate_instance(instance)
    cut = frozenset(make_edge(u, v) for u, v in cut)
    if len(cut) > instance.budget:
        raise QueryError(f"cut has {len(cut)} edges, over the budget "
                         f"{instance.budget}")
    known = frozenset(map(lambda e: make_edge(*e), spec.edges))
    for e in cut:
        if e not in known:
            raise QueryError(f"cut edge {e!r} is not a graph edge")
        if e[0] in instance.removed or e[1] in instance.removed:
            raise QueryError(f"cut edge {e!r} touches a removed vertex")
    adj = spec.adjacency()
    for ig in instance.ignitions:
        if ig in spec.hubs:
            return False
        seen = {ig}
        queue = deque([ig])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if v in instance.removed or v in seen:
                    continue
                if make_edge(u, v) in cut:
                    continue
                if v in spec.hubs:
                    return False
                seen.add(v)
                queue.append(v)
    return True
