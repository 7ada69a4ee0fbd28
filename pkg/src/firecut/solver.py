"""Containment decision for lattice families via reduction to minimum cut.

Pipeline for an instance (graph G, removed V', ignitions, budget B):

1. ``preprocess`` moves every finite component of G minus V' into the
   removed set; ignitions inside such components are already contained and
   leave the question.
2. ``build_network`` collects the ball of radius ``adjusted bound`` around
   the ignitions (distance measured in full G), absorbs the finite pockets
   of the remaining complement, and wires a transportation network: source
   to ignitions and escape vertices to sink at capacity B+1, every interior
   graph edge at capacity 1.
3. ``solve`` runs max flow with an early stop at B: the fire is containable
   within budget iff the minimum cut is at most B, and the interior arcs of
   such a cut are exactly a containing cut system.

Any containable component is smaller than the expansion bound, hence lies
inside the collected ball, which makes the finite network equivalent to
the infinite question.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import _kernels
from .bounds import BoundsProfile, bounds_profile
from .errors import CapExceeded, QueryError
from .explorer import component_bounded, finite_components_near
from .flow import CutResult, FlowNetwork, max_flow
from .graphs import (
    Stencil,
    Vertex,
    apply_cut,
    cell_to_vertex,
    is_lattice_family,
    lattice_stencil,
    make_edge,
    max_degree,
    neighbors as spec_neighbors,
    restrict,
    vertex_to_cell,
)
from .instances import Instance, make_instance, validate_instance

DEFAULT_NODE_CAP = 2_000_000
WINDOW_CELL_CAP = 64_000_000


@dataclass(frozen=True)
class Verdict:
    """Answer to a containment instance."""

    contained: bool
    cut: Optional[frozenset] = None       # edges to remove, when contained
    min_cut_value: Optional[int] = None   # exact only when contained
    trace: Optional["ReductionTrace"] = None
    reason: Optional[str] = None
    precontained: frozenset = frozenset() # ignitions confined by V' alone


class LatticeWindow:
    """Dense (layer, i, j) indexing of a bounded patch of a lattice family.

    Linear ids are ``(t * H + (i + off)) * W + (j + off)``.  A blocked guard
    ring of width >= the stencil reach keeps delta arithmetic in-array for
    every cell a search may expand.
    """

    def __init__(self, spec, stencil: Stencil, envelope_cells, radius: int,
                 norm_margin: int = 0):
        self.spec = spec
        self.stencil = stencil
        reach = stencil.axis_reach
        env = 0
        for _, i, j in envelope_cells:
            env = max(env, abs(i), abs(j))
        for (ca, cb) in stencil.extras:
            for _, i, j in (ca, cb):
                env = max(env, abs(i), abs(j))
        self.guard = reach
        self.half = env + radius * reach + 2 * norm_margin + self.guard + 1
        self.side = 2 * self.half + 1
        self.layers = stencil.layers
        self.hw = self.side * self.side
        self.cells = self.layers * self.hw
        if self.cells > WINDOW_CELL_CAP:
            raise CapExceeded(
                f"search window of {self.cells} cells exceeds the cap "
                f"{WINDOW_CELL_CAP}; instance geometry is too spread out"
            )
        deltas = []
        indptr = [0]
        for t in range(self.layers):
            for di, dj, t2 in stencil.offsets[t]:
                deltas.append(((t2 - t) * self.side + di) * self.side + dj)
            indptr.append(len(deltas))
        self.deltas = np.asarray(deltas, dtype=np.int64)
        self.deltas_indptr = np.asarray(indptr, dtype=np.int64)
        self._ring = None
        self._extra_csr = None

    def lin(self, cell) -> int:
        t, i, j = cell
        ii, jj = i + self.half, j + self.half
        if not (0 <= ii < self.side and 0 <= jj < self.side and
                0 <= t < self.layers):
            raise QueryError(f"cell {cell} falls outside the search window")
        return (t * self.side + ii) * self.side + jj

    def lin_vertex(self, v: Vertex) -> int:
        return self.lin(vertex_to_cell(self.spec, v))

    def cell(self, lin: int):
        t, rem = divmod(int(lin), self.hw)
        ii, jj = divmod(rem, self.side)
        return (t, ii - self.half, jj - self.half)

    def vertex(self, lin: int) -> Vertex:
        return cell_to_vertex(self.spec, self.cell(lin))

    def norms(self, lins: np.ndarray) -> np.ndarray:
        rem = lins % self.hw
        ii = rem // self.side - self.half
        jj = rem % self.side - self.half
        return np.abs(ii) + np.abs(jj)

    def ring_mask(self) -> np.ndarray:
        if self._ring is None:
            edge = np.zeros((self.side, self.side), dtype=bool)
            g = self.guard
            edge[:g, :] = True
            edge[-g:, :] = True
            edge[:, :g] = True
            edge[:, -g:] = True
            self._ring = np.tile(edge.ravel(), self.layers)
        return self._ring

    def extra_csr(self):
        if self._extra_csr is None:
            if not self.stencil.extras:
                self._extra_csr = (
                    np.zeros(self.cells + 1, dtype=np.int64),
                    np.empty(0, dtype=np.int64),
                )
            else:
                pairs = []
                for ca, cb in self.stencil.extras:
                    a, b = self.lin(ca), self.lin(cb)
                    pairs.append((a, b))
                    pairs.append((b, a))
                pairs.sort()
                srcs = np.asarray([p[0] for p in pairs], dtype=np.int64)
                tgts = np.asarray([p[1] for p in pairs], dtype=np.int64)
                indptr = np.zeros(self.cells + 1, dtype=np.int64)
                np.cumsum(np.bincount(srcs, minlength=self.cells),
                          out=indptr[1:])
                self._extra_csr = (indptr, tgts)
        return self._extra_csr

    def expand_once(self, lins: np.ndarray) -> np.ndarray:
        """All stencil and extra successors of the given cells (with dups)."""
        out = []
        if self.layers == 1:
            out.append((lins[:, None] + self.deltas[None, :]).ravel())
        else:
            lay = lins // self.hw
            for t in range(self.layers):
                lt = lins[lay == t]
                if lt.size:
                    dts = self.deltas[self.deltas_indptr[t]:
                                      self.deltas_indptr[t + 1]]
                    out.append((lt[:, None] + dts[None, :]).ravel())
        indptr, tgts = self.extra_csr()
        if tgts.size:
            deg = indptr[lins + 1] - indptr[lins]
            carriers = lins[deg > 0]
            for u in carriers:
                out.append(tgts[indptr[u]:indptr[u + 1]])
        if not out:
            return np.empty(0, dtype=np.int64)
        return np.concatenate(out)


@dataclass
class ReductionTrace:
    """Everything the reduction produced, for inspection and tests."""

    radius_used: int
    delta: int
    budget: int
    network: FlowNetwork
    interior_arc_count: int
    v2_lin: np.ndarray = field(repr=False)
    v3_lin: np.ndarray = field(repr=False)
    node_lin: np.ndarray = field(repr=False)   # node id -> window linear id
    t_attached_nodes: np.ndarray = field(repr=False)
    window: LatticeWindow = field(repr=False)

    @property
    def v2_count(self) -> int:
        return int(self.v2_lin.size)

    @property
    def v3_count(self) -> int:
        return int(self.v3_lin.size)

    @property
    def node_count(self) -> int:
        return self.network.n_nodes

    @property
    def v_double_prime(self) -> frozenset:
        return frozenset(self.window.vertex(l) for l in self.v2_lin)

    @property
    def v_triple_prime(self) -> frozenset:
        return frozenset(self.window.vertex(l) for l in self.v3_lin)

    @property
    def t_attached(self) -> frozenset:
        return frozenset(self.window.vertex(self.node_lin[n])
                         for n in self.t_attached_nodes)

    def vertex_of_node(self, node: int) -> Vertex:
        return self.window.vertex(self.node_lin[node])

    def node_of_vertex(self, v: Vertex) -> int:
        lin = self.window.lin_vertex(v)
        idx = int(np.searchsorted(self.node_lin, lin))
        if idx >= self.node_lin.size or self.node_lin[idx] != lin:
            raise QueryError(f"vertex {v!r} is not a network node")
        return idx


def _require_lattice(instance: Instance) -> None:
    if not is_lattice_family(instance.graph):
        raise QueryError(
            f"the min-cut solver handles lattice families; "
            f"{type(instance.graph).__name__} instances route elsewhere"
        )


def preprocess(instance: Instance,
               profile: Optional[BoundsProfile] = None) -> tuple[Instance, frozenset]:
    """Absorb finite components of G minus V' into the removed set.

    Returns the rewritten instance and the set of ignition vertices that
    were already confined by the removed vertices alone (dropped from the
    ignition set at zero budget cost).
    """
    _require_lattice(instance)
    validate_instance(instance)
    if not instance.removed:
        return instance, frozenset()
    prof = profile or bounds_profile(instance.graph)
    delta = max_degree(instance.graph)
    bound = prof.combined(delta * len(instance.removed))
    pocketed = finite_components_near(
        restrict(instance.graph, instance.removed), instance.removed, bound
    )
    if not pocketed:
        return instance, frozenset()
    precontained = frozenset(instance.ignitions & pocketed)
    rewritten = make_instance(
        instance.graph,
        instance.ignitions - pocketed,
        instance.budget,
        instance.removed | pocketed,
    )
    return rewritten, precontained


def build_network(instance: Instance,
                  profile: Optional[BoundsProfile] = None,
                  node_cap: int = DEFAULT_NODE_CAP) -> ReductionTrace:
    """Build the finite flow network equivalent to the infinite instance.

    Expects a preprocessed instance (no finite components off the removed
    set) with a nonempty ignition set.
    """
    _require_lattice(instance)
    if not instance.ignitions:
        raise QueryError("build_network needs at least one ignition")
    spec = instance.graph
    prof = profile or bounds_profile(spec)
    delta = max_degree(spec)
    budget = instance.budget
    radius = prof.adjusted(budget, delta, len(instance.removed))

    stencil = lattice_stencil(spec)
    norm_margin = _tile_span(spec)
    env_cells = [vertex_to_cell(spec, v)
                 for v in list(instance.ignitions) + list(instance.removed)]
    window = LatticeWindow(spec, stencil, env_cells, radius, norm_margin)
    indptr_x, targets_x = window.extra_csr()

    sources = np.asarray(sorted(window.lin_vertex(v)
                                for v in instance.ignitions), dtype=np.int64)
    vprime = np.asarray(sorted(window.lin_vertex(v)
                               for v in instance.removed), dtype=np.int64)
    ring = window.ring_mask()

    # ball around the ignitions, distances measured in the full graph;
    # abort as soon as the visit count alone proves the node cap breaks
    # (removed vertices inside the ball do not become nodes, hence slack)
    visit_cap = node_cap + len(instance.removed)
    dist = np.full(window.cells, -1, dtype=np.int32)
    visited = _kernels.ball_bfs(dist, window.hw, window.side,
                                window.deltas_indptr, window.deltas, ring,
                                sources, radius, indptr_x, targets_x,
                                visit_cap)
    if visited > visit_cap:
        raise CapExceeded(
            f"the collected ball alone passes {visit_cap} vertices, over the "
            f"node cap {node_cap}; raise node_cap if this is intended"
        )
    v2_mask = dist >= 0

    vprime_mask = np.zeros(window.cells, dtype=bool)
    vprime_mask[vprime] = True

    # finite pockets of the complement of (removed + ball)
    blocked = v2_mask | vprime_mask | ring
    anchor_lins = np.flatnonzero(v2_mask | vprime_mask)
    escape_norm = int(window.norms(anchor_lins).max()) + 2 * norm_margin
    succ = window.expand_once(anchor_lins)
    succ = succ[~blocked[succ]]
    seeds = np.unique(succ)
    state = np.zeros(window.cells, dtype=np.uint8)
    if seeds.size:
        _kernels.complement_scan(state, window.hw, window.side,
                                 window.deltas_indptr, window.deltas, blocked,
                                 seeds, window.half, window.half, escape_norm,
                                 indptr_x, targets_x)
    v3_mask = state == 1

    member = (v2_mask | v3_mask) & ~vprime_mask
    node_lin = np.flatnonzero(member).astype(np.int64)
    n = int(node_lin.size)
    if n + 2 > node_cap:
        raise CapExceeded(
            f"network would need {n + 2} nodes, over the cap {node_cap}; "
            "raise node_cap if this is intended"
        )
    node_id = np.full(window.cells, -1, dtype=np.int64)
    node_id[node_lin] = np.arange(n, dtype=np.int64)

    tails_parts, heads_parts = [], []
    escape_flag = np.zeros(n, dtype=bool)
    lay = node_lin // window.hw if window.layers > 1 else None
    for t in range(window.layers):
        if window.layers == 1:
            src = node_lin
        else:
            src = node_lin[lay == t]
        if not src.size:
            continue
        for p in range(int(window.deltas_indptr[t]),
                       int(window.deltas_indptr[t + 1])):
            tgt = src + int(window.deltas[p])
            tid = node_id[tgt]
            inside = tid >= 0
            tails_parts.append(node_id[src[inside]])
            heads_parts.append(tid[inside])
            esc = ~inside & ~vprime_mask[tgt]
            if esc.any():
                escape_flag[node_id[src[esc]]] = True
    extra_arcs = []
    for ca, cb in stencil.extras:
        a, b = window.lin(ca), window.lin(cb)
        for u, v in ((a, b), (b, a)):
            if node_id[u] >= 0:
                if node_id[v] >= 0:
                    extra_arcs.append((int(node_id[u]), int(node_id[v])))
                elif not vprime_mask[v]:
                    escape_flag[node_id[u]] = True

    s, t_node = n, n + 1
    if extra_arcs:
        tails_parts.append(np.asarray([a for a, _ in extra_arcs], np.int64))
        heads_parts.append(np.asarray([b for _, b in extra_arcs], np.int64))
    in_tails = (np.concatenate(tails_parts) if tails_parts
                else np.empty(0, np.int64))
    in_heads = (np.concatenate(heads_parts) if heads_parts
                else np.empty(0, np.int64))
    interior = int(in_tails.size)
    term_cap = budget + 1
    t_nodes = np.flatnonzero(escape_flag)
    src_nodes = node_id[sources]
    tails = np.concatenate([
        in_tails, np.full(sources.size, s, np.int64), t_nodes,
    ])
    heads = np.concatenate([
        in_heads, src_nodes, np.full(t_nodes.size, t_node, np.int64),
    ])
    caps = np.concatenate([
        np.ones(interior, np.int64),
        np.full(sources.size + t_nodes.size, term_cap, np.int64),
    ])
    net = FlowNetwork(n + 2, s, t_node, tails, heads, caps)

    return ReductionTrace(
        radius_used=radius,
        delta=delta,
        budget=budget,
        network=net,
        interior_arc_count=interior,
        v2_lin=np.flatnonzero(v2_mask).astype(np.int64),
        v3_lin=np.flatnonzero(v3_mask).astype(np.int64),
        node_lin=node_lin,
        t_attached_nodes=t_nodes.astype(np.int64),
        window=window,
    )


def _tile_span(spec) -> int:
    """Max L1 distance from a tile anchor to its cells (0 for plain grids)."""
    from .graphs import ExtraEdges, PolyominoGrid, _tiling_tables

    if isinstance(spec, ExtraEdges):
        return _tile_span(spec.base)
    if not isinstance(spec, PolyominoGrid):
        return 0
    tables = _tiling_tables(spec.tiling)
    span = 0
    for t, tile in enumerate(spec.tiling.tiles):
        ax, ay = tables.anchors[t]
        for x, y in tile:
            span = max(span, abs(x - ax) + abs(y - ay))
    return span


def _cut_from_result(trace: ReductionTrace, result: CutResult) -> frozenset:
    edges = set()
    tails, heads, _ = trace.network.arrays()
    for a in result.cut_arcs:
        a = int(a)
        if a >= trace.interior_arc_count:
            raise AssertionError("a minimum cut within budget cannot use "
                                 "terminal arcs")
        u = trace.vertex_of_node(int(tails[a]))
        v = trace.vertex_of_node(int(heads[a]))
        edges.add(make_edge(u, v))
    return frozenset(edges)


def solve(instance: Instance,
          profile: Optional[BoundsProfile] = None,
          node_cap: int = DEFAULT_NODE_CAP,
          keep_trace: bool = False) -> Verdict:
    """Decide containment for a lattice-family instance.

    Contained iff the minimum s-t cut of the reduction network is at most
    the budget; the returned cut is the interior of the minimum cut nearest
    the source, mapped back to graph edges.
    """
    _require_lattice(instance)
    validate_instance(instance)
    worked, precontained = preprocess(instance, profile)
    if not worked.ignitions:
        return Verdict(contained=True, cut=frozenset(), min_cut_value=0,
                       precontained=precontained)
    trace = build_network(worked, profile=profile, node_cap=node_cap)
    result = max_flow(trace.network, early_stop=worked.budget)
    if result.exceeded:
        return Verdict(contained=False,
                       trace=trace if keep_trace else None,
                       reason="minimum cut exceeds budget",
                       precontained=precontained)
    cut = _cut_from_result(trace, result)
    if len(cut) != result.value:
        raise AssertionError("cut arcs did not map 1-1 onto graph edges")
    return Verdict(contained=True, cut=cut, min_cut_value=int(result.value),
                   trace=trace if keep_trace else None,
                   precontained=precontained)


def verify_cut(instance: Instance, cut) -> bool:
    """Check a proposed cut system directly against the instance.

    True iff, after removing the cut edges, every ignition's component is
    finite; the component search is bounded by the adjusted expansion
    bound, which any contained component respects.
    """
    _require_lattice(instance)
    validate_instance(instance)
    cut = frozenset(make_edge(u, v) for u, v in cut)
    if len(cut) > instance.budget:
        raise QueryError(f"cut has {len(cut)} edges, over the budget "
                         f"{instance.budget}")
    for u, v in cut:
        for x in (u, v):
            if x in instance.removed:
                raise QueryError(f"cut edge {(u, v)!r} touches removed "
                                 f"vertex {x!r}")
        if v not in spec_neighbors(instance.graph, u):
            raise QueryError(f"cut edge {(u, v)!r} is not a graph edge")
    prof = bounds_profile(instance.graph)
    delta = max_degree(instance.graph)
    bound = prof.adjusted(instance.budget, delta, len(instance.removed))
    oracle = apply_cut(restrict(instance.graph, instance.removed), cut)
    for ig in instance.ignitions:
        report = component_bounded(oracle, ig, bound)
        if not report.finite:
            return False
    return True
