"""Independent brute-force reference implementations.

Everything here decides by exhaustive enumeration within documented caps
and shares no code with the reduction pipeline it validates; the only
mathematical input is the classical minimum-perimeter law for polyominoes,
which :func:`enumerate_polyominoes` itself verifies at small sizes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _kernels
from .bounds import max_region_size
from .cnf import CNF, assignment_satisfies, clause_masks
from .errors import CapExceeded, QueryError
from .flow import FlowNetwork
from .graphs import HubGraph, InfiniteGrid, make_edge
from .instances import Instance, validate_instance
from .solver import Verdict

POLYOMINO_CELL_CAP = 12
SAT_VAR_CAP = 20
CUT_CANDIDATE_CAP = 10_000_000
MIN_CUT_ARC_CAP = 20


# ---------------------------------------------------------------------------
# fixed polyominoes and perimeters
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Polyomino:
    """Connected cell set, translated so min(cells) == (0, 0)."""

    cells: frozenset

    @property
    def size(self) -> int:
        return len(self.cells)


_DIRS = ((1, 0), (-1, 0), (0, 1), (0, -1))


def enumerate_polyominoes(p: int) -> list[Polyomino]:
    """All fixed polyominoes with p cells, each exactly once up to translation.

    Counting by the classic growth scheme: cells are ordered reading-wise,
    the origin is the smallest cell, and every candidate is offered at most
    once per branch, so no shape is produced twice.
    """
    if p < 1:
        raise QueryError("polyomino size must be positive")
    if p > POLYOMINO_CELL_CAP:
        raise CapExceeded(f"polyomino enumeration capped at "
                          f"{POLYOMINO_CELL_CAP} cells")
    out: list[Polyomino] = []

    def in_halfplane(c) -> bool:
        return c[1] > 0 or (c[1] == 0 and c[0] >= 0)

    def grow(poly: list, untried: list, offered: set) -> None:
        while untried:
            c = untried.pop()
            poly.append(c)
            if len(poly) == p:
                base = min(poly)
                out.append(Polyomino(frozenset(
                    (x - base[0], y - base[1]) for x, y in poly
                )))
            else:
                fresh = []
                for dx, dy in _DIRS:
                    nb = (c[0] + dx, c[1] + dy)
                    if in_halfplane(nb) and nb not in offered:
                        offered.add(nb)
                        fresh.append(nb)
                grow(poly, untried + fresh, offered)
                for nb in fresh:
                    offered.remove(nb)
            poly.pop()

    grow([], [(0, 0)], {(0, 0)})
    return out


def perimeter(poly: Polyomino) -> int:
    """Unit edges between a cell of the polyomino and a cell outside it."""
    adjacent = sum(
        1
        for x, y in poly.cells
        for dx, dy in ((1, 0), (0, 1))
        if (x + dx, y + dy) in poly.cells
    )
    return 4 * len(poly.cells) - 2 * adjacent


def min_perimeter(p: int) -> int:
    """The classical minimum perimeter of a p-cell polyomino."""
    return 2 * math.ceil(2 * math.sqrt(p))


# ---------------------------------------------------------------------------
# SAT by exhaustion
# ---------------------------------------------------------------------------


def brute_force_sat(formula: CNF) -> bool:
    """Exhaustive satisfiability for formulas of at most 20 variables.

    A found witness is re-checked clause by clause with the independent
    evaluator before the answer is returned.
    """
    if formula.n_vars > SAT_VAR_CAP:
        raise CapExceeded(f"brute-force SAT capped at {SAT_VAR_CAP} variables")
    pos, neg = clause_masks(formula)
    total = 1 << formula.n_vars
    chunk = 1 << 16
    for start in range(0, total, chunk):
        block = np.arange(start, min(start + chunk, total), dtype=np.uint64)
        ok = np.ones(block.size, dtype=bool)
        for k in range(len(pos)):
            ok &= ((block & pos[k]) != 0) | ((~block & neg[k]) != 0)
            if not ok.any():
                break
        hits = np.flatnonzero(ok)
        if hits.size:
            witness = int(block[hits[0]])
            if not assignment_satisfies(formula, witness):
                raise AssertionError("bitmask evaluation disagrees with the "
                                     "clause-by-clause check")
            return True
    return False


def count_satisfying(formula: CNF, limit: int,
                     var_cap: int = SAT_VAR_CAP) -> list[int]:
    """Satisfying assignments in increasing order, at most ``limit`` of them.

    ``var_cap`` defaults to the SAT-oracle cap; callers that have already
    bounded the enumeration (the star-gadget solver checks 2^n against its
    own cap) may pass a larger value.
    """
    if formula.n_vars > var_cap:
        raise CapExceeded(f"exhaustive enumeration capped at {var_cap} "
                          "variables")
    pos, neg = clause_masks(formula)
    total = 1 << formula.n_vars
    chunk = 1 << 16
    found: list[int] = []
    for start in range(0, total, chunk):
        block = np.arange(start, min(start + chunk, total), dtype=np.uint64)
        ok = np.ones(block.size, dtype=bool)
        for k in range(len(pos)):
            ok &= ((block & pos[k]) != 0) | ((~block & neg[k]) != 0)
            if not ok.any():
                break
        for bits in block[np.flatnonzero(ok)]:
            found.append(int(bits))
            if len(found) >= limit:
                return found
    return found


# ---------------------------------------------------------------------------
# exhaustive minimum cut on small networks
# ---------------------------------------------------------------------------


def brute_force_min_cut(net: FlowNetwork) -> int:
    """Minimum capacity over all arc subsets whose removal disconnects s, t."""
    m = net.n_arcs
    if m > MIN_CUT_ARC_CAP:
        raise CapExceeded(f"exhaustive min cut capped at {MIN_CUT_ARC_CAP} arcs")
    tails, heads, caps = net.arrays()
    adj: list[list[tuple[int, int]]] = [[] for _ in range(net.n_nodes)]
    for a in range(m):
        if caps[a] > 0:
            adj[int(tails[a])].append((int(heads[a]), a))

    def disconnected(mask: int) -> bool:
        seen = 1 << net.source
        stack = [net.source]
        while stack:
            u = stack.pop()
            for v, a in adj[u]:
                if mask >> a & 1:
                    continue
                if not (seen >> v) & 1:
                    if v == net.sink:
                        return False
                    seen |= 1 << v
                    stack.append(v)
        return True

    best: Optional[int] = None
    for mask in range(1 << m):
        value = int(caps[[a for a in range(m) if mask >> a & 1]].sum())
        if best is not None and value >= best:
            continue
        if disconnected(mask):
            best = value
    return best  # removing every arc always disconnects, so best is set


# ---------------------------------------------------------------------------
# exhaustive containment on the plain grid
# ---------------------------------------------------------------------------


def grid_region_cap(instance: Instance) -> int:
    """Largest cell count of any containable burned component.

    After removing a cut of at most B edges, a finite component has at
    most B + 4|V'| boundary edges in the full grid; the minimum-perimeter
    law then caps its size.  Independent of how the solver reasons.
    """
    return max_region_size(instance.budget + 4 * len(instance.removed))


def count_cut_candidates(m_edges: int, budget: int) -> int:
    return sum(math.comb(m_edges, k) for k in range(0, budget + 1))


def brute_force_solve(instance: Instance,
                      window_radius: Optional[int] = None,
                      candidate_cap: int = CUT_CANDIDATE_CAP) -> Verdict:
    """Exhaustive containment decision for plain-grid instances.

    Enumerates every cut system of size <= budget whose edges have both
    endpoints within ``window_radius`` of an ignition, in (size,
    lexicographic) order, and accepts the first one after which every
    ignition's component stays within the region cap.  The default window
    equals the region cap, which a minimal containing cut can never leave,
    so the default search is complete; larger windows only add candidates.
    """
    if not isinstance(instance.graph, InfiniteGrid):
        raise QueryError("the exhaustive oracle handles plain-grid instances")
    validate_instance(instance)
    budget = instance.budget
    if not instance.ignitions:
        return Verdict(contained=True, cut=frozenset(), min_cut_value=0)

    pmax = grid_region_cap(instance)
    w = pmax if window_radius is None else window_radius
    table_radius = max(w, pmax) + 1

    ignitions = sorted(instance.ignitions)
    cells: set = set()
    for (ix, iy) in ignitions:
        r = table_radius
        for dx in range(-r, r + 1):
            rem = r - abs(dx)
            for dy in range(-rem, rem + 1):
                cells.add((ix + dx, iy + dy))
    order = sorted(cells)
    index = {c: k for k, c in enumerate(order)}

    def near(c) -> int:
        return min(abs(c[0] - ix) + abs(c[1] - iy) for ix, iy in ignitions)

    removed_mask = np.zeros(len(order), dtype=bool)
    for v in instance.removed:
        if v in index:
            removed_mask[index[v]] = True

    edges = []
    for c in order:
        if near(c) > w or c in instance.removed:
            continue
        for dx, dy in ((1, 0), (0, 1)):
            d = (c[0] + dx, c[1] + dy)
            if d in index and near(d) <= w and d not in instance.removed:
                edges.append((c, d))
    edges.sort()
    n_candidates = count_cut_candidates(len(edges), budget)
    if n_candidates > candidate_cap:
        raise CapExceeded(
            f"{n_candidates} cut systems over {len(edges)} window edges "
            f"exceed the enumeration cap {candidate_cap}; shrink the window "
            "or the budget"
        )
    edge_id = {e: k for k, e in enumerate(edges)}

    indptr = [0]
    indices: list[int] = []
    csr_edge: list[int] = []
    for c in order:
        for dx, dy in _DIRS:
            d = (c[0] + dx, c[1] + dy)
            if d in index:
                indices.append(index[d])
                key = (c, d) if (c, d) in edge_id else (d, c)
                csr_edge.append(edge_id.get(key, -1))
        indptr.append(len(indices))

    found, size, combo, _tried = _kernels.cut_search(
        np.asarray(indptr, dtype=np.int64),
        np.asarray(indices, dtype=np.int64),
        np.asarray(csr_edge, dtype=np.int64),
        removed_mask,
        np.asarray([index[v] for v in ignitions], dtype=np.int64),
        len(edges), budget, pmax,
    )
    if not found:
        return Verdict(contained=False,
                       reason="exhausted all cut systems within the window")
    cut = frozenset(make_edge(*edges[int(k)]) for k in combo)
    return Verdict(contained=True, cut=cut, min_cut_value=int(size))


def oracle_feasible(instance: Instance,
                    candidate_cap: int = CUT_CANDIDATE_CAP) -> bool:
    """Whether :func:`brute_force_solve` stays under the enumeration cap."""
    try:
        pmax = grid_region_cap(instance)
        # edge count of the union of L1 balls, bounded without materializing
        cells: set = set()
        for (ix, iy) in instance.ignitions:
            for dx in range(-pmax, pmax + 1):
                rem = pmax - abs(dx)
                for dy in range(-rem, rem + 1):
                    cells.add((ix + dx, iy + dy))
        cells -= instance.removed
        m = sum(
            1
            for (x, y) in cells
            for dx, dy in ((1, 0), (0, 1))
            if (x + dx, y + dy) in cells
        )
        return count_cut_candidates(m, instance.budget) <= candidate_cap
    except CapExceeded:
        return False


# ---------------------------------------------------------------------------
# exhaustive containment on hub graphs
# ---------------------------------------------------------------------------


def brute_force_solve_hub(instance: Instance,
                          candidate_cap: int = 1_000_000) -> Verdict:
    """Exhaustive cut enumeration over the explicit edges of a hub graph.

    A candidate contains the fire iff no ignition reaches a hub in the
    explicit graph minus the candidate minus the removed vertices.
    """
    spec = instance.graph
    if not isinstance(spec, HubGraph):
        raise QueryError("this oracle handles hub-graph instances")
    validate_instance(instance)
    if not instance.ignitions:
        return Verdict(contained=True, cut=frozenset(), min_cut_value=0)
    if any(ig in spec.hubs for ig in instance.ignitions):
        return Verdict(contained=False, reason="infinite-degree ignition")

    edges = sorted(
        e for e in (make_edge(u, v) for u, v in spec.edges)
        if e[0] not in instance.removed and e[1] not in instance.removed
    )
    n_candidates = count_cut_candidates(len(edges), instance.budget)
    if n_candidates > candidate_cap:
        raise CapExceeded(f"{n_candidates} candidate cut systems exceed the "
                          f"cap {candidate_cap}")
    adj = spec.adjacency()

    from itertools import combinations

    def contained_with(cut: frozenset) -> bool:
        for ig in instance.ignitions:
            seen = {ig}
            stack = [ig]
            while stack:
                u = stack.pop()
                for v in adj[u]:
                    if v in instance.removed or v in seen:
                        continue
                    if make_edge(u, v) in cut:
                        continue
                    if v in spec.hubs:
                        return False
                    seen.add(v)
                    stack.append(v)
        return True

    for k in range(instance.budget + 1):
        for combo in combinations(edges, k):
            cut = frozenset(combo)
            if contained_with(cut):
                return Verdict(contained=True, cut=cut, min_cut_value=k)
    return Verdict(contained=False,
                   reason="exhausted all cut systems over explicit edges")
