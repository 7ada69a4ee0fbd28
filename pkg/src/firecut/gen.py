"""Seeded random instance generators.

Everything here is deterministic for a fixed seed (``random.Random``), so
generated suites are reproducible byte for byte.

The grid agreement generator rejection-samples budget / removed-set
combinations until the exhaustive oracle is guaranteed to stay under its
enumeration cap, so agreement suites can compare the solver against the
oracle on every drawn instance.  The marginal ranges still cover the full
documented limits (budget up to 6 with few removed vertices, 4 removed
vertices with small budgets).
"""

from __future__ import annotations

import random

from .cnf import CNF, cnf
from .errors import ParseError
from .graphs import (
    DiagonalGrid,
    HubGraph,
    InfiniteGrid,
    PeriodicTiling,
    PolyominoGrid,
    make_edge,
)
from .instances import Instance, make_instance
from .oracle import count_cut_candidates, oracle_feasible

GRID_WINDOW = 8


def _distinct_cells(rng: random.Random, count: int, window: int,
                    avoid=frozenset()) -> list:
    cells: set = set()
    while len(cells) < count:
        i = rng.randint(-window, window)
        j = rng.randint(-window + abs(i), window - abs(i))
        if (i, j) not in avoid:
            cells.add((i, j))
    return sorted(cells)


def gen_grid_instance(seed: int, max_ignitions: int = 3, max_budget: int = 6,
                      max_removed: int = 4, window: int = GRID_WINDOW,
                      oracle_ready: bool = True) -> Instance:
    """Random plain-grid instance inside an L1 window around the origin.

    Ignitions cluster around a random center and removed vertices are
    drawn near the ignitions more often than not, so both verdicts occur
    at a healthy rate.  With ``oracle_ready`` (the default) draws are
    redrawn until :func:`firecut.oracle.oracle_feasible` accepts the
    combination, so the exhaustive check is guaranteed to run within its
    cap.
    """
    rng = random.Random(f"grid:{seed}")
    grid = InfiniteGrid()
    dirs = ((1, 0), (-1, 0), (0, 1), (0, -1))
    while True:
        n_ign = min(max_ignitions, rng.choice([1, 1, 1, 1, 2, 2, 3]))
        spread = rng.choice([1, 1, 1, 2, 3, window])
        ci = rng.randint(-(window - spread), window - spread)
        cj = rng.randint(-(window - spread) + abs(ci), window - spread - abs(ci))
        ignitions = [
            (ci + di, cj + dj)
            for di, dj in _distinct_cells(rng, n_ign, spread)
        ]
        n_rm = min(max_removed, rng.choice([0, 0, 1, 1, 2, 2, 3, 4]))
        removed: set = set()
        attempts = 0
        while len(removed) < n_rm and attempts < 200:
            attempts += 1
            roll = rng.random()
            ix, iy = rng.choice(ignitions)
            if roll < 0.45:
                dx, dy = rng.choice(dirs)
                v = (ix + dx, iy + dy)
            elif roll < 0.75:
                v = (ix + rng.randint(-2, 2), iy + rng.randint(-2, 2))
            else:
                v = _distinct_cells(rng, 1, window)[0]
            if v not in ignitions and abs(v[0]) + abs(v[1]) <= window:
                removed.add(v)
        budget = rng.choice([0, 1, 2, 3, 3, 4, 4, 5, 5, 6, 6, 6])
        budget = min(budget, max_budget)
        inst = make_instance(grid, ignitions, budget, sorted(removed))
        if not oracle_ready or oracle_feasible(inst):
            return inst


def gen_diagonal_instance(seed: int, max_ignitions: int = 2,
                          max_budget: int = 6, window: int = 6) -> Instance:
    """Random diagonal-grid instance (no removed vertices: degree 8 makes
    the adjusted radius grow quickly)."""
    rng = random.Random(f"diag:{seed}")
    spec = DiagonalGrid(ne=rng.random() < 0.8, se=rng.random() < 0.8)
    ignitions = _distinct_cells(rng, rng.randint(1, max_ignitions), window)
    budget = rng.randint(0, max_budget)
    return make_instance(spec, ignitions, budget)


def unit_tiling() -> PeriodicTiling:
    """The 1x1 tiling whose adjacency graph is the plain grid."""
    return PeriodicTiling(((1, 0), (0, 1)), (((0, 0),),), 1)


def as_unit_polyomino(inst: Instance) -> Instance:
    """Rewrite a plain-grid instance over the 1x1 polyomino tiling."""
    if not isinstance(inst.graph, InfiniteGrid):
        raise ParseError("expected a plain-grid instance")
    spec = PolyominoGrid(unit_tiling())
    return make_instance(
        spec,
        [(i, j, 0) for i, j in inst.ignitions],
        inst.budget,
        [(i, j, 0) for i, j in inst.removed],
    )


def gen_tiling(seed: int, max_tile_size: int = 2, dom_w: int = 2,
               dom_h: int = 2) -> PeriodicTiling:
    """Random periodic tiling: carve a dom_w x dom_h rectangle into
    connected tiles of at most ``max_tile_size`` cells."""
    rng = random.Random(f"tiling:{seed}")
    free = {(x, y) for x in range(dom_w) for y in range(dom_h)}
    tiles = []
    while free:
        start = min(free)
        tile = [start]
        free.remove(start)
        target = rng.randint(1, max_tile_size)
        while len(tile) < target:
            frontier = [
                (x + dx, y + dy)
                for x, y in tile
                for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1))
                if (x + dx, y + dy) in free
            ]
            if not frontier:
                break
            cell = rng.choice(sorted(frontier))
            tile.append(cell)
            free.remove(cell)
        tiles.append(tuple(sorted(tile)))
    return PeriodicTiling(((dom_w, 0), (0, dom_h)), tuple(tiles), max_tile_size)


def gen_polyomino_instance(seed: int, max_tile_size: int = 2,
                           max_budget: int = 4, max_removed: int = 1) -> Instance:
    """Random polyomino-grid instance over a random small tiling.

    Removed vertices raise the collected radius by the family degree, so
    the budget is kept small whenever the draw removes anything.
    """
    rng = random.Random(f"poly:{seed}")
    tiling = gen_tiling(seed, max_tile_size)
    spec = PolyominoGrid(tiling)
    from .graphs import _tiling_tables

    tables = _tiling_tables(tiling)
    (a, b), (c, d) = tiling.periods

    def random_vertex():
        t = rng.randrange(len(tiling.tiles))
        ka, kb = rng.randint(-2, 2), rng.randint(-2, 2)
        ax, ay = tables.anchors[t]
        return (ax + ka * a + kb * c, ay + ka * b + kb * d, t)

    ignitions = {random_vertex() for _ in range(rng.randint(1, 2))}
    removed = set()
    for _ in range(rng.randint(0, max_removed)):
        v = random_vertex()
        if v not in ignitions:
            removed.add(v)
    budget = rng.randint(0, 2 if removed else max_budget)
    return make_instance(spec, sorted(ignitions), budget, sorted(removed))


def gen_hub_instance(seed: int, explicit_size: int = 8, n_hubs: int = 2,
                     max_budget: int = 4,
                     candidate_cap: int = 200_000) -> Instance:
    """Random hub-graph instance with a connected explicit part.

    The finite part is a random spanning tree plus a few extra edges;
    hubs attach to random finite vertices.  Redraws until the exhaustive
    cut enumeration stays under ``candidate_cap``.
    """
    rng = random.Random(f"hub:{seed}")
    while True:
        k = rng.randint(max(2, explicit_size - 3), explicit_size)
        finite = [f"v{i}" for i in range(k)]
        hubs = [f"h{i}" for i in range(rng.randint(1, n_hubs))]
        edges = set()
        for i in range(1, k):
            edges.add(make_edge(finite[i], finite[rng.randrange(i)]))
        for _ in range(rng.randint(0, 2)):
            u, v = rng.sample(finite, 2)
            edges.add(make_edge(u, v))
        for h in hubs:
            for v in rng.sample(finite, rng.randint(1, min(3, k))):
                edges.add(make_edge(h, v))
        if rng.random() < 0.2 and len(hubs) >= 2:
            edges.add(make_edge(hubs[0], hubs[1]))
        spec = HubGraph(tuple(finite + hubs), tuple(sorted(edges)),
                        frozenset(hubs))
        ignitions = rng.sample(finite, rng.randint(1, 2))
        pool = [v for v in finite if v not in ignitions]
        removed = rng.sample(pool, rng.randint(0, 1)) if pool else []
        budget = rng.randint(0, max_budget)
        if count_cut_candidates(len(edges), budget) <= candidate_cap:
            return make_instance(spec, ignitions, budget, removed)


def gen_cnf(seed: int, max_vars: int = 12) -> CNF:
    """Random 3-CNF with a clause ratio wide enough to hit both answers."""
    rng = random.Random(f"cnf:{seed}")
    n = rng.randint(3, max_vars)
    m = rng.randint(max(2, n // 2), int(4.5 * n))
    clauses = []
    for _ in range(m):
        size = min(3, n)
        variables = rng.sample(range(1, n + 1), size)
        clauses.append(tuple(v if rng.random() < 0.5 else -v
                             for v in variables))
    return cnf(n, clauses)


def gen_gadget_cnf(seed: int, max_vars: int = 12, max_total: int = 22) -> CNF:
    """Random 3-CNF sized for the star construction.

    Padding turns n variables and m clauses into an (n+m)-variable
    predicate, so n+m is kept within ``max_total`` to stay enumerable.
    Low seeds alternate between a dense small-variable regime (often
    unsatisfiable) and a sparse wide regime (usually satisfiable).
    """
    rng = random.Random(f"gadget-cnf:{seed}")
    if rng.random() < 0.5:
        n = rng.randint(3, 4)
        m = rng.randint(3 * n, min(max_total - n, 5 * n))
    else:
        n = rng.randint(5, max_vars)
        m = rng.randint(2, max_total - n)
    clauses = []
    for _ in range(m):
        size = min(3, n)
        variables = rng.sample(range(1, n + 1), size)
        clauses.append(tuple(v if rng.random() < 0.5 else -v
                             for v in variables))
    return cnf(n, clauses)
