"""Finite encodings and lazy neighbor oracles for infinite graph families.

A vertex is a plain value whose shape identifies its family:

* ``(i, j)``      -- a cell of an infinite square lattice,
* ``(ci, cj, t)`` -- a tile of a periodic polyomino tiling, addressed by the
  anchor cell of the tile instance (its lexicographically smallest cell) and
  the tile index within the fundamental domain,
* ``"name"``      -- a named vertex of an explicitly listed finite graph.

Graph families are small frozen dataclasses; every family answers
``neighbors(spec, v)`` lazily, so the infinite graph is only ever touched
through bounded searches.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Union

from .errors import ParseError, QueryError

Vertex = Union[tuple, str]
Edge = tuple  # canonical ordered pair of vertices

SCHEMA_VERSION = 1


def _vkey(v: Vertex):
    # Lexicographic order, stable across the mixed tuple/str vertex universe.
    if isinstance(v, str):
        return (1, v)
    return (0, v)


def make_edge(u: Vertex, v: Vertex) -> Edge:
    """Canonical undirected edge; rejects self-loops."""
    if u == v:
        raise ParseError(f"self-loop at {u!r}")
    return (u, v) if _vkey(u) <= _vkey(v) else (v, u)


def vertex_to_json(v: Vertex):
    return list(v) if isinstance(v, tuple) else v


def vertex_from_json(obj) -> Vertex:
    if isinstance(obj, str):
        return obj
    if isinstance(obj, list) and len(obj) in (2, 3) and all(
        isinstance(c, int) and not isinstance(c, bool) for c in obj
    ):
        return tuple(obj)
    raise ParseError(f"bad vertex encoding: {obj!r}")


# ---------------------------------------------------------------------------
# families
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InfiniteGrid:
    """The four-neighbor square lattice on Z x Z."""


@dataclass(frozen=True)
class DiagonalGrid:
    """Square lattice with one or both diagonal edge families added.

    ``ne`` adds edges (i,j)-(i+1,j+1); ``se`` adds edges (i,j)-(i+1,j-1).
    Diagonal endpoints are at lattice distance 2 in the base grid.
    """

    ne: bool = True
    se: bool = True


@dataclass(frozen=True)
class PeriodicTiling:
    """A tiling of the plane by lattice translates of finitely many polyominoes.

    ``periods`` are two linearly independent integer vectors; ``tiles`` lists
    the polyominoes of one fundamental domain as explicit cell sets.  The
    translates of the tiles under the period lattice must cover every cell of
    the plane exactly once; ``max_tile_size`` bounds the cell count of each
    tile.
    """

    periods: tuple[tuple[int, int], tuple[int, int]]
    tiles: tuple[tuple[tuple[int, int], ...], ...]
    max_tile_size: int

    def __post_init__(self):
        _tiling_tables(self)  # validates eagerly


@dataclass(frozen=True)
class PolyominoGrid:
    """Adjacency graph of a periodic polyomino tiling (tiles are vertices)."""

    tiling: PeriodicTiling


@dataclass(frozen=True)
class ExtraEdges:
    """A lattice family plus a finite explicit list of extra edges.

    Every extra edge must connect vertices at base-graph distance at most
    ``max_span``.  Only one wrapper level is supported; the base must be one
    of the lattice families.
    """

    base: Union[InfiniteGrid, DiagonalGrid, PolyominoGrid]
    extras: tuple[Edge, ...]
    max_span: int


@dataclass(frozen=True)
class HubGraph:
    """A finite explicit graph, some of whose vertices are declared hubs.

    Hubs stand for vertices of infinite degree: besides their explicit
    edges they carry infinitely many pendant finite subtrees that are never
    enumerated.  The explicit part is closed under the explicit edges, so
    every finite-degree vertex reachable from the explicit part without
    crossing a hub is itself explicit.
    """

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    hubs: frozenset[str]

    def adjacency(self) -> dict[str, list[str]]:
        return _hub_adjacency(self)


@dataclass(frozen=True)
class StarOfSubsets:
    """A star whose leaves are the subsets of a variable set.

    The center ``"o"`` is adjacent to one vertex per truth assignment of
    ``n_vars`` boolean variables; an assignment's leaf continues into an
    infinite tail exactly when it satisfies the CNF ``clauses``.  With
    ``extra_ray`` the center carries one additional infinite ray.  The graph
    is represented only through the predicate and is decided by the gadget
    solver, never materialized.
    """

    n_vars: int
    clauses: tuple[tuple[int, ...], ...]
    extra_ray: bool = False


GraphSpec = Union[
    InfiniteGrid, DiagonalGrid, PolyominoGrid, ExtraEdges, HubGraph, StarOfSubsets
]

_LATTICE_FAMILIES = (InfiniteGrid, DiagonalGrid, PolyominoGrid, ExtraEdges)


# ---------------------------------------------------------------------------
# periodic tiling tables
# ---------------------------------------------------------------------------

_UNIT_DIRS = ((1, 0), (-1, 0), (0, 1), (0, -1))


@dataclass(frozen=True)
class _TilingTables:
    det: int
    anchors: tuple[tuple[int, int], ...]
    # residue cell -> (tile index, the stored tile cell with that residue)
    residue_owner: dict
    # per tile: sorted (d_i, d_j, tile') anchor offsets of adjacent tiles
    stencil: tuple[tuple[tuple[int, int, int], ...], ...]


def _connected_cells(cells: frozenset) -> bool:
    start = next(iter(cells))
    seen = {start}
    stack = [start]
    while stack:
        x, y = stack.pop()
        for dx, dy in _UNIT_DIRS:
            nb = (x + dx, y + dy)
            if nb in cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(cells)


@lru_cache(maxsize=None)
def _tiling_tables(tiling: PeriodicTiling) -> _TilingTables:
    (a, b), (c, d) = tiling.periods
    det = a * d - b * c
    if det == 0:
        raise ParseError("tiling periods are linearly dependent")
    if det < 0:
        a, b, c, d = c, d, a, b
        det = -det
    if tiling.max_tile_size < 1:
        raise ParseError("max_tile_size must be positive")

    def residue(x: int, y: int) -> tuple[int, int]:
        fa = (d * x - c * y) // det
        fb = (-b * x + a * y) // det
        return (x - fa * a - fb * c, y - fa * b - fb * d)

    residue_owner: dict = {}
    anchors = []
    for t, tile in enumerate(tiling.tiles):
        cells = frozenset(tile)
        if not cells:
            raise ParseError(f"tile {t} is empty")
        if len(cells) != len(tile):
            raise ParseError(f"tile {t} repeats a cell")
        if len(cells) > tiling.max_tile_size:
            raise ParseError(
                f"tile {t} has {len(cells)} cells, over the bound "
                f"{tiling.max_tile_size}"
            )
        if not _connected_cells(cells):
            raise ParseError(f"tile {t} is not edge-connected")
        anchors.append(min(cells))
        for cell in cells:
            r = residue(*cell)
            if r in residue_owner:
                raise ParseError(
                    f"cell {cell} of tile {t} overlaps tile "
                    f"{residue_owner[r][0]} modulo the period lattice"
                )
            residue_owner[r] = (t, cell)
    if len(residue_owner) != det:
        raise ParseError(
            f"tiles cover {len(residue_owner)} of the {det} lattice classes; "
            "the fundamental domain has gaps"
        )

    def owner_anchor(x: int, y: int) -> tuple[int, int, int]:
        t, base = residue_owner[residue(x, y)]
        vx, vy = x - base[0], y - base[1]
        ka = (d * vx - c * vy) // det
        kb = (-b * vx + a * vy) // det
        ax, ay = anchors[t]
        return (ax + ka * a + kb * c, ay + ka * b + kb * d, t)

    stencil = []
    for t, tile in enumerate(tiling.tiles):
        cells = frozenset(tile)
        ax, ay = anchors[t]
        offs = set()
        for x, y in cells:
            for dx, dy in _UNIT_DIRS:
                nb = (x + dx, y + dy)
                if nb in cells:
                    continue
                ox, oy, ot = owner_anchor(*nb)
                offs.add((ox - ax, oy - ay, ot))
        stencil.append(tuple(sorted(offs)))

    return _TilingTables(
        det=det,
        anchors=tuple(anchors),
        residue_owner=residue_owner,
        stencil=tuple(stencil),
    )


def tile_of_cell(tiling: PeriodicTiling, cell: tuple[int, int]) -> Vertex:
    """The tile-graph vertex owning a plane cell."""
    tables = _tiling_tables(tiling)
    (a, b), (c, d) = tiling.periods
    det = a * d - b * c
    if det < 0:
        a, b, c, d = c, d, a, b
        det = -det
    x, y = cell
    fa = (d * x - c * y) // det
    fb = (-b * x + a * y) // det
    r = (x - fa * a - fb * c, y - fa * b - fb * d)
    t, base = tables.residue_owner[r]
    vx, vy = x - base[0], y - base[1]
    ka = (d * vx - c * vy) // det
    kb = (-b * vx + a * vy) // det
    ax, ay = tables.anchors[t]
    return (ax + ka * a + kb * c, ay + ka * b + kb * d, t)


def tile_cells(tiling: PeriodicTiling, v: Vertex) -> list[tuple[int, int]]:
    """Plane cells covered by a tile-graph vertex."""
    tables = _tiling_tables(tiling)
    ci, cj, t = v
    ax, ay = tables.anchors[t]
    return [(x - ax + ci, y - ay + cj) for x, y in tiling.tiles[t]]


# ---------------------------------------------------------------------------
# membership and neighbor oracles
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _hub_adjacency(spec: HubGraph) -> dict:
    adj: dict[str, list[str]] = {v: [] for v in spec.vertices}
    for u, v in spec.edges:
        adj[u].append(v)
        adj[v].append(u)
    for v in adj:
        adj[v].sort()
    return adj


@lru_cache(maxsize=None)
def _extra_adjacency(spec: ExtraEdges) -> dict:
    adj: dict[Vertex, list[Vertex]] = {}
    for u, v in spec.extras:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    return adj


def _plain_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def contains_vertex(spec: GraphSpec, v: Vertex) -> bool:
    """Whether ``v`` is a vertex of the graph described by ``spec``."""
    if isinstance(spec, (InfiniteGrid, DiagonalGrid)):
        return isinstance(v, tuple) and len(v) == 2 and \
            _plain_int(v[0]) and _plain_int(v[1])
    if isinstance(spec, PolyominoGrid):
        if not (isinstance(v, tuple) and len(v) == 3 and
                all(_plain_int(c) for c in v)):
            return False
        tables = _tiling_tables(spec.tiling)
        ci, cj, t = v
        if not 0 <= t < len(spec.tiling.tiles):
            return False
        ax, ay = tables.anchors[t]
        (a, b), (c, d) = spec.tiling.periods
        det = a * d - b * c
        vx, vy = ci - ax, cj - ay
        return (d * vx - c * vy) % det == 0 and (-b * vx + a * vy) % det == 0
    if isinstance(spec, ExtraEdges):
        return contains_vertex(spec.base, v)
    if isinstance(spec, HubGraph):
        return v in spec.adjacency()
    if isinstance(spec, StarOfSubsets):
        return v == "o"  # leaves are implicit; only the center is addressable
    raise ParseError(f"unknown family {spec!r}")


def neighbors(spec: GraphSpec, v: Vertex) -> list[Vertex]:
    """All vertices adjacent to ``v``, sorted, without duplicates.

    Raises :class:`QueryError` for vertices outside the graph and for
    enumerations the encoding cannot answer (hub vertices of infinite
    degree, the star center with its exponentially many leaves).
    """
    if not contains_vertex(spec, v):
        raise QueryError(f"vertex {v!r} is not in the graph")
    if isinstance(spec, InfiniteGrid):
        i, j = v
        return [(i - 1, j), (i, j - 1), (i, j + 1), (i + 1, j)]
    if isinstance(spec, DiagonalGrid):
        i, j = v
        out = [(i - 1, j), (i, j - 1), (i, j + 1), (i + 1, j)]
        if spec.ne:
            out += [(i + 1, j + 1), (i - 1, j - 1)]
        if spec.se:
            out += [(i + 1, j - 1), (i - 1, j + 1)]
        return sorted(out)
    if isinstance(spec, PolyominoGrid):
        tables = _tiling_tables(spec.tiling)
        ci, cj, t = v
        return [(ci + di, cj + dj, t2) for di, dj, t2 in tables.stencil[t]]
    if isinstance(spec, ExtraEdges):
        out = neighbors(spec.base, v)
        extra = _extra_adjacency(spec).get(v)
        if extra:
            out = sorted(set(out) | set(extra), key=_vkey)
        return out
    if isinstance(spec, HubGraph):
        if v in spec.hubs:
            raise QueryError(
                f"hub {v!r} has infinite degree; its neighbors cannot be "
                "enumerated"
            )
        return spec.adjacency()[v]
    if isinstance(spec, StarOfSubsets):
        raise QueryError(
            "subset-star neighborhoods are exponential and are decided "
            "through the gadget solver, not enumerated"
        )
    raise ParseError(f"unknown family {spec!r}")


def max_degree(spec: GraphSpec):
    """An upper bound on vertex degrees; ``math.inf`` if hubs are present."""
    if isinstance(spec, InfiniteGrid):
        return 4
    if isinstance(spec, DiagonalGrid):
        return 4 + 2 * int(spec.ne) + 2 * int(spec.se)
    if isinstance(spec, PolyominoGrid):
        tables = _tiling_tables(spec.tiling)
        return max(len(st) for st in tables.stencil)
    if isinstance(spec, ExtraEdges):
        base = max_degree(spec.base)
        adj = _extra_adjacency(spec)
        return base + max((len(nbs) for nbs in adj.values()), default=0)
    if isinstance(spec, HubGraph):
        if spec.hubs:
            return math.inf
        return max((len(n) for n in spec.adjacency().values()), default=0)
    if isinstance(spec, StarOfSubsets):
        return (1 << spec.n_vars) + (1 if spec.extra_ray else 0)
    raise ParseError(f"unknown family {spec!r}")


class GraphOracle:
    """Read-only neighbor oracle over a spec with vertices and edges removed.

    Queries are pure after construction and safe to issue concurrently.
    """

    def __init__(self, spec: GraphSpec, removed: Iterable[Vertex] = (),
                 cut: Iterable[Edge] = ()):
        self.spec = spec
        self.removed = frozenset(removed)
        self.cut = frozenset(make_edge(u, v) for u, v in cut)
        for v in self.removed:
            if not contains_vertex(spec, v):
                raise QueryError(f"removed vertex {v!r} is not in the graph")
        for u, v in self.cut:
            if not contains_vertex(spec, u) or not contains_vertex(spec, v):
                raise QueryError(f"cut edge {(u, v)!r} has an endpoint "
                                 "outside the graph")
            if u in self.removed or v in self.removed:
                raise QueryError(f"cut edge {(u, v)!r} touches a removed "
                                 "vertex")

    def contains(self, v: Vertex) -> bool:
        return v not in self.removed and contains_vertex(self.spec, v)

    def neighbors(self, v: Vertex) -> list[Vertex]:
        if v in self.removed:
            raise QueryError(f"vertex {v!r} was removed")
        out = neighbors(self.spec, v)
        if self.removed:
            out = [u for u in out if u not in self.removed]
        if self.cut:
            out = [u for u in out if make_edge(u, v) not in self.cut]
        return out

    def neighbors_keep_removed(self, v: Vertex) -> list[Vertex]:
        """Neighbors in the graph minus the cut, removed vertices included."""
        out = neighbors(self.spec, v)
        if self.cut:
            out = [u for u in out if make_edge(u, v) not in self.cut]
        return out


def restrict(spec: GraphSpec, removed: Iterable[Vertex]) -> GraphOracle:
    """Oracle for the induced subgraph with ``removed`` vertices deleted."""
    return GraphOracle(spec, removed=removed)


def apply_cut(oracle: GraphOracle, cut: Iterable[Edge]) -> GraphOracle:
    """Oracle with the cut edges removed in both directions."""
    return GraphOracle(oracle.spec, removed=oracle.removed,
                       cut=set(oracle.cut) | set(make_edge(u, v) for u, v in cut))


def bfs_distance(spec: GraphSpec, u: Vertex, v: Vertex, cap: int):
    """Distance between ``u`` and ``v``, or ``None`` if it exceeds ``cap``."""
    if u == v:
        return 0
    dist = {u: 0}
    frontier = [u]
    for d in range(1, cap + 1):
        nxt = []
        for x in frontier:
            for y in neighbors(spec, x):
                if y not in dist:
                    if y == v:
                        return d
                    dist[y] = d
                    nxt.append(y)
        frontier = nxt
        if not frontier:
            return None
    return None


# ---------------------------------------------------------------------------
# lattice stencils (shared by the solver and the compute kernels)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Stencil:
    """Periodic adjacency of a lattice family in (layer, i, j) coordinates.

    Grid-like families have one layer; a polyomino tiling has one layer per
    tile of the fundamental domain, with vertices addressed by their anchor
    cell.  ``offsets[t]`` lists the (di, dj, layer') moves from layer ``t``;
    ``extras`` are explicit one-off undirected edges in the same coordinates.
    """

    layers: int
    offsets: tuple[tuple[tuple[int, int, int], ...], ...]
    extras: tuple[tuple[tuple[int, int, int], tuple[int, int, int]], ...] = ()

    @property
    def axis_reach(self) -> int:
        return max(
            (max(abs(di), abs(dj)) for offs in self.offsets for di, dj, _ in offs),
            default=1,
        )


def vertex_to_cell(spec: GraphSpec, v: Vertex) -> tuple[int, int, int]:
    """Map a lattice vertex to stencil (layer, i, j) coordinates."""
    if isinstance(spec, (InfiniteGrid, DiagonalGrid)):
        return (0, v[0], v[1])
    if isinstance(spec, PolyominoGrid):
        return (v[2], v[0], v[1])
    if isinstance(spec, ExtraEdges):
        return vertex_to_cell(spec.base, v)
    raise QueryError(f"{type(spec).__name__} has no lattice stencil")


def cell_to_vertex(spec: GraphSpec, cell: tuple[int, int, int]) -> Vertex:
    t, i, j = cell
    if isinstance(spec, (InfiniteGrid, DiagonalGrid)):
        return (i, j)
    if isinstance(spec, PolyominoGrid):
        return (i, j, t)
    if isinstance(spec, ExtraEdges):
        return cell_to_vertex(spec.base, cell)
    raise QueryError(f"{type(spec).__name__} has no lattice stencil")


def lattice_stencil(spec: GraphSpec) -> Stencil:
    """Stencil of a lattice family; raises for hub and subset-star graphs."""
    if isinstance(spec, InfiniteGrid):
        return Stencil(1, (((1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0)),))
    if isinstance(spec, DiagonalGrid):
        offs = [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0)]
        if spec.ne:
            offs += [(1, 1, 0), (-1, -1, 0)]
        if spec.se:
            offs += [(1, -1, 0), (-1, 1, 0)]
        return Stencil(1, (tuple(offs),))
    if isinstance(spec, PolyominoGrid):
        tables = _tiling_tables(spec.tiling)
        return Stencil(len(spec.tiling.tiles), tables.stencil)
    if isinstance(spec, ExtraEdges):
        base = lattice_stencil(spec.base)
        extras = tuple(
            (vertex_to_cell(spec.base, u), vertex_to_cell(spec.base, v))
            for u, v in spec.extras
        )
        return Stencil(base.layers, base.offsets, extras)
    raise QueryError(f"{type(spec).__name__} has no lattice stencil")


def is_lattice_family(spec: GraphSpec) -> bool:
    return isinstance(spec, _LATTICE_FAMILIES)


# ---------------------------------------------------------------------------
# document parsing
# ---------------------------------------------------------------------------


def _require_fields(obj: dict, required: set[str], optional: set[str] = frozenset(),
                    where: str = "document"):
    if not isinstance(obj, dict):
        raise ParseError(f"{where}: expected an object, got {type(obj).__name__}")
    unknown = set(obj) - required - optional
    if unknown:
        raise ParseError(f"{where}: unknown fields {sorted(unknown)}")
    missing = required - set(obj)
    if missing:
        raise ParseError(f"{where}: missing fields {sorted(missing)}")


def _check_int(value, where: str, minimum=None) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise ParseError(f"{where}: expected an integer, got {value!r}")
    if minimum is not None and value < minimum:
        raise ParseError(f"{where}: must be >= {minimum}, got {value}")
    return value


def spec_from_json(obj) -> GraphSpec:
    """Parse and validate the ``graph`` object of an instance document."""
    if not isinstance(obj, dict) or "family" not in obj:
        raise ParseError("graph: missing 'family' tag")
    family = obj["family"]

    if family == "grid":
        _require_fields(obj, {"family"}, where="graph")
        return InfiniteGrid()

    if family == "diagonal_grid":
        _require_fields(obj, {"family", "diagonals"}, where="graph")
        diags = obj["diagonals"]
        if not isinstance(diags, list) or not set(diags) <= {"ne", "se"} or \
                len(diags) != len(set(diags)):
            raise ParseError("graph: 'diagonals' must be a subset of "
                             "['ne', 'se'] without repeats")
        return DiagonalGrid(ne="ne" in diags, se="se" in diags)

    if family == "polyomino_grid":
        _require_fields(obj, {"family", "periods", "tiles", "max_tile_size"},
                        where="graph")
        periods = obj["periods"]
        if (not isinstance(periods, list) or len(periods) != 2 or
                any(not isinstance(p, list) or len(p) != 2 for p in periods)):
            raise ParseError("graph: 'periods' must be two integer 2-vectors")
        pv = tuple(
            (_check_int(p[0], "period"), _check_int(p[1], "period"))
            for p in periods
        )
        tiles_obj = obj["tiles"]
        if not isinstance(tiles_obj, list) or not tiles_obj:
            raise ParseError("graph: 'tiles' must be a non-empty list")
        tiles = []
        for k, tile in enumerate(tiles_obj):
            if not isinstance(tile, list) or not tile:
                raise ParseError(f"graph: tile {k} must be a non-empty cell list")
            cells = []
            for c in tile:
                if not isinstance(c, list) or len(c) != 2:
                    raise ParseError(f"graph: bad cell {c!r} in tile {k}")
                cells.append((_check_int(c[0], f"tile {k} cell"),
                              _check_int(c[1], f"tile {k} cell")))
            tiles.append(tuple(cells))
        s = _check_int(obj["max_tile_size"], "graph: max_tile_size", minimum=1)
        return PolyominoGrid(PeriodicTiling(pv, tuple(tiles), s))

    if family == "extra_edges":
        _require_fields(obj, {"family", "base", "extras", "max_span"}, where="graph")
        base = spec_from_json(obj["base"])
        if not isinstance(base, (InfiniteGrid, DiagonalGrid, PolyominoGrid)):
            raise ParseError("graph: extra_edges base must be a lattice family")
        span = _check_int(obj["max_span"], "graph: max_span", minimum=1)
        extras_obj = obj["extras"]
        if not isinstance(extras_obj, list):
            raise ParseError("graph: 'extras' must be a list of edges")
        extras = []
        seen = set()
        for e in extras_obj:
            if not isinstance(e, list) or len(e) != 2:
                raise ParseError(f"graph: bad extra edge {e!r}")
            u, v = vertex_from_json(e[0]), vertex_from_json(e[1])
            for x in (u, v):
                if not contains_vertex(base, x):
                    raise ParseError(f"graph: extra edge endpoint {x!r} is not "
                                     "in the base graph")
            edge = make_edge(u, v)
            if edge in seen:
                raise ParseError(f"graph: duplicate extra edge {edge!r}")
            seen.add(edge)
            if v in neighbors(base, u):
                raise ParseError(f"graph: extra edge {edge!r} parallels a base edge")
            d = bfs_distance(base, u, v, span)
            if d is None:
                raise ParseError(
                    f"graph: extra edge {edge!r} spans base distance > {span}"
                )
            extras.append(edge)
        return ExtraEdges(base, tuple(extras), span)

    if family == "hub_graph":
        _require_fields(obj, {"family", "vertices", "edges", "hubs"}, where="graph")
        verts = obj["vertices"]
        if (not isinstance(verts, list) or
                any(not isinstance(v, str) for v in verts) or
                len(set(verts)) != len(verts)):
            raise ParseError("graph: 'vertices' must be distinct strings")
        vset = set(verts)
        edges = []
        seen = set()
        for e in obj["edges"]:
            if not isinstance(e, list) or len(e) != 2 or \
                    any(not isinstance(x, str) for x in e):
                raise ParseError(f"graph: bad edge {e!r}")
            u, v = e
            if u not in vset or v not in vset:
                raise ParseError(f"graph: edge {e!r} references an unknown vertex")
            edge = make_edge(u, v)
            if edge in seen:
                raise ParseError(f"graph: duplicate edge {edge!r}")
            seen.add(edge)
            edges.append(edge)
        hubs = obj["hubs"]
        if not isinstance(hubs, list) or any(not isinstance(h, str) for h in hubs):
            raise ParseError("graph: 'hubs' must be a list of vertex ids")
        if not set(hubs) <= vset:
            raise ParseError("graph: hubs must be declared vertices")
        return HubGraph(tuple(verts), tuple(edges), frozenset(hubs))

    if family == "star_of_subsets":
        _require_fields(obj, {"family", "n_vars", "cnf"}, {"extra_ray"},
                        where="graph")
        n = _check_int(obj["n_vars"], "graph: n_vars", minimum=1)
        clauses = obj["cnf"]
        if not isinstance(clauses, list):
            raise ParseError("graph: 'cnf' must be a list of clauses")
        parsed = []
        for k, clause in enumerate(clauses):
            if not isinstance(clause, list) or not clause:
                raise ParseError(f"graph: clause {k} must be a non-empty list")
            lits = []
            for lit in clause:
                lit = _check_int(lit, f"graph: clause {k} literal")
                if lit == 0 or abs(lit) > n:
                    raise ParseError(f"graph: literal {lit} out of range in "
                                     f"clause {k}")
                lits.append(lit)
            parsed.append(tuple(lits))
        extra_ray = obj.get("extra_ray", False)
        if not isinstance(extra_ray, bool):
            raise ParseError("graph: 'extra_ray' must be a boolean")
        return StarOfSubsets(n, tuple(parsed), extra_ray)

    raise ParseError(f"graph: unknown family {family!r}")


def spec_to_json(spec: GraphSpec) -> dict:
    if isinstance(spec, InfiniteGrid):
        return {"family": "grid"}
    if isinstance(spec, DiagonalGrid):
        diags = [d for d, on in (("ne", spec.ne), ("se", spec.se)) if on]
        return {"family": "diagonal_grid", "diagonals": diags}
    if isinstance(spec, PolyominoGrid):
        return {
            "family": "polyomino_grid",
            "periods": [list(p) for p in spec.tiling.periods],
            "tiles": [[list(c) for c in tile] for tile in spec.tiling.tiles],
            "max_tile_size": spec.tiling.max_tile_size,
        }
    if isinstance(spec, ExtraEdges):
        return {
            "family": "extra_edges",
            "base": spec_to_json(spec.base),
            "extras": [[vertex_to_json(u), vertex_to_json(v)] for u, v in spec.extras],
            "max_span": spec.max_span,
        }
    if isinstance(spec, HubGraph):
        return {
            "family": "hub_graph",
            "vertices": list(spec.vertices),
            "edges": [[u, v] for u, v in spec.edges],
            "hubs": sorted(spec.hubs),
        }
    if isinstance(spec, StarOfSubsets):
        return {
            "family": "star_of_subsets",
            "n_vars": spec.n_vars,
            "cnf": [list(c) for c in spec.clauses],
            "extra_ray": spec.extra_ray,
        }
    raise ParseError(f"unknown family {spec!r}")
