"""Growth and expansion bounds for the lattice families.

Each supported family carries two non-decreasing integer functions:

* ``ball_bound(K)`` -- an upper bound on the number of vertices within
  distance K of any single vertex.  For the plain grid this is exact:
  1 + 2K(K+1).
* ``expansion_bound(B)`` -- a size threshold: any finite connected subgraph
  with more than ``expansion_bound(B)`` vertices has more than B edges
  leaving it into the infinite remainder.  For the plain grid the bound
  ceil(B(B+2)/16) follows from the minimum polyomino perimeter 2*ceil(2*sqrt(p)).

``combined(K)`` is the pointwise maximum, a single function valid in both
roles; ``adjusted(B, delta, removed)`` shifts it to account for deleted
vertices: a subgraph with at most B boundary edges after deleting
``removed`` vertices of degree <= delta had at most B + delta*removed
boundary edges originally.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import QueryError
from .graphs import (
    DiagonalGrid,
    ExtraEdges,
    GraphSpec,
    InfiniteGrid,
    PolyominoGrid,
)


def grid_ball_bound(k: int) -> int:
    """Exact cardinality of a radius-k ball in the plain grid."""
    return 1 + 2 * k * (k + 1)


def grid_expansion_bound(b: int) -> int:
    """Grid subgraphs larger than this have more than b escape edges."""
    return -(-b * (b + 2) // 16)  # ceil


def polyomino_expansion_bound(b: int, s: int) -> int:
    """Safe expansion bound for tilings with tiles of at most s cells.

    A p-tile connected region unfolds to at least p grid cells whose outer
    boundary has at least 2*ceil(2*sqrt(p)) unit edges, and one tile
    adjacency accounts for at most 2s+2 of them; so regions with more than
    ceil((b+1)^2 (s+1)^2 / 4) tiles have more than b escape edges.
    """
    return -(-((b + 1) ** 2 * (s + 1) ** 2) // 4)


@dataclass(frozen=True)
class BoundsProfile:
    """The two bound functions of one graph family."""

    family: GraphSpec
    ball_bound: Callable[[int], int]
    expansion_bound: Callable[[int], int]

    def combined(self, k: int) -> int:
        """Pointwise max of the two bounds: one function for both roles."""
        return max(self.ball_bound(k), self.expansion_bound(k))

    def adjusted(self, b: int, delta: int, removed_count: int) -> int:
        """Combined bound shifted for a subgraph with vertices deleted."""
        if not isinstance(delta, int) or delta <= 0:
            raise QueryError("adjusted bound needs the finite max degree of "
                             "the base family")
        return self.combined(b + delta * removed_count)


def bounds_profile(spec: GraphSpec) -> BoundsProfile:
    """The bounds of a lattice family; raises for hub and star graphs."""
    if isinstance(spec, InfiniteGrid):
        return BoundsProfile(spec, grid_ball_bound, grid_expansion_bound)
    if isinstance(spec, DiagonalGrid):
        # Diagonal endpoints sit at base distance 2, so a radius-K ball here
        # fits in a radius-2K grid ball; extra edges only add escape edges.
        return BoundsProfile(
            spec,
            lambda k: grid_ball_bound(2 * k),
            grid_expansion_bound,
        )
    if isinstance(spec, PolyominoGrid):
        s = spec.tiling.max_tile_size
        return BoundsProfile(
            spec,
            lambda k: grid_ball_bound(s * k),
            lambda b: polyomino_expansion_bound(b, s),
        )
    if isinstance(spec, ExtraEdges):
        base = bounds_profile(spec.base)
        span = spec.max_span
        return BoundsProfile(
            spec,
            lambda k: base.ball_bound(span * k),
            base.expansion_bound,
        )
    raise QueryError(f"{type(spec).__name__} has no polynomial bounds profile")


def scaled_profile(profile: BoundsProfile, expansion_factor: int) -> BoundsProfile:
    """Profile with the expansion bound inflated; answers must not change."""
    return BoundsProfile(
        profile.family,
        profile.ball_bound,
        lambda b: expansion_factor * profile.expansion_bound(b),
    )


def max_region_size(boundary_edges: int) -> int:
    """Largest connected grid region with at most this many boundary edges.

    Inverts the minimum-perimeter law 2*ceil(2*sqrt(p)): the largest p with
    2*ceil(2*sqrt(p)) <= q is floor((floor(q/2))^2 / 4).  Any larger region
    necessarily has more than ``boundary_edges`` edges leaving it.
    """
    if boundary_edges < 0:
        return 0
    half = boundary_edges // 2
    return (half * half) // 4
