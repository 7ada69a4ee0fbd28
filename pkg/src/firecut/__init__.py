"""firecut: containment of fires on finitely represented infinite graphs.

Decide whether a fire igniting at finitely many vertices of an infinite
graph can be contained by removing at most B edges.  Lattice families
(grids, diagonal grids, polyomino tilings, bounded extra edges) reduce to
a finite minimum-cut problem; ray-free hub graphs reduce to a min cut on
the explicitly reachable part; subset-star instances are decided straight
from their predicate.

Hot search and flow kernels run under numba by default with a pure numpy
fallback; select with the ``FIRECUT_BACKEND`` environment variable
(``numba`` | ``python`` | ``auto``).
"""

from .bounds import BoundsProfile, bounds_profile, scaled_profile
from .cnf import CNF, cnf, parse_dimacs, to_dimacs
from .errors import CapExceeded, FirecutError, ParseError, QueryError
from .explorer import Ball, ComponentReport, ball, component_bounded, \
    finite_components_near
from .flow import CutResult, FlowNetwork, assert_duality, max_flow
from .gadgets import SInstance, build_sat_gadget, cross_check_gadget, \
    solve_s_instance, solve_star
from .graphs import (
    DiagonalGrid,
    ExtraEdges,
    GraphOracle,
    HubGraph,
    InfiniteGrid,
    PeriodicTiling,
    PolyominoGrid,
    StarOfSubsets,
    apply_cut,
    max_degree,
    neighbors,
    restrict,
    spec_from_json,
    spec_to_json,
)
from .instances import (
    Instance,
    dump_cut,
    dump_instance,
    instance_from_json,
    instance_to_json,
    load_cut,
    load_instance,
    make_instance,
)
from .oracle import (
    Polyomino,
    brute_force_sat,
    brute_force_solve,
    brute_force_solve_hub,
    enumerate_polyominoes,
    perimeter,
)
from .rayfree import HatSets, build_hat_sets, solve_rayfree
from .solver import (
    ReductionTrace,
    Verdict,
    build_network,
    preprocess,
    solve,
    verify_cut,
)
from .cli import solve_instance, verify_instance_cut

__version__ = "0.1.0"
