import pytest

from firecut.bounds import bounds_profile, grid_ball_bound, scaled_profile
from firecut.errors import CapExceeded, QueryError
from firecut.explorer import ball
from firecut.graphs import (
    DiagonalGrid,
    InfiniteGrid,
    PeriodicTiling,
    PolyominoGrid,
    StarOfSubsets,
    make_edge,
    neighbors,
    spec_from_json,
)
from firecut.instances import make_instance
from firecut.solver import build_network, preprocess, solve, verify_cut

GRID = InfiniteGrid()
RING8 = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (1, -1), (-1, 1), (-1, -1)]


def test_single_ignition_exact_budgets():
    assert not solve(make_instance(GRID, [(0, 0)], 3)).contained
    verdict = solve(make_instance(GRID, [(0, 0)], 4))
    assert verdict.contained
    assert verdict.min_cut_value == 4
    assert verdict.cut == frozenset(
        make_edge((0, 0), v) for v in neighbors(GRID, (0, 0))
    )


def test_adjacent_pair_exact_budgets():
    assert not solve(make_instance(GRID, [(0, 0), (1, 0)], 5)).contained
    verdict = solve(make_instance(GRID, [(0, 0), (1, 0)], 6))
    assert verdict.contained and verdict.min_cut_value == 6


def test_verdict_monotone_in_budget():
    for budget in (4, 5, 6):
        assert solve(make_instance(GRID, [(0, 0)], budget)).contained


def test_empty_ignitions_trivially_contained():
    verdict = solve(make_instance(GRID, [], 0))
    assert verdict.contained and verdict.cut == frozenset()
    assert verdict.min_cut_value == 0


def test_network_shape_budget_zero():
    inst = make_instance(GRID, [(0, 0)], 0)
    trace = build_network(inst)
    assert trace.radius_used == 1
    assert trace.v2_count == 5
    assert trace.v3_count == 0
    assert trace.node_count == 7
    assert trace.v_double_prime == ball(GRID, [(0, 0)], 1).member_set
    # every terminal arc carries capacity budget+1
    tails, heads, caps = trace.network.arrays()
    for a in range(trace.interior_arc_count, trace.network.n_arcs):
        assert caps[a] == inst.budget + 1
    assert set(caps[: trace.interior_arc_count]) <= {1}


def test_network_size_law_small_budget():
    inst = make_instance(GRID, [(0, 0)], 2)
    trace = build_network(inst)
    prof = bounds_profile(GRID)
    radius = prof.combined(2)
    assert radius == 13
    assert trace.v2_count == grid_ball_bound(13) == 365
    assert trace.node_count == 367


def test_cut_stays_inside_collected_ball():
    verdict = solve(make_instance(GRID, [(0, 0)], 4), keep_trace=True)
    inside = verdict.trace.v_double_prime
    for u, v in verdict.cut:
        assert u in inside and v in inside


def test_solved_cut_verifies():
    inst = make_instance(GRID, [(0, 0), (2, 2)], 8)
    verdict = solve(inst)
    assert verdict.contained and verdict.min_cut_value == 8
    assert verify_cut(inst, verdict.cut)


def test_verify_cut_rejections_and_failures():
    inst = make_instance(GRID, [(0, 0)], 4)
    star = [make_edge((0, 0), v) for v in neighbors(GRID, (0, 0))]
    assert verify_cut(inst, star)
    assert not verify_cut(make_instance(GRID, [(0, 0)], 4), star[:3])
    with pytest.raises(QueryError):  # over budget
        verify_cut(make_instance(GRID, [(0, 0)], 2), star)
    with pytest.raises(QueryError):  # not an edge
        verify_cut(inst, [((0, 0), (2, 0))])
    with pytest.raises(QueryError):  # touches removed
        verify_cut(make_instance(GRID, [(0, 0)], 4, [(1, 0)]), star)


def test_preprocess_noop_without_pockets():
    inst = make_instance(GRID, [(0, 0)], 3, [(4, 4)])
    worked, pre = preprocess(inst)
    assert worked == inst and pre == frozenset()
    clean = make_instance(GRID, [(0, 0)], 3)
    assert preprocess(clean)[0] == clean


def test_preprocess_absorbs_enclosed_ignition():
    # the four grid neighbors of the origin pocket it on their own
    pocket = [(1, 0), (-1, 0), (0, 1), (0, -1)]
    inst = make_instance(GRID, [(0, 0), (9, 9)], 4, pocket)
    worked, pre = preprocess(inst)
    assert pre == frozenset({(0, 0)})
    assert (0, 0) in worked.removed
    assert worked.ignitions == frozenset({(9, 9)})


def test_solve_reports_precontained_alongside_live_fire():
    # pocketed origin plus a live far ignition at zero budget: the live
    # fire is uncontainable but the pocketed one is already confined
    pocket = [(1, 0), (-1, 0), (0, 1), (0, -1)]
    inst = make_instance(GRID, [(0, 0), (9, 9)], 0, pocket)
    verdict = solve(inst)
    assert not verdict.contained
    assert verdict.precontained == frozenset({(0, 0)})


def test_enclosed_ignition_contained_at_zero_budget():
    inst = make_instance(GRID, [(0, 0)], 0, RING8)
    verdict = solve(inst)
    assert verdict.contained and verdict.cut == frozenset()


def test_removed_wall_lowers_the_cut():
    # three removed neighbors leave a single escape edge
    inst = make_instance(GRID, [(0, 0)], 1, [(1, 0), (-1, 0), (0, 1)])
    verdict = solve(inst)
    assert verdict.contained and verdict.min_cut_value == 1
    assert verdict.cut == frozenset({make_edge((0, 0), (0, -1))})


def test_diagonal_grid_exact_budgets():
    diag = DiagonalGrid(True, True)
    assert not solve(make_instance(diag, [(0, 0)], 7)).contained
    verdict = solve(make_instance(diag, [(0, 0)], 8))
    assert verdict.contained and verdict.min_cut_value == 8
    assert verify_cut(make_instance(diag, [(0, 0)], 8), verdict.cut)


def test_polyomino_domino_exact_budgets():
    domino = PolyominoGrid(
        PeriodicTiling(((2, 0), (0, 1)), (((0, 0), (1, 0)),), 2)
    )
    assert not solve(make_instance(domino, [(0, 0, 0)], 3)).contained
    verdict = solve(make_instance(domino, [(0, 0, 0)], 4))
    assert verdict.contained and verdict.min_cut_value == 4
    assert verify_cut(make_instance(domino, [(0, 0, 0)], 4), verdict.cut)


def test_extra_edges_raise_the_cut():
    spec = spec_from_json({
        "family": "extra_edges",
        "base": {"family": "grid"},
        "extras": [[[0, 0], [2, 0]]],
        "max_span": 2,
    })
    assert not solve(make_instance(spec, [(0, 0)], 4)).contained
    verdict = solve(make_instance(spec, [(0, 0)], 5))
    assert verdict.contained and verdict.min_cut_value == 5
    assert make_edge((0, 0), (2, 0)) in verdict.cut
    assert verify_cut(make_instance(spec, [(0, 0)], 5), verdict.cut)


def test_far_apart_ignitions_cut_independently():
    inst = make_instance(GRID, [(0, 0), (40, 40)], 8)
    verdict = solve(inst)
    assert verdict.contained and verdict.min_cut_value == 8


def test_node_cap_guard():
    with pytest.raises(CapExceeded):
        solve(make_instance(GRID, [(0, 0)], 6), node_cap=100)


def test_bound_inflation_keeps_answers():
    prof = bounds_profile(GRID)
    fat = scaled_profile(prof, 2)
    for budget in (3, 4):
        inst = make_instance(GRID, [(0, 0)], budget, [(1, 0)])
        a = solve(inst)
        b = solve(inst, profile=fat)
        assert a.contained == b.contained
        assert a.min_cut_value == b.min_cut_value


def test_non_lattice_families_rejected():
    star = StarOfSubsets(2, ((1,),))
    with pytest.raises(QueryError):
        solve(make_instance(star, ["o"], 1))
