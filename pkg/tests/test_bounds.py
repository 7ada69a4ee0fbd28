import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from firecut.bounds import (
    bounds_profile,
    grid_ball_bound,
    grid_expansion_bound,
    max_region_size,
    polyomino_expansion_bound,
    scaled_profile,
)
from firecut.errors import QueryError
from firecut.explorer import ball
from firecut.graphs import (
    DiagonalGrid,
    HubGraph,
    InfiniteGrid,
    PeriodicTiling,
    PolyominoGrid,
    make_edge,
)
from firecut.oracle import enumerate_polyominoes, min_perimeter, perimeter

GRID = InfiniteGrid()
DOMINO = PolyominoGrid(PeriodicTiling(((2, 0), (0, 1)), (((0, 0), (1, 0)),), 2))


@pytest.mark.parametrize("k,expected", [(0, 1), (2, 13), (5, 61)])
def test_grid_ball_formula(k, expected):
    assert grid_ball_bound(k) == expected


@pytest.mark.parametrize("b,expected", [(0, 0), (4, 2), (16, 18)])
def test_grid_expansion_formula(b, expected):
    assert grid_expansion_bound(b) == expected


def test_combined_is_pointwise_max():
    prof = bounds_profile(GRID)
    assert prof.combined(2) == 13
    assert prof.combined(0) == 1
    assert prof.combined(16) == max(545, 18) == 545


def test_adjusted_shifts_by_removed_degree():
    prof = bounds_profile(GRID)
    assert prof.adjusted(4, 4, 0) == prof.combined(4)
    assert prof.adjusted(1, 4, 1) == prof.combined(5)
    assert prof.adjusted(0, 4, 2) == prof.combined(8)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 60))
def test_bounds_nondecreasing(k):
    for spec in (GRID, DiagonalGrid(), DOMINO):
        prof = bounds_profile(spec)
        assert prof.ball_bound(k) <= prof.ball_bound(k + 1)
        assert prof.expansion_bound(k) <= prof.expansion_bound(k + 1)
        assert prof.combined(k) <= prof.combined(k + 1)


def test_grid_ball_bound_is_exact():
    for k in range(0, 13):
        members = ball(GRID, [(0, 0)], k).members
        assert len(members) == grid_ball_bound(k)


def test_ball_bound_sound_other_families():
    diag = DiagonalGrid()
    for spec, start in ((diag, (0, 0)), (DOMINO, (0, 0, 0))):
        prof = bounds_profile(spec)
        for k in range(0, 7):
            count = len(ball(spec, [start], k).members)
            assert count <= prof.ball_bound(k)


def test_ball_bound_sound_off_center():
    prof = bounds_profile(DOMINO)
    for start in [(2, 3, 0), (-4, -1, 0), (6, 0, 0)]:
        for k in (2, 4):
            assert len(ball(DOMINO, [start], k).members) <= prof.ball_bound(k)


def test_expansion_bound_sound_small_scale():
    # perimeter of every shape with p cells is at least the closed form,
    # so shapes larger than the expansion bound have more escapes than B
    minima = {p: min(perimeter(q) for q in enumerate_polyominoes(p))
              for p in range(1, 9)}
    for p, got in minima.items():
        assert got == min_perimeter(p)
    for b in range(0, 13):
        bound = grid_expansion_bound(b)
        for p, mn in minima.items():
            if p > bound:
                assert mn > b


def test_polyomino_expansion_constant():
    assert polyomino_expansion_bound(0, 1) == 1
    assert polyomino_expansion_bound(4, 2) == 57
    prof = bounds_profile(DOMINO)
    assert prof.expansion_bound(4) == 57


def test_scaled_profile_only_touches_expansion():
    prof = bounds_profile(GRID)
    big = scaled_profile(prof, 2)
    assert big.ball_bound(7) == prof.ball_bound(7)
    assert big.expansion_bound(7) == 2 * prof.expansion_bound(7)


def test_no_profile_for_hub_graphs():
    hub = HubGraph(("a", "h"), (make_edge("a", "h"),), frozenset(["h"]))
    with pytest.raises(QueryError):
        bounds_profile(hub)


def test_max_region_size_inverts_perimeter_law():
    # max_region_size(q) is the largest p whose minimum perimeter is <= q
    for q in range(0, 40):
        p = max_region_size(q)
        if p > 0:
            assert min_perimeter(p) <= q
        assert min_perimeter(p + 1) > q
