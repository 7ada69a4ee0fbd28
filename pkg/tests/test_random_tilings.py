"""Property tests over randomly generated periodic tilings."""

from hypothesis import given, settings
from hypothesis import strategies as st

from firecut.gen import gen_polyomino_instance, gen_tiling
from firecut.graphs import (
    PolyominoGrid,
    max_degree,
    neighbors,
    tile_cells,
    tile_of_cell,
)
from firecut.solver import solve, verify_cut


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 3), st.integers(1, 3),
       st.integers(1, 3))
def test_random_tiling_covers_plane_once(seed, s, w, h):
    tiling = gen_tiling(seed, max_tile_size=s, dom_w=w, dom_h=h)
    seen = set()
    for x in range(-4, 5):
        for y in range(-4, 5):
            owner = tile_of_cell(tiling, (x, y))
            assert (x, y) in tile_cells(tiling, owner)
            seen.add(owner)
    # owners found through cells reproduce their full cell sets disjointly
    covered = {}
    for owner in seen:
        for cell in tile_cells(tiling, owner):
            assert cell not in covered, (cell, owner, covered[cell])
            covered[cell] = owner


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 4))
def test_random_tiling_neighbors_symmetric_and_bounded(seed, s):
    tiling = gen_tiling(seed, max_tile_size=s, dom_w=2, dom_h=2)
    spec = PolyominoGrid(tiling)
    delta = max_degree(spec)
    for cell in [(0, 0), (3, -2), (-1, 4)]:
        v = tile_of_cell(tiling, cell)
        nbrs = neighbors(spec, v)
        assert len(nbrs) == len(set(nbrs)) <= delta
        assert v not in nbrs
        for u in nbrs:
            assert v in neighbors(spec, u)


def test_random_polyomino_instances_roundtrip():
    contained = 0
    for seed in range(16):
        inst = gen_polyomino_instance(seed)
        verdict = solve(inst)
        if verdict.contained:
            contained += 1
            assert len(verdict.cut) <= inst.budget
            assert verify_cut(inst, verdict.cut)
    assert contained > 0
