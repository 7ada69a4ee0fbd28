import pytest

from firecut.cnf import cnf
from firecut.errors import CapExceeded, QueryError
from firecut.flow import FlowNetwork
from firecut.gen import gen_cnf
from firecut.graphs import DiagonalGrid, InfiniteGrid
from firecut.instances import make_instance
from firecut.oracle import (
    Polyomino,
    brute_force_min_cut,
    brute_force_sat,
    brute_force_solve,
    count_satisfying,
    enumerate_polyominoes,
    grid_region_cap,
    min_perimeter,
    perimeter,
)
from firecut.cnf import assignment_satisfies

GRID = InfiniteGrid()

KNOWN_COUNTS = {1: 1, 2: 2, 3: 6, 4: 19, 5: 63, 6: 216, 7: 760}


@pytest.mark.parametrize("p,count", sorted(KNOWN_COUNTS.items()))
def test_fixed_polyomino_counts(p, count):
    polys = enumerate_polyominoes(p)
    assert len(polys) == count
    assert len(set(polys)) == count  # exactly once up to translation


def test_polyominoes_are_normalized():
    for poly in enumerate_polyominoes(4):
        assert min(poly.cells) == (0, 0)


def test_enumeration_cap():
    with pytest.raises(CapExceeded):
        enumerate_polyominoes(13)


def test_perimeter_examples():
    single = Polyomino(frozenset({(0, 0)}))
    domino = Polyomino(frozenset({(0, 0), (1, 0)}))
    square = Polyomino(frozenset({(0, 0), (1, 0), (0, 1), (1, 1)}))
    assert perimeter(single) == 4
    assert perimeter(domino) == 6
    assert perimeter(square) == 8 == min_perimeter(4)


def test_min_perimeter_attained():
    for p in range(1, 8):
        values = [perimeter(q) for q in enumerate_polyominoes(p)]
        assert min(values) == min_perimeter(p)
        assert all(v >= min_perimeter(p) for v in values)


def test_region_cap_examples():
    assert grid_region_cap(make_instance(GRID, [(0, 0)], 3)) == 0
    assert grid_region_cap(make_instance(GRID, [(0, 0)], 4)) == 1
    assert grid_region_cap(make_instance(GRID, [(0, 0)], 6)) == 2
    assert grid_region_cap(make_instance(GRID, [(0, 0)], 8)) == 4


def test_brute_force_examples():
    assert brute_force_solve(make_instance(GRID, [(0, 0)], 4),
                             window_radius=2).contained
    assert not brute_force_solve(make_instance(GRID, [(0, 0)], 3),
                                 window_radius=3).contained
    pair = make_instance(GRID, [(0, 0), (1, 0)], 5)
    assert not brute_force_solve(pair, window_radius=3).contained
    # at B=6 an explicit window of 3 would breach the candidate cap
    # (16.1M subsets); the default provably-sufficient window is smaller
    pair6 = make_instance(GRID, [(0, 0), (1, 0)], 6)
    verdict = brute_force_solve(pair6)
    assert verdict.contained and verdict.min_cut_value == 6


def test_brute_force_first_hit_is_minimum():
    verdict = brute_force_solve(make_instance(GRID, [(0, 0)], 6))
    assert verdict.min_cut_value == 4
    assert len(verdict.cut) == 4


def test_brute_force_respects_removed_vertices():
    inst = make_instance(GRID, [(0, 0)], 1, [(1, 0), (-1, 0), (0, 1)])
    verdict = brute_force_solve(inst)
    assert verdict.contained and verdict.min_cut_value == 1


def test_brute_force_guards():
    with pytest.raises(QueryError):
        brute_force_solve(make_instance(DiagonalGrid(), [(0, 0)], 2))
    big = make_instance(GRID, [(0, 0)], 6)
    with pytest.raises(CapExceeded):
        brute_force_solve(big, window_radius=6, candidate_cap=10_000)


def test_brute_force_sat_basics():
    assert brute_force_sat(cnf(1, [(1,)]))
    assert not brute_force_sat(cnf(1, [(1,), (-1,)]))
    assert brute_force_sat(cnf(3, [(1, -2), (2, 3), (-1, -3)]))


def test_brute_force_sat_cap():
    with pytest.raises(CapExceeded):
        brute_force_sat(cnf(21, [(1,)]))


def test_count_satisfying_matches_direct_check():
    for seed in range(8):
        formula = gen_cnf(seed, max_vars=9)
        sats = count_satisfying(formula, 1 << formula.n_vars)
        for bits in sats[:50]:
            assert assignment_satisfies(formula, bits)
        total = sum(
            1
            for bits in range(1 << formula.n_vars)
            if assignment_satisfies(formula, bits)
        )
        assert len(sats) == total
        assert brute_force_sat(formula) == (total > 0)


def test_brute_force_min_cut_small():
    net = FlowNetwork(3, 0, 2)
    net.add_arc(0, 1, 2)
    net.add_arc(1, 2, 3)
    assert brute_force_min_cut(net) == 2
    # already disconnected: the empty cut works
    assert brute_force_min_cut(FlowNetwork(2, 0, 1)) == 0
    with pytest.raises(CapExceeded):
        wide = FlowNetwork(2, 0, 1)
        for _ in range(21):
            wide.add_arc(0, 1, 1)
        brute_force_min_cut(wide)
