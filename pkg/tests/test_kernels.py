"""Backend parity: the numba and numpy kernels must agree.

Searches and enumeration are bit-identical across backends.  Max flow
values agree exactly; the flow assignment and the returned minimum cut
may differ between backends (both are valid optimal certificates), so
those are checked through the duality predicate instead.
"""

import numpy as np
import pytest

from conftest import backends_available

from firecut import _kernels
from firecut.flow import FlowNetwork, assert_duality, max_flow
from firecut.gen import gen_grid_instance, gen_hub_instance
from firecut.graphs import InfiniteGrid
from firecut.instances import make_instance
from firecut.oracle import brute_force_solve
from firecut.rayfree import solve_rayfree
from firecut.solver import build_network, solve, verify_cut

BACKENDS = backends_available()
needs_both = pytest.mark.skipif(len(BACKENDS) < 2,
                                reason="numba backend unavailable")


def run_on(backend, fn):
    _kernels.set_backend(backend)
    try:
        return fn()
    finally:
        _kernels.set_backend(BACKENDS[0])


@needs_both
def test_env_flag_selects_backend(each_backend):
    assert _kernels.set_backend("python") == "python"
    assert _kernels.set_backend("numba") == "numba"


@needs_both
def test_ball_and_network_shape_parity(each_backend):
    inst = make_instance(InfiniteGrid(), [(0, 0), (2, 1)], 3, [(1, 0)])
    shapes = {}
    for backend in BACKENDS:
        trace = run_on(backend, lambda: build_network(inst))
        shapes[backend] = (
            trace.radius_used,
            trace.v2_count,
            trace.v3_count,
            trace.node_count,
            trace.network.n_arcs,
            tuple(sorted(map(int, trace.t_attached_nodes))),
        )
    assert shapes["numba"] == shapes["python"]


@needs_both
def test_solver_verdict_parity(each_backend):
    for seed in range(8):
        inst = gen_grid_instance(seed)
        results = {
            backend: run_on(backend, lambda: solve(inst))
            for backend in BACKENDS
        }
        a, b = results["numba"], results["python"]
        assert a.contained == b.contained
        assert a.min_cut_value == b.min_cut_value
        if a.contained:
            assert verify_cut(inst, a.cut) and verify_cut(inst, b.cut)


@needs_both
def test_oracle_parity_is_bit_identical(each_backend):
    for seed in range(6):
        inst = gen_grid_instance(seed)
        results = {
            backend: run_on(backend, lambda: brute_force_solve(inst))
            for backend in BACKENDS
        }
        a, b = results["numba"], results["python"]
        assert a.contained == b.contained
        assert a.min_cut_value == b.min_cut_value
        assert a.cut == b.cut  # same enumeration order, same first hit


@needs_both
def test_flow_value_parity(each_backend):
    rng = np.random.default_rng(7)
    for _ in range(40):
        n = int(rng.integers(4, 10))
        net = FlowNetwork(n, 0, n - 1)
        for _ in range(int(rng.integers(4, 18))):
            u, v = rng.choice(n, size=2, replace=False)
            net.add_arc(int(u), int(v), int(rng.integers(0, 6)))
        values = {}
        for backend in BACKENDS:
            result = run_on(backend, lambda: max_flow(net))
            values[backend] = result.value
            assert run_on(backend, lambda: assert_duality(net, result))
        assert values["numba"] == values["python"]


@needs_both
def test_rayfree_parity(each_backend):
    for seed in range(6):
        inst = gen_hub_instance(seed)
        results = {
            backend: run_on(backend, lambda: solve_rayfree(inst))
            for backend in BACKENDS
        }
        assert (results["numba"].contained, results["numba"].min_cut_value) \
            == (results["python"].contained, results["python"].min_cut_value)
