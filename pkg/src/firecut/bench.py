"""Timing suites.

``bench_grid`` also cross-checks the closed-form network-size law: for a
single ignition and no removed vertices the network must have exactly
2 + (1 + 2R(R+1)) nodes with R the combined bound at the budget.

``bench_backends`` runs the same kernel workloads under the numba and the
numpy backends and reports both timings; results must agree exactly.
"""

from __future__ import annotations

import time

from . import _kernels
from .bounds import grid_ball_bound, bounds_profile
from .gen import gen_hub_instance
from .graphs import InfiniteGrid
from .instances import make_instance
from .oracle import brute_force_solve
from .rayfree import solve_rayfree
from .solver import build_network, solve


def format_rows(rows: list[dict]) -> str:
    if not rows:
        return "(empty)"
    headers = list(rows[0])
    widths = [max(len(h), *(len(str(r[h])) for r in rows)) for h in headers]
    out = ["  ".join(h.ljust(w) for h, w in zip(headers, widths))]
    out.append("  ".join("-" * w for w in widths))
    for r in rows:
        out.append("  ".join(str(r[h]).ljust(w) for h, w in zip(headers, widths)))
    return "\n".join(out)


def bench_grid(min_budget: int = 1, max_budget: int = 8) -> list[dict]:
    """Single-ignition instances across budgets: size law plus wall times."""
    grid = InfiniteGrid()
    prof = bounds_profile(grid)
    rows = []
    for budget in range(min_budget, max_budget + 1):
        inst = make_instance(grid, [(0, 0)], budget)
        t0 = time.perf_counter()
        trace = build_network(inst)
        t_build = time.perf_counter() - t0
        radius = prof.combined(budget)
        expected = 2 + grid_ball_bound(radius)
        t0 = time.perf_counter()
        verdict = solve(inst)
        t_solve = time.perf_counter() - t0
        rows.append({
            "budget": budget,
            "radius": radius,
            "nodes": trace.node_count,
            "nodes_expected": expected,
            "law_ok": trace.node_count == expected,
            "contained": verdict.contained,
            "build_s": f"{t_build:.3f}",
            "solve_s": f"{t_solve:.3f}",
        })
    return rows


def bench_rayfree(sizes=(6, 8, 10, 12, 16, 24), seed: int = 1) -> list[dict]:
    rows = []
    for size in sizes:
        inst = gen_hub_instance(seed, explicit_size=size)
        t0 = time.perf_counter()
        verdict = solve_rayfree(inst)
        dt = time.perf_counter() - t0
        rows.append({
            "explicit_size": size,
            "edges": len(inst.graph.edges),
            "contained": verdict.contained,
            "solve_s": f"{dt:.5f}",
        })
    return rows


def _grid_workload():
    grid = InfiniteGrid()
    solve(make_instance(grid, [(0, 0)], 6))


def _oracle_workload():
    # not containable at B=3, so the search exhausts every candidate
    inst = make_instance(InfiniteGrid(), [(0, 0)], 3)
    assert not brute_force_solve(inst, window_radius=4).contained


def _flow_workload():
    inst = make_instance(InfiniteGrid(), [(0, 0), (1, 0)], 6)
    solve(inst)


def bench_backends() -> list[dict]:
    """The same workloads under both kernel backends."""
    workloads = [
        ("grid solve B=6", _grid_workload),
        ("pair solve B=6", _flow_workload),
        ("oracle search", _oracle_workload),
    ]
    previous = _kernels.get_backend()
    rows = []
    try:
        for name, fn in workloads:
            timings = {}
            for backend in ("numba", "python"):
                try:
                    _kernels.set_backend(backend)
                except ImportError:
                    timings[backend] = float("nan")
                    continue
                fn()  # warm (jit compile / cache touch)
                t0 = time.perf_counter()
                fn()
                timings[backend] = time.perf_counter() - t0
            ratio = (timings["python"] / timings["numba"]
                     if timings.get("numba") else float("nan"))
            rows.append({
                "workload": name,
                "numba_s": f"{timings.get('numba', float('nan')):.4f}",
                "python_s": f"{timings.get('python', float('nan')):.4f}",
                "speedup": f"{ratio:.1f}x",
            })
    finally:
        _kernels.set_backend(previous)
    return rows
