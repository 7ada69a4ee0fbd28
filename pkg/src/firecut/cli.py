"""Command-line interface.

Exit codes: 0 = contained / success, 1 = not contained / mismatch,
2 = error.  ``--json`` switches every verdict-producing command to a
stable machine-readable object on stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .bounds import bounds_profile
from .errors import FirecutError
from .explorer import component_bounded
from .gadgets import solve_star, verify_cut_star
from .graphs import (
    DiagonalGrid,
    HubGraph,
    InfiniteGrid,
    PolyominoGrid,
    StarOfSubsets,
    _vkey,
    apply_cut,
    is_lattice_family,
    make_edge,
    max_degree,
    restrict,
    vertex_to_json,
)
from .instances import (
    Instance,
    cut_to_json,
    dump_cut,
    dump_instance,
    load_cut,
    load_instance,
)
from .flow import dump_dimacs
from .oracle import brute_force_solve, brute_force_solve_hub
from .rayfree import solve_rayfree, verify_cut_hub
from .solver import DEFAULT_NODE_CAP, Verdict, solve, verify_cut


def solve_instance(instance: Instance, **kwargs) -> Verdict:
    """Family-routed containment decision."""
    if is_lattice_family(instance.graph):
        return solve(instance, **kwargs)
    if isinstance(instance.graph, HubGraph):
        return solve_rayfree(instance)
    if isinstance(instance.graph, StarOfSubsets):
        return solve_star(instance)
    raise FirecutError(f"no solver for family {type(instance.graph).__name__}")


def verify_instance_cut(instance: Instance, cut) -> bool:
    """Family-routed direct check of a proposed cut system."""
    if is_lattice_family(instance.graph):
        return verify_cut(instance, cut)
    if isinstance(instance.graph, HubGraph):
        return verify_cut_hub(instance, cut)
    if isinstance(instance.graph, StarOfSubsets):
        return verify_cut_star(instance, cut)
    raise FirecutError(f"no verifier for family {type(instance.graph).__name__}")


def _verdict_json(verdict: Verdict) -> dict:
    out = {
        "contained": verdict.contained,
        "min_cut_value": verdict.min_cut_value,
        "cut": cut_to_json(verdict.cut)["edges"] if verdict.cut is not None
               else None,
    }
    if verdict.reason:
        out["reason"] = verdict.reason
    if verdict.precontained:
        out["precontained"] = [vertex_to_json(v)
                               for v in sorted(verdict.precontained, key=_vkey)]
    return out


def render_grid_verdict(instance: Instance, verdict: Verdict) -> str:
    """ASCII picture of a plain-grid outcome.

    ``S`` ignition, ``*`` burned, ``#`` removed, ``.`` intact; ``|`` and
    ``-`` mark cut edges between cells.
    """
    if not isinstance(instance.graph, InfiniteGrid):
        return "(rendering is available for plain-grid instances only)\n"
    cut = verdict.cut or frozenset()
    burned: set = set(instance.ignitions)
    if verdict.contained:
        prof = bounds_profile(instance.graph)
        bound = prof.adjusted(instance.budget, max_degree(instance.graph),
                              len(instance.removed))
        oracle = apply_cut(restrict(instance.graph, instance.removed), cut)
        for ig in instance.ignitions:
            report = component_bounded(oracle, ig, bound)
            if report.finite:
                burned |= set(report.members)
    marks = burned | set(instance.removed) | set(instance.ignitions)
    for u, v in cut:
        marks |= {u, v}
    if not marks:
        return "(nothing to draw)\n"
    i_lo = min(v[0] for v in marks) - 1
    i_hi = max(v[0] for v in marks) + 1
    j_lo = min(v[1] for v in marks) - 1
    j_hi = max(v[1] for v in marks) + 1
    width = 2 * (i_hi - i_lo) + 1
    rows = []
    for j in range(j_hi, j_lo - 1, -1):
        row = [" "] * width
        for i in range(i_lo, i_hi + 1):
            col = 2 * (i - i_lo)
            cell = (i, j)
            if cell in instance.ignitions:
                ch = "S"
            elif cell in instance.removed:
                ch = "#"
            elif cell in burned:
                ch = "*"
            else:
                ch = "."
            row[col] = ch
            if col + 1 < width and make_edge(cell, (i + 1, j)) in cut:
                row[col + 1] = "|"
        rows.append("".join(row))
        if j > j_lo:
            sep = [" "] * width
            for i in range(i_lo, i_hi + 1):
                if make_edge((i, j), (i, j - 1)) in cut:
                    sep[2 * (i - i_lo)] = "-"
            rows.append("".join(sep))
    return "\n".join(rows) + "\n"


def _cmd_solve(args) -> int:
    instance = load_instance(args.instance)
    verdict = solve_instance(
        instance,
        **({"node_cap": args.node_cap, "keep_trace": args.trace}
           if is_lattice_family(instance.graph) else {}),
    )
    if args.emit_cut and verdict.contained:
        dump_cut(verdict.cut, args.emit_cut)
    if args.dump_network and verdict.trace is not None:
        with open(args.dump_network, "w", encoding="utf-8") as fh:
            fh.write(dump_dimacs(verdict.trace.network))
    if args.json:
        print(json.dumps(_verdict_json(verdict), sort_keys=True))
    else:
        if verdict.contained:
            print(f"contained: min cut {verdict.min_cut_value}, "
                  f"{len(verdict.cut)} edge(s)")
        else:
            print(f"not contained: {verdict.reason or 'no cut within budget'}")
        if verdict.precontained:
            print(f"{len(verdict.precontained)} ignition(s) already confined "
                  "by the removed set")
        if args.trace and verdict.trace is not None:
            tr = verdict.trace
            print(f"radius {tr.radius_used}, ball {tr.v2_count} + pockets "
                  f"{tr.v3_count}, network {tr.node_count} nodes / "
                  f"{tr.network.n_arcs} arcs, {len(tr.t_attached_nodes)} "
                  "escape vertices")
        if args.trace:
            sys.stdout.write(render_grid_verdict(instance, verdict))
    return 0 if verdict.contained else 1


def _cmd_verify(args) -> int:
    instance = load_instance(args.instance)
    cut = load_cut(args.cut, instance)
    ok = verify_instance_cut(instance, cut)
    if args.json:
        print(json.dumps({"valid": ok}))
    else:
        print("cut contains the fire" if ok else "cut does NOT contain the fire")
    return 0 if ok else 1


def _cmd_oracle(args) -> int:
    instance = load_instance(args.instance)
    if isinstance(instance.graph, HubGraph):
        verdict = brute_force_solve_hub(instance, candidate_cap=args.cap)
    else:
        verdict = brute_force_solve(instance, window_radius=args.window,
                                    candidate_cap=args.cap)
    if args.json:
        print(json.dumps(_verdict_json(verdict), sort_keys=True))
    else:
        state = "contained" if verdict.contained else "not contained"
        print(f"oracle: {state}"
              + (f", min cut {verdict.min_cut_value}" if verdict.contained
                 else ""))
    return 0 if verdict.contained else 1


def _cmd_gadget(args) -> int:
    from .cnf import parse_dimacs
    from .gadgets import SInstance, build_sat_gadget, solve_s_instance

    with open(args.cnf, "r", encoding="utf-8") as fh:
        formula = parse_dimacs(fh.read())
    gadget = build_sat_gadget(formula)
    if args.budget is not None:
        gadget = SInstance(gadget.n_vars, gadget.predicate, gadget.extra_ray,
                           args.budget)
    verdict = solve_s_instance(gadget)
    if args.json:
        out = _verdict_json(verdict)
        out["n_vars"] = gadget.n_vars
        out["budget"] = gadget.budget
        print(json.dumps(out, sort_keys=True))
    else:
        state = "contained" if verdict.contained else "not contained"
        line = f"gadget: {state} (budget {gadget.budget})"
        if gadget.budget == 1 and gadget.extra_ray:
            sat = "satisfiable" if not verdict.contained else "UNSATISFIABLE"
            line += f"; formula is {sat}"
        print(line)
    return 0 if verdict.contained else 1


def _cmd_gen(args) -> int:
    from . import gen as g

    if args.family == "grid":
        instance = g.gen_grid_instance(args.seed, max_ignitions=args.ignitions,
                                       max_budget=args.budget,
                                       max_removed=args.removed)
    elif args.family == "diagonal":
        instance = g.gen_diagonal_instance(args.seed, max_budget=args.budget)
    elif args.family == "polyomino":
        instance = g.gen_polyomino_instance(args.seed,
                                            max_tile_size=args.tile_size)
    elif args.family == "hub":
        instance = g.gen_hub_instance(args.seed,
                                      explicit_size=args.explicit_size,
                                      n_hubs=args.hubs,
                                      max_budget=args.budget)
    else:
        raise FirecutError(f"unknown family {args.family!r}")
    text = dump_instance(instance, args.output)
    if args.output is None:
        sys.stdout.write(text)
    return 0


def _cmd_bounds(args) -> int:
    if args.family == "grid":
        spec = InfiniteGrid()
    elif args.family == "diagonal":
        spec = DiagonalGrid()
    elif args.family == "polyomino":
        from .gen import unit_tiling, gen_tiling

        spec = PolyominoGrid(gen_tiling(0, args.tile_size)
                             if args.tile_size > 1 else unit_tiling())
    else:
        raise FirecutError(f"unknown family {args.family!r}")
    prof = bounds_profile(spec)
    rows = []
    if args.ball is not None:
        rows.append(("ball_bound", args.ball, prof.ball_bound(args.ball)))
        rows.append(("combined", args.ball, prof.combined(args.ball)))
    if args.expansion is not None:
        rows.append(("expansion_bound", args.expansion,
                     prof.expansion_bound(args.expansion)))
    if not rows:
        raise FirecutError("pass --ball K and/or --expansion B")
    for name, arg, val in rows:
        print(f"{name}({arg}) = {val}")
    return 0


def _cmd_xcheck(args) -> int:
    from .gen import gen_grid_instance

    mismatches = 0
    t0 = time.time()
    for k in range(args.count):
        instance = gen_grid_instance(args.seed + k)
        got = solve(instance)
        want = brute_force_solve(instance)
        same = got.contained == want.contained and (
            not got.contained or got.min_cut_value == want.min_cut_value
        )
        if same and got.contained:
            same = verify_cut(instance, got.cut)  # round trip on the cut
        if not same:
            mismatches += 1
            print(f"MISMATCH seed={args.seed + k}: solver="
                  f"{got.contained}/{got.min_cut_value} oracle="
                  f"{want.contained}/{want.min_cut_value}")
    dt = time.time() - t0
    print(f"xcheck: {args.count - mismatches}/{args.count} agree "
          f"({dt:.1f}s)")
    return 0 if mismatches == 0 else 1


def _cmd_bench(args) -> int:
    from . import bench

    if args.suite == "grid":
        text = bench.format_rows(bench.bench_grid(args.min_budget,
                                                  args.max_budget))
    elif args.suite == "rayfree":
        text = bench.format_rows(bench.bench_rayfree())
    elif args.suite == "backends":
        text = bench.format_rows(bench.bench_backends())
    else:
        raise FirecutError(f"unknown suite {args.suite!r}")
    print(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="firecut",
        description="Decide whether a fire igniting on an infinite graph "
                    "can be contained by removing at most B edges.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="decide an instance file")
    p.add_argument("instance")
    p.add_argument("--emit-cut", metavar="PATH")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--dump-network", metavar="PATH")
    p.add_argument("--node-cap", type=int, default=DEFAULT_NODE_CAP)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_solve)

    p = sub.add_parser("verify", help="check a cut file against an instance")
    p.add_argument("instance")
    p.add_argument("--cut", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("oracle", help="exhaustive brute-force decision")
    p.add_argument("instance")
    p.add_argument("--window", type=int, default=None)
    p.add_argument("--cap", type=int, default=10_000_000)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_oracle)

    p = sub.add_parser("gadget", help="decide a DIMACS CNF via the star "
                                      "construction")
    p.add_argument("--cnf", required=True)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_gadget)

    p = sub.add_parser("gen", help="generate a random instance file")
    p.add_argument("family", choices=["grid", "diagonal", "polyomino", "hub"])
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--ignitions", type=int, default=3)
    p.add_argument("--budget", type=int, default=6)
    p.add_argument("--removed", type=int, default=4)
    p.add_argument("--tile-size", type=int, default=2)
    p.add_argument("--explicit-size", type=int, default=8)
    p.add_argument("--hubs", type=int, default=2)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("bounds", help="evaluate the growth/expansion bounds")
    p.add_argument("family", choices=["grid", "diagonal", "polyomino"])
    p.add_argument("--ball", type=int, default=None)
    p.add_argument("--expansion", type=int, default=None)
    p.add_argument("--tile-size", type=int, default=1)
    p.set_defaults(fn=_cmd_bounds)

    p = sub.add_parser("xcheck", help="batch solver-vs-oracle agreement")
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=_cmd_xcheck)

    p = sub.add_parser("bench", help="timing suites")
    p.add_argument("suite", choices=["grid", "rayfree", "backends"])
    p.add_argument("--min-budget", type=int, default=1)
    p.add_argument("--max-budget", type=int, default=8)
    p.set_defaults(fn=_cmd_bench)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except FirecutError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
