"""Integer maximum-flow / minimum-cut on finite directed networks.

The algorithm is shortest-augmenting-path (breadth-first) max flow, which
is exact for integer capacities; the minimum cut is read off the residual
reachability of the final BFS.  Undirected graph edges are represented as
two opposite arcs of equal capacity.  "Infinite" capacities are encoded by
a sentinel strictly larger than any finite cut: the sum of all finite
capacities plus one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import _kernels
from .errors import ParseError


@dataclass
class FlowNetwork:
    """Directed network with integer capacities and two terminals.

    Arc storage accepts plain lists (incremental ``add_arc`` building, used
    for small networks) or numpy arrays (bulk construction by the solver).
    """

    n_nodes: int
    source: int
    sink: int
    tails: object = field(default_factory=list)
    heads: object = field(default_factory=list)
    caps: object = field(default_factory=list)

    def __post_init__(self):
        if not (0 <= self.source < self.n_nodes) or \
                not (0 <= self.sink < self.n_nodes):
            raise ParseError("terminal indices out of range")
        if self.source == self.sink:
            raise ParseError("source and sink must differ")

    def add_arc(self, u: int, v: int, cap: int) -> None:
        if not isinstance(self.tails, list):
            raise ParseError("this network was built from arrays; it cannot "
                             "grow arc by arc")
        if not (0 <= u < self.n_nodes and 0 <= v < self.n_nodes):
            raise ParseError(f"arc ({u},{v}) references an unknown node")
        if cap < 0:
            raise ParseError("capacities must be non-negative")
        self.tails.append(u)
        self.heads.append(v)
        self.caps.append(cap)

    def add_undirected_edge(self, u: int, v: int, cap: int) -> None:
        self.add_arc(u, v, cap)
        self.add_arc(v, u, cap)

    @property
    def n_arcs(self) -> int:
        return len(self.tails)

    def arrays(self):
        return (
            np.asarray(self.tails, dtype=np.int64),
            np.asarray(self.heads, dtype=np.int64),
            np.asarray(self.caps, dtype=np.int64),
        )

    def sentinel_capacity(self) -> int:
        """A capacity no finite-capacity cut can reach (acts as infinity)."""
        return int(np.asarray(self.caps, dtype=np.int64).sum()) + 1


@dataclass
class CutResult:
    """Max-flow value with the matching minimum cut.

    ``exceeded`` is set when the run was stopped early because the flow
    passed the caller's budget; the cut fields are then meaningless.
    """

    value: int
    source_side: np.ndarray  # bool per node; nodes reachable in the residual
    cut_arcs: np.ndarray     # input arc ids crossing source -> sink side
    flows: np.ndarray        # net flow per input arc
    exceeded: bool = False

    def cut_arc_set(self) -> set:
        return set(int(a) for a in self.cut_arcs)


def max_flow(net: FlowNetwork, early_stop: Optional[int] = None) -> CutResult:
    """Maximum s-t flow; equals the minimum s-t cut capacity.

    With ``early_stop=b`` the computation stops as soon as the flow value
    exceeds ``b`` and returns a result flagged ``exceeded`` (sufficient to
    answer "is the minimum cut at most b?").
    """
    tails, heads, caps = net.arrays()
    stop = -1 if early_stop is None else int(early_stop)
    value, flows, reach = _kernels.edmonds_karp(
        net.n_nodes, net.source, net.sink, tails, heads, caps, stop
    )
    if early_stop is not None and value > early_stop:
        return CutResult(value, reach, np.empty(0, np.int64), flows,
                         exceeded=True)
    crossing = np.flatnonzero(reach[tails] & ~reach[heads] & (caps > 0))
    return CutResult(value, reach, crossing, flows)


def assert_duality(net: FlowNetwork, result: CutResult) -> bool:
    """Internal consistency of a completed run.

    Checks flow conservation at every internal node, capacity limits, that
    the reported cut separates the terminals, and that its capacity equals
    the flow value (strong duality for integer networks).
    """
    if result.exceeded:
        return False
    tails, heads, caps = net.arrays()
    flows = result.flows
    if np.any(flows > caps):
        return False
    balance = np.zeros(net.n_nodes, dtype=np.int64)  # out minus in, per node
    np.add.at(balance, tails, flows)
    np.subtract.at(balance, heads, flows)
    expected = np.zeros(net.n_nodes, dtype=np.int64)
    expected[net.source] = result.value
    expected[net.sink] = -result.value
    if np.any(balance != expected):
        return False
    side = result.source_side
    if not side[net.source] or side[net.sink]:
        return False
    crossing = side[tails] & ~side[heads]
    if int(caps[crossing].sum()) != result.value:
        return False
    # every cut arc is saturated and nothing flows back across the cut
    if np.any(flows[crossing] != caps[crossing]):
        return False
    back = ~side[tails] & side[heads]
    if np.any(flows[back] > 0):
        return False
    return True


def dump_dimacs(net: FlowNetwork) -> str:
    """DIMACS-style text rendering of the network (for inspection)."""
    lines = [f"p max {net.n_nodes} {net.n_arcs}",
             f"n {net.source + 1} s",
             f"n {net.sink + 1} t"]
    for u, v, c in zip(net.tails, net.heads, net.caps):
        lines.append(f"a {u + 1} {v + 1} {c}")
    return "\n".join(lines) + "\n"
