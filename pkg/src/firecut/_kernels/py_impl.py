"""Pure numpy kernel implementations (fallback backend).

Windows are dense (layers, H, W) arrays flattened to 1-D linear ids; the
caller guarantees a blocked guard ring of width >= the stencil reach, so
``lin + delta`` arithmetic never wraps for any cell a search can expand.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

NAME = "python"


def _expand(frontier, hw, deltas_indptr, deltas, n_layers):
    """Raw stencil successors of a frontier of linear ids."""
    if n_layers == 1:
        return (frontier[:, None] + deltas[None, :]).ravel()
    out = []
    lay = frontier // hw
    for t in range(n_layers):
        ft = frontier[lay == t]
        if ft.size:
            dts = deltas[deltas_indptr[t]:deltas_indptr[t + 1]]
            out.append((ft[:, None] + dts[None, :]).ravel())
    if not out:
        return np.empty(0, np.int64)
    return np.concatenate(out)


def _expand_extras(frontier, extra_indptr, extra_targets):
    if extra_targets.size == 0:
        return np.empty(0, np.int64)
    deg = extra_indptr[frontier + 1] - extra_indptr[frontier]
    carriers = frontier[deg > 0]
    if carriers.size == 0:
        return np.empty(0, np.int64)
    return np.concatenate([
        extra_targets[extra_indptr[u]:extra_indptr[u + 1]] for u in carriers
    ])


def ball_bfs(dist, hw, w, deltas_indptr, deltas, blocked, sources, radius,
             extra_indptr, extra_targets, visit_cap=-1):
    """BFS levels into ``dist`` (int32, -1 init); returns visited count.

    With ``visit_cap >= 0`` the search aborts once more cells than the cap
    were visited and returns the (over-cap) running count; ``dist`` is then
    partial and must be discarded.
    """
    n_layers = len(deltas_indptr) - 1
    frontier = np.unique(np.asarray(sources, dtype=np.int64))
    dist[frontier] = 0
    count = int(frontier.size)
    for level in range(1, radius + 1):
        if frontier.size == 0:
            break
        cand = _expand(frontier, hw, deltas_indptr, deltas, n_layers)
        ex = _expand_extras(frontier, extra_indptr, extra_targets)
        if ex.size:
            cand = np.concatenate([cand, ex])
        if cand.size == 0:
            break
        cand = cand[(dist[cand] < 0) & ~blocked[cand]]
        frontier = np.unique(cand)
        dist[frontier] = level
        count += int(frontier.size)
        if 0 <= visit_cap < count:
            return count
    return count


def complement_scan(state, hw, w, deltas_indptr, deltas, blocked, seeds,
                    off_i, off_j, escape_norm, extra_indptr, extra_targets):
    """Flood the complement from each seed with a radial escape test.

    ``state`` (uint8, 0 init) receives 1 for members of finite pockets and
    2 for members of regions that reached L1 norm > ``escape_norm`` (such a
    region can walk to infinity, so it is not a pocket).  Blocked cells are
    never entered.  Work is shared: each complement cell is visited once.
    """
    n_layers = len(deltas_indptr) - 1
    for seed in np.asarray(seeds, dtype=np.int64):
        if state[seed] or blocked[seed]:
            continue
        state[seed] = 3
        component = [np.array([seed], dtype=np.int64)]
        frontier = component[0]
        escaped = False
        while frontier.size:
            ii = (frontier % hw) // w - off_i
            jj = frontier % w - off_j
            esc = (np.abs(ii) + np.abs(jj)) > escape_norm
            if esc.any():
                escaped = True
                frontier = frontier[~esc]
                if frontier.size == 0:
                    break
            cand = _expand(frontier, hw, deltas_indptr, deltas, n_layers)
            ex = _expand_extras(frontier, extra_indptr, extra_targets)
            if ex.size:
                cand = np.concatenate([cand, ex])
            if cand.size == 0:
                break
            cand = cand[(state[cand] == 0) & ~blocked[cand]]
            frontier = np.unique(cand)
            state[frontier] = 3
            component.append(frontier)
        members = np.concatenate(component)
        state[members] = 2 if escaped else 1


def _ragged_gather(indptr, nodes):
    """CSR row positions of all entries of the given rows."""
    starts = indptr[nodes]
    counts = indptr[nodes + 1] - starts
    total = int(counts.sum())
    if total == 0:
        return np.empty(0, np.int64)
    reps = np.repeat(starts, counts)
    offs = np.arange(total, dtype=np.int64) - np.repeat(
        np.cumsum(counts) - counts, counts
    )
    return reps + offs


def edmonds_karp(n, s, t, tails, heads, caps, early_stop):
    """Integer max flow by shortest augmenting paths.

    Residual arcs are interleaved: arc 2i is input arc i, arc 2i+1 its
    reverse; the residual partner of arc a is a ^ 1.  Returns
    ``(value, flows, reach)`` where ``flows`` is the net flow per input arc
    and ``reach`` the source side of the final residual graph.  With
    ``early_stop >= 0`` the search stops once value > early_stop (the
    returned reach is then meaningless).
    """
    m = len(tails)
    rt = np.empty(2 * m, np.int64)
    rh = np.empty(2 * m, np.int64)
    res = np.empty(2 * m, np.int64)
    rt[0::2] = tails
    rh[0::2] = heads
    res[0::2] = caps
    rt[1::2] = heads
    rh[1::2] = tails
    res[1::2] = 0

    order = np.argsort(rt, kind="stable").astype(np.int64)
    indptr = np.zeros(n + 1, np.int64)
    np.cumsum(np.bincount(rt, minlength=n), out=indptr[1:])

    def bfs():
        parent = np.full(n, -1, np.int64)  # residual arc into each node
        visited = np.zeros(n, bool)
        visited[s] = True
        frontier = np.array([s], dtype=np.int64)
        while frontier.size:
            pos = _ragged_gather(indptr, frontier)
            arcs = order[pos]
            ok = res[arcs] > 0
            arcs = arcs[ok]
            targets = rh[arcs]
            fresh = ~visited[targets]
            arcs = arcs[fresh]
            targets = targets[fresh]
            if targets.size == 0:
                break
            uniq, first = np.unique(targets, return_index=True)
            visited[uniq] = True
            parent[uniq] = arcs[first]
            if visited[t]:
                break
            frontier = uniq
        return parent, visited

    value = 0
    while True:
        parent, visited = bfs()
        if not visited[t]:
            return value, caps - res[0::2], visited
        aug = None
        v = t
        while v != s:
            a = parent[v]
            aug = res[a] if aug is None else min(aug, res[a])
            v = rt[a]
        v = t
        while v != s:
            a = parent[v]
            res[a] -= aug
            res[a ^ 1] += aug
            v = rt[a]
        value += int(aug)
        if early_stop >= 0 and value > early_stop:
            return value, caps - res[0::2], np.zeros(n, bool)


def cut_search(indptr, indices, csr_edge, removed, ignitions, m_edges,
               budget, pmax, start_size=0):
    """Exhaustive search over cut systems of size start_size..budget.

    Candidates are index combinations over the canonical edge list, in
    (size, lexicographic) order.  A candidate contains the fire iff BFS
    from every ignition, skipping removed vertices and candidate edges,
    halts within ``pmax`` vertices; any component forced beyond ``pmax``
    vertices is necessarily infinite for this family and budget.

    Returns ``(found, size, combo, tried)``.
    """
    n = len(indptr) - 1
    adj = [
        [(int(indices[p]), int(csr_edge[p])) for p in range(indptr[u], indptr[u + 1])]
        for u in range(n)
    ]
    removed = np.asarray(removed, dtype=bool)
    in_cut = bytearray(m_edges)
    visited = [0] * n
    epoch = 0
    queue = [0] * (pmax + 2)

    def contained_all() -> bool:
        nonlocal epoch
        for ig in ignitions:
            epoch += 1
            visited[ig] = epoch
            queue[0] = ig
            head, tail, cnt = 0, 1, 1
            if cnt > pmax:
                return False
            ok = True
            while head < tail:
                u = queue[head]
                head += 1
                for v, eid in adj[u]:
                    if removed[v] or visited[v] == epoch:
                        continue
                    if eid >= 0 and in_cut[eid]:
                        continue
                    visited[v] = epoch
                    cnt += 1
                    if cnt > pmax:
                        ok = False
                        break
                    queue[tail] = v
                    tail += 1
                if not ok:
                    break
            if not ok:
                return False
        return True

    tried = 0
    for k in range(start_size, budget + 1):
        for combo in combinations(range(m_edges), k):
            tried += 1
            for e in combo:
                in_cut[e] = 1
            good = contained_all()
            for e in combo:
                in_cut[e] = 0
            if good:
                return True, k, np.array(combo, dtype=np.int64), tried
    return False, -1, np.empty(0, np.int64), tried
