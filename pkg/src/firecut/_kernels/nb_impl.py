"""Numba-jitted kernel implementations (default backend).

Same contracts as :mod:`firecut._kernels.py_impl`; plain loops instead of
vectorized passes.  All functions are cached across processes.
"""

from __future__ import annotations

import numpy as np
from numba import njit

NAME = "numba"


@njit(cache=True)
def _ball_bfs(dist, hw, w, deltas_indptr, deltas, blocked, sources, radius,
              extra_indptr, extra_targets, queue, visit_cap):
    n_layers = len(deltas_indptr) - 1
    has_extras = extra_targets.size > 0
    head = 0
    tail = 0
    for k in range(len(sources)):
        s = sources[k]
        if dist[s] < 0:
            dist[s] = 0
            queue[tail] = s
            tail += 1
    count = tail
    while head < tail:
        if 0 <= visit_cap < count:
            return count  # over the cap; dist is partial
        u = queue[head]
        head += 1
        du = dist[u]
        if du >= radius:
            continue
        t = u // hw if n_layers > 1 else 0
        for p in range(deltas_indptr[t], deltas_indptr[t + 1]):
            v = u + deltas[p]
            if dist[v] < 0 and not blocked[v]:
                dist[v] = du + 1
                queue[tail] = v
                tail += 1
                count += 1
        if has_extras:
            for p in range(extra_indptr[u], extra_indptr[u + 1]):
                v = extra_targets[p]
                if dist[v] < 0 and not blocked[v]:
                    dist[v] = du + 1
                    queue[tail] = v
                    tail += 1
                    count += 1
    return count


def ball_bfs(dist, hw, w, deltas_indptr, deltas, blocked, sources, radius,
             extra_indptr, extra_targets, visit_cap=-1):
    queue = np.empty(dist.size, np.int64)
    return int(
        _ball_bfs(dist, hw, w, deltas_indptr, deltas, blocked,
                  np.asarray(sources, dtype=np.int64), radius,
                  extra_indptr, extra_targets, queue, int(visit_cap))
    )


@njit(cache=True)
def _complement_scan(state, hw, w, deltas_indptr, deltas, blocked, seeds,
                     off_i, off_j, escape_norm, extra_indptr, extra_targets,
                     buf):
    n_layers = len(deltas_indptr) - 1
    has_extras = extra_targets.size > 0
    for k in range(len(seeds)):
        seed = seeds[k]
        if state[seed] != 0 or blocked[seed]:
            continue
        state[seed] = 3
        buf[0] = seed
        head = 0
        tail = 1
        escaped = False
        while head < tail:
            u = buf[head]
            head += 1
            rem = u % hw
            ii = rem // w - off_i
            jj = rem % w - off_j
            if ii < 0:
                ii = -ii
            if jj < 0:
                jj = -jj
            if ii + jj > escape_norm:
                escaped = True
                continue  # escaped cells are members but are not expanded
            t = u // hw if n_layers > 1 else 0
            for p in range(deltas_indptr[t], deltas_indptr[t + 1]):
                v = u + deltas[p]
                if state[v] == 0 and not blocked[v]:
                    state[v] = 3
                    buf[tail] = v
                    tail += 1
            if has_extras:
                for p in range(extra_indptr[u], extra_indptr[u + 1]):
                    v = extra_targets[p]
                    if state[v] == 0 and not blocked[v]:
                        state[v] = 3
                        buf[tail] = v
                        tail += 1
        mark = np.uint8(2) if escaped else np.uint8(1)
        for p in range(tail):
            state[buf[p]] = mark


def complement_scan(state, hw, w, deltas_indptr, deltas, blocked, seeds,
                    off_i, off_j, escape_norm, extra_indptr, extra_targets):
    buf = np.empty(state.size, np.int64)
    _complement_scan(state, hw, w, deltas_indptr, deltas, blocked,
                     np.asarray(seeds, dtype=np.int64), off_i, off_j,
                     escape_norm, extra_indptr, extra_targets, buf)


@njit(cache=True)
def _edmonds_karp(n, s, t, tails, heads, caps, early_stop):
    m = len(tails)
    rt = np.empty(2 * m, np.int64)
    rh = np.empty(2 * m, np.int64)
    res = np.empty(2 * m, np.int64)
    for i in range(m):
        rt[2 * i] = tails[i]
        rh[2 * i] = heads[i]
        res[2 * i] = caps[i]
        rt[2 * i + 1] = heads[i]
        rh[2 * i + 1] = tails[i]
        res[2 * i + 1] = 0

    deg = np.zeros(n + 1, np.int64)
    for a in range(2 * m):
        deg[rt[a] + 1] += 1
    indptr = np.cumsum(deg)
    fill = indptr[:-1].copy()
    order = np.empty(2 * m, np.int64)
    for a in range(2 * m):
        u = rt[a]
        order[fill[u]] = a
        fill[u] += 1

    parent = np.empty(n, np.int64)
    visited = np.zeros(n, np.bool_)
    queue = np.empty(n, np.int64)
    value = np.int64(0)
    stopped = False
    while not stopped:
        for i in range(n):
            visited[i] = False
            parent[i] = -1
        visited[s] = True
        queue[0] = s
        head = 0
        tail = 1
        found = False
        while head < tail and not found:
            u = queue[head]
            head += 1
            for p in range(indptr[u], indptr[u + 1]):
                a = order[p]
                if res[a] <= 0:
                    continue
                v = rh[a]
                if visited[v]:
                    continue
                visited[v] = True
                parent[v] = a
                if v == t:
                    found = True
                    break
                queue[tail] = v
                tail += 1
        if not found:
            break
        aug = np.int64(0x7FFFFFFFFFFFFFFF)
        v = t
        while v != s:
            a = parent[v]
            if res[a] < aug:
                aug = res[a]
            v = rt[a]
        v = t
        while v != s:
            a = parent[v]
            res[a] -= aug
            res[a ^ 1] += aug
            v = rt[a]
        value += aug
        if early_stop >= 0 and value > early_stop:
            stopped = True
    flows = np.empty(m, np.int64)
    for i in range(m):
        flows[i] = caps[i] - res[2 * i]
    if stopped:
        reach = np.zeros(n, np.bool_)
        return value, flows, reach
    return value, flows, visited.copy()


def edmonds_karp(n, s, t, tails, heads, caps, early_stop):
    value, flows, reach = _edmonds_karp(
        int(n), int(s), int(t),
        np.asarray(tails, dtype=np.int64),
        np.asarray(heads, dtype=np.int64),
        np.asarray(caps, dtype=np.int64),
        int(early_stop),
    )
    return int(value), flows, reach


@njit(cache=True)
def _cut_search(indptr, indices, csr_edge, removed, ignitions, m_edges,
                budget, pmax, start_size):
    n = len(indptr) - 1
    in_cut = np.zeros(m_edges, np.bool_)
    visited = np.zeros(n, np.int64)
    queue = np.empty(pmax + 2, np.int64)
    combo = np.empty(budget + 1, np.int64)
    epoch = np.int64(0)
    tried = np.int64(0)

    for k in range(start_size, budget + 1):
        if k > m_edges:
            break
        for i in range(k):
            combo[i] = i
        while True:
            tried += 1
            for i in range(k):
                in_cut[combo[i]] = True
            good = True
            for gidx in range(len(ignitions)):
                ig = ignitions[gidx]
                epoch += 1
                visited[ig] = epoch
                queue[0] = ig
                head = 0
                tail = 1
                cnt = 1
                if cnt > pmax:
                    good = False
                else:
                    while head < tail and good:
                        u = queue[head]
                        head += 1
                        for p in range(indptr[u], indptr[u + 1]):
                            v = indices[p]
                            if removed[v] or visited[v] == epoch:
                                continue
                            eid = csr_edge[p]
                            if eid >= 0 and in_cut[eid]:
                                continue
                            visited[v] = epoch
                            cnt += 1
                            if cnt > pmax:
                                good = False
                                break
                            queue[tail] = v
                            tail += 1
                if not good:
                    break
            for i in range(k):
                in_cut[combo[i]] = False
            if good:
                return True, k, combo[:k].copy(), tried
            # next lexicographic combination
            i = k - 1
            while i >= 0 and combo[i] == m_edges - k + i:
                i -= 1
            if i < 0:
                break
            combo[i] += 1
            for j in range(i + 1, k):
                combo[j] = combo[j - 1] + 1
    return False, -1, combo[:0].copy(), tried


def cut_search(indptr, indices, csr_edge, removed, ignitions, m_edges,
               budget, pmax, start_size=0):
    found, size, combo, tried = _cut_search(
        np.asarray(indptr, dtype=np.int64),
        np.asarray(indices, dtype=np.int64),
        np.asarray(csr_edge, dtype=np.int64),
        np.asarray(removed, dtype=np.bool_),
        np.asarray(ignitions, dtype=np.int64),
        int(m_edges), int(budget), int(pmax), int(start_size),
    )
    return bool(found), int(size), combo, int(tried)
