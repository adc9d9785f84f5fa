"""Hot loops: breadth-first all-pairs distances and the packing search.

Every kernel has two implementations. The ``*_jit`` names are numba-compiled
when numba is present; the ``*_py`` names are the fallback. ``bfs_distances``
and ``search`` dispatch according to :data:`halin_packer._jit.USE_JIT`.
"""

import numpy as np

from ._jit import USE_JIT, maybe_njit

RUNNING = 0
SAT = 1
UNSAT = 2


def _bfs_distances(indptr, indices, n):
    dist = np.full((n, n), -1, dtype=np.int32)
    queue = np.empty(n, dtype=np.int64)
    for src in range(n):
        row = dist[src]
        row[src] = 0
        queue[0] = src
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            du = row[u] + 1
            for e in range(indptr[u], indptr[u + 1]):
                w = indices[e]
                if row[w] < 0:
                    row[w] = du
                    queue[tail] = w
                    tail += 1
    return dist


_bfs_distances_jit = maybe_njit(_bfs_distances)


def bfs_distances_py(indptr, indices, n):
    """Level-synchronous BFS from all sources at once using boolean matrices."""
    adj = np.zeros((n, n), dtype=np.float32)  # float so the product goes through BLAS
    rows = np.repeat(np.arange(n), np.diff(indptr))
    adj[rows, indices] = 1.0
    dist = np.full((n, n), -1, dtype=np.int32)
    np.fill_diagonal(dist, 0)
    seen = np.eye(n, dtype=bool)
    frontier = seen.copy()
    level = 0
    while frontier.any():
        level += 1
        reach = (frontier.astype(np.float32) @ adj) > 0
        frontier = reach & ~seen
        dist[frontier] = level
        seen |= frontier
    return dist


def bfs_distances_jit(indptr, indices, n):
    return _bfs_distances_jit(
        np.ascontiguousarray(indptr, dtype=np.int64),
        np.ascontiguousarray(indices, dtype=np.int64),
        n,
    )


def bfs_distances(indptr, indices, n):
    if USE_JIT:
        return bfs_distances_jit(indptr, indices, n)
    return bfs_distances_py(indptr, indices, n)


def _search(order, dist, s, group_prev, assign, next_try, used, state, node_budget, symmetry):
    # state = [depth, nodes]; returns RUNNING when node_budget more nodes were spent.
    n = order.shape[0]
    k = s.shape[0]
    depth = state[0]
    nodes = state[1]
    stop = nodes + node_budget
    while True:
        if depth == n:
            state[0] = depth
            state[1] = nodes
            return 1
        v = order[depth]
        c = next_try[depth]
        chosen = -1
        while c < k:
            if symmetry and group_prev[c] >= 0 and used[group_prev[c]] == 0:
                c += 1
                continue
            sc = s[c]
            ok = True
            for t in range(depth):
                u = order[t]
                if assign[u] == c and dist[v, u] <= sc:
                    ok = False
                    break
            if ok:
                chosen = c
                break
            c += 1
        if chosen >= 0:
            assign[v] = chosen
            used[chosen] += 1
            next_try[depth] = chosen + 1
            depth += 1
            next_try[depth] = 0
            nodes += 1
            if nodes >= stop:
                state[0] = depth
                state[1] = nodes
                return 0
        else:
            next_try[depth] = 0
            depth -= 1
            if depth < 0:
                state[0] = 0
                state[1] = nodes
                return 2
            u = order[depth]
            used[assign[u]] -= 1
            assign[u] = -1


search_py = _search
search_jit = maybe_njit(_search)


def search(*args):
    if USE_JIT:
        return search_jit(*args)
    return search_py(*args)
