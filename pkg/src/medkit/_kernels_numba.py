"""Numba-compiled implementations of the hot kernels.

Importing this module requires numba.  Contracts match
``_kernels_numpy`` exactly; parity is enforced by tests.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def all_pairs_distances(adj):
    n = adj.shape[0]
    dist = np.full((n, n), -1, dtype=np.int32)
    queue = np.empty(n, dtype=np.int32)
    for src in range(n):
        drow = dist[src]
        drow[src] = 0
        queue[0] = src
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            du = drow[u]
            for v in range(n):
                if adj[u, v] and drow[v] < 0:
                    drow[v] = du + 1
                    queue[tail] = v
                    tail += 1
    return dist


@njit(cache=True)
def median_triple_check(dist):
    n = dist.shape[0]
    for x in range(n):
        for y in range(x + 1, n):
            dxy = dist[x, y]
            for z in range(y + 1, n):
                dxz = dist[x, z]
                dyz = dist[y, z]
                cnt = 0
                for c in range(n):
                    dxc = dist[x, c]
                    if (dxc + dist[c, y] == dxy
                            and dxc + dist[c, z] == dxz
                            and dist[y, c] + dist[c, z] == dyz):
                        cnt += 1
                        if cnt > 1:
                            break
                if cnt != 1:
                    return np.array([0, x, y, z], dtype=np.int64)
    return np.array([1, -1, -1, -1], dtype=np.int64)


@njit(cache=True)
def batch_medians(dist, xs, ys, zs):
    m = len(xs)
    n = dist.shape[0]
    out = np.empty(m, dtype=np.int64)
    for i in range(m):
        dx = dist[xs[i]]
        dy = dist[ys[i]]
        dz = dist[zs[i]]
        best = dx[0] + dy[0] + dz[0]
        arg = 0
        for c in range(1, n):
            s = dx[c] + dy[c] + dz[c]
            if s < best:
                best = s
                arg = c
        out[i] = arg
    return out


@njit(cache=True)
def hull_closure(dist, seed):
    n = dist.shape[0]
    mask = seed.copy()
    changed = True
    while changed:
        changed = False
        for a in range(n):
            if not mask[a]:
                continue
            for b in range(a + 1, n):
                if not mask[b]:
                    continue
                dab = dist[a, b]
                for c in range(n):
                    if not mask[c] and dist[a, c] + dist[c, b] == dab:
                        mask[c] = True
                        changed = True
    return mask
