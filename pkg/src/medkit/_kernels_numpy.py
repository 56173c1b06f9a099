"""Pure-numpy implementations of the hot kernels.

Fallback path used when numba is unavailable or when
MEDKIT_KERNELS=numpy is set.  Same contracts as ``_kernels_numba``.
"""

import numpy as np


def all_pairs_distances(adj):
    """BFS distances from every source via frontier layering.

    adj: (n, n) bool adjacency.  Returns int32 matrix with -1 for
    unreachable pairs.
    """
    n = adj.shape[0]
    dist = np.full((n, n), -1, dtype=np.int32)
    np.fill_diagonal(dist, 0)
    reached = np.eye(n, dtype=bool)
    frontier = np.eye(n, dtype=bool)
    d = 0
    a = adj.astype(np.uint8)
    while frontier.any():
        d += 1
        nxt = (frontier.astype(np.uint8) @ a) > 0
        nxt &= ~reached
        dist[nxt] = d
        reached |= nxt
        frontier = nxt
    return dist


def median_triple_check(dist):
    """Check that every vertex triple has exactly one median point.

    Returns int64 [ok, x, y, z]; on failure (x, y, z) is a witness
    triple with median count != 1.
    """
    n = dist.shape[0]
    # interval membership tensor: I[a, b, c] <=> c on a geodesic a..b
    interval = (dist[:, None, :] + dist[None, :, :]) == dist[:, :, None]
    for x in range(n):
        row = interval[x]  # (n, n): row[y, c] <=> c in [x, y]
        counts = (row[:, None, :] & row[None, :, :] & interval).sum(axis=2)
        if not (counts == 1).all():
            bad = np.argwhere(counts != 1)
            y, z = int(bad[0, 0]), int(bad[0, 1])
            return np.array([0, x, y, z], dtype=np.int64)
    return np.array([1, -1, -1, -1], dtype=np.int64)


def batch_medians(dist, xs, ys, zs):
    """Median vertex for each triple, assuming a valid median graph.

    The median uniquely minimises d(x,.) + d(y,.) + d(z,.).
    """
    out = np.empty(len(xs), dtype=np.int64)
    chunk = max(1, 2_000_000 // max(1, dist.shape[0]))
    for lo in range(0, len(xs), chunk):
        hi = min(lo + chunk, len(xs))
        sums = dist[xs[lo:hi]] + dist[ys[lo:hi]] + dist[zs[lo:hi]]
        out[lo:hi] = sums.argmin(axis=1)
    return out


def hull_closure(dist, seed):
    """Close a vertex mask under intervals (convex hull fixed point)."""
    mask = seed.copy()
    while True:
        idx = np.flatnonzero(mask)
        sub = dist[idx]
        # member[c] <=> c lies on a geodesic between some pair of idx
        between = (sub[:, None, :] + sub[None, :, :]) == dist[np.ix_(idx, idx)][:, :, None]
        new = between.any(axis=(0, 1))
        if (new == mask).all():
            return mask
        mask = new
