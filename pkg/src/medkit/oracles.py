"""Brute-force reference implementations.

Everything here is deliberately slow, pure-Python enumeration over
sets and dicts, independent of the numpy/numba paths in the rest of
the package.  Tests and verification sweeps compare the fast
implementations against these; keep the two routes separate.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from itertools import combinations


def bfs_distances(n: int, edges) -> list[list[int]]:
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    dist = []
    for src in range(n):
        d = [-1] * n
        d[src] = 0
        q = deque([src])
        while q:
            u = q.popleft()
            for v in adj[u]:
                if d[v] < 0:
                    d[v] = d[u] + 1
                    q.append(v)
        dist.append(d)
    return dist


def interval(dist, a: int, b: int) -> set:
    return {c for c in range(len(dist))
            if dist[a][c] + dist[c][b] == dist[a][b]}


def median_candidates(dist, x: int, y: int, z: int) -> set:
    return interval(dist, x, y) & interval(dist, y, z) & interval(dist, x, z)


def is_median(dist):
    """(ok, witness) by exhaustive triple enumeration."""
    n = len(dist)
    for x in range(n):
        for y in range(x + 1, n):
            for z in range(y + 1, n):
                if len(median_candidates(dist, x, y, z)) != 1:
                    return False, (x, y, z)
    return True, None


def is_convex(dist, subset) -> bool:
    s = set(subset)
    return all(interval(dist, a, b) <= s for a in s for b in s)


def hull(dist, subset) -> set:
    s = set(subset)
    while True:
        grown = set(s)
        for a, b in combinations(sorted(s), 2):
            grown |= interval(dist, a, b)
        if grown == s:
            return s
        s = grown


def median_closure(dist, subset) -> set:
    s = set(subset)
    while True:
        grown = set(s)
        for x, y, z in combinations(sorted(s), 3):
            (m,) = median_candidates(dist, x, y, z)
            grown.add(m)
        if grown == s:
            return s
        s = grown


def gate_points(dist, convex_set, x: int) -> set:
    """All nearest points; a singleton on convex sets of median graphs."""
    best = min(dist[x][c] for c in convex_set)
    return {c for c in convex_set if dist[x][c] == best}


def all_halfspaces(dist) -> list[frozenset]:
    """Every halfspace by full subset enumeration (tiny graphs only)."""
    n = len(dist)
    out = []
    for bits in range(1, (1 << n) - 1):
        side = frozenset(v for v in range(n) if bits & (1 << v))
        other = frozenset(range(n)) - side
        if is_convex(dist, side) and is_convex(dist, other):
            out.append(side)
    return out


def transverse_sets(h1: frozenset, h2: frozenset, universe: frozenset) -> bool:
    c1 = universe - h1
    c2 = universe - h2
    return bool(h1 & h2) and bool(h1 & c2) and bool(c1 & h2) and bool(c1 & c2)


def max_transverse_family(sides: list[frozenset], universe: frozenset) -> int:
    """Largest pairwise-transverse subfamily, by subset enumeration."""
    w = len(sides)
    best = 0
    for bits in range(1 << w):
        members = [sides[i] for i in range(w) if bits & (1 << i)]
        if len(members) <= best:
            continue
        if all(transverse_sets(a, b, universe)
               for a, b in combinations(members, 2)):
            best = len(members)
    return best


def center_of_mass(halfspace_sets, weights: dict) -> set:
    """Intersection of all listed halfspaces of mass > 1/2.

    ``halfspace_sets`` must enumerate every halfspace (both
    orientations); ``weights`` maps vertex -> Fraction.
    """
    universe = set()
    for h in halfspace_sets:
        universe |= h
    center = set(universe)
    half = Fraction(1, 2)
    for h in halfspace_sets:
        mass = sum((w for v, w in weights.items() if v in h), Fraction(0))
        if mass > half:
            center &= h
    return center


def eccentricity_minimizers(dist, k_set, within) -> set:
    """Vertices of ``within`` minimizing max distance to the set."""
    ecc = {v: max(dist[v][u] for u in k_set) for v in within}
    best = min(ecc.values())
    return {v for v, e in ecc.items() if e == best}
