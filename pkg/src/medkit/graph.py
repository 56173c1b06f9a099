"""Finite median graphs: medians, intervals, convexity, gates, hulls.

A median graph is a connected simple graph in which every vertex triple
(x, y, z) has a unique vertex lying on pairwise geodesics between all
three, the median m(x, y, z).  These are exactly the 1-skeleta of
CAT(0) cube complexes under the combinatorial metric.

Every operation here is a pure function of immutable inputs; graphs are
safe to share across threads or worker processes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import kernels
from .errors import (
    DisconnectedGraph,
    EmptySet,
    NotAutomorphism,
    NotConvex,
    NotMedian,
)


class MedianGraph:
    """Connected simple graph with cached all-pairs distances.

    Vertices are dense ids 0..n-1.  The distance matrix uses unit edge
    lengths (graph metric).  Construction validates connectivity and
    simplicity; the median axiom itself is checked by
    :func:`is_median_graph`.
    """

    __slots__ = ("n", "edges", "adj", "dist", "_cache")

    def __init__(self, n: int, edges):
        if n < 1:
            raise ValueError("need at least one vertex")
        norm = []
        seen = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            norm.append(key)
        norm.sort()
        self.n = n
        self.edges = tuple(norm)
        adj = np.zeros((n, n), dtype=bool)
        for u, v in norm:
            adj[u, v] = adj[v, u] = True
        adj.setflags(write=False)
        self.adj = adj
        dist = kernels.all_pairs_distances(adj)
        if (dist < 0).any():
            raise DisconnectedGraph("graph is not connected")
        dist.setflags(write=False)
        self.dist = dist
        self._cache = {}

    def distance(self, x: int, y: int) -> int:
        return int(self.dist[x, y])

    def interval(self, a: int, b: int) -> np.ndarray:
        """Mask of {c : d(a,b) = d(a,c) + d(c,b)}."""
        return (self.dist[a] + self.dist[b]) == self.dist[a, b]

    @property
    def diameter(self) -> int:
        return int(self.dist.max())

    def __eq__(self, other):
        return (isinstance(other, MedianGraph)
                and self.n == other.n and self.edges == other.edges)

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"MedianGraph(n={self.n}, edges={len(self.edges)})"


def as_mask(graph: MedianGraph, vertices) -> np.ndarray:
    """Coerce an iterable of vertex ids (or a bool mask) to a bool mask."""
    if isinstance(vertices, np.ndarray) and vertices.dtype == bool:
        if vertices.shape != (graph.n,):
            raise ValueError("mask length does not match vertex count")
        return vertices.copy()
    mask = np.zeros(graph.n, dtype=bool)
    for v in vertices:
        v = int(v)
        if not 0 <= v < graph.n:
            raise ValueError(f"vertex {v} out of range")
        mask[v] = True
    return mask


def mask_ids(mask: np.ndarray) -> list[int]:
    return [int(v) for v in np.flatnonzero(mask)]


def all_pairs_distances(graph: MedianGraph) -> np.ndarray:
    """All-pairs graph distances (delegates to the cached matrix)."""
    return graph.dist


def interval(graph: MedianGraph, a: int, b: int) -> np.ndarray:
    return graph.interval(a, b)


def median(graph: MedianGraph, x: int, y: int, z: int) -> int:
    """The unique vertex of [x,y] n [y,z] n [x,z].

    Raises NotMedian when the intersection is not a single vertex,
    which certifies that the graph is not median.
    """
    common = graph.interval(x, y) & graph.interval(y, z) & graph.interval(x, z)
    hits = np.flatnonzero(common)
    if len(hits) != 1:
        raise NotMedian(
            f"triple ({x},{y},{z}) has {len(hits)} median candidates")
    return int(hits[0])


@dataclass(frozen=True)
class MedianVerdict:
    ok: bool
    witness: tuple[int, int, int] | None

    def __bool__(self):
        return self.ok


def is_median_graph(graph: MedianGraph) -> MedianVerdict:
    """Full check of the unique-median axiom over all vertex triples."""
    res = kernels.median_triple_check(graph.dist)
    if res[0] == 1:
        return MedianVerdict(True, None)
    return MedianVerdict(False, (int(res[1]), int(res[2]), int(res[3])))


def is_convex(graph: MedianGraph, vertices) -> bool:
    """True iff every interval between members stays inside the set."""
    mask = as_mask(graph, vertices)
    idx = np.flatnonzero(mask)
    if len(idx) <= 1:
        return True
    sub = graph.dist[idx]
    between = (sub[:, None, :] + sub[None, :, :]) \
        == graph.dist[np.ix_(idx, idx)][:, :, None]
    return not (between & ~mask[None, None, :]).any()


def convex_hull(graph: MedianGraph, vertices) -> np.ndarray:
    """Least convex superset, by iterating interval closure to a fixed point."""
    mask = as_mask(graph, vertices)
    if not mask.any():
        raise EmptySet("hull of an empty set")
    return kernels.hull_closure(graph.dist, mask)


def median_hull(graph: MedianGraph, vertices) -> np.ndarray:
    """Smallest superset closed under the median operation."""
    mask = as_mask(graph, vertices)
    if not mask.any():
        raise EmptySet("median hull of an empty set")
    while True:
        ids = np.flatnonzero(mask)
        if len(ids) >= 3:
            tri = np.array(list(combinations(ids, 3)), dtype=np.int64)
            meds = kernels.batch_medians(graph.dist, tri[:, 0], tri[:, 1], tri[:, 2])
            new = mask.copy()
            new[meds] = True
            if (new == mask).all():
                return mask
            mask = new
        else:
            return mask


def gate(graph: MedianGraph, convex_set, x: int, *, validate: bool = True) -> int:
    """Nearest-point projection of x onto a nonempty convex set.

    The gate is the unique p in C with p in [x, c] for every c in C;
    for convex sets in a median graph it coincides with the distance
    minimiser.
    """
    mask = as_mask(graph, convex_set)
    idx = np.flatnonzero(mask)
    if len(idx) == 0:
        raise EmptySet("gate onto an empty set")
    if validate and not is_convex(graph, mask):
        raise NotConvex("gate target is not convex")
    return int(idx[graph.dist[x, idx].argmin()])


def gate_vector(graph: MedianGraph, convex_set, *, validate: bool = True) -> np.ndarray:
    """Gates of every vertex onto a convex set, as an int vector."""
    mask = as_mask(graph, convex_set)
    idx = np.flatnonzero(mask)
    if len(idx) == 0:
        raise EmptySet("gate onto an empty set")
    if validate and not is_convex(graph, mask):
        raise NotConvex("gate target is not convex")
    return idx[graph.dist[:, idx].argmin(axis=1)]


@dataclass(frozen=True)
class GateImage:
    image: np.ndarray          # mask of {gate(C, x) : x in C'}
    lemma_applies: bool        # C n C' was nonempty


def gate_image(graph: MedianGraph, convex_set, other_convex,
               *, validate: bool = True) -> GateImage:
    """Pointwise gate image of one convex set in another.

    When the sets intersect, the image equals the intersection; a
    False ``lemma_applies`` flags that the hypothesis failed (the image
    is still returned).
    """
    cmask = as_mask(graph, convex_set)
    dmask = as_mask(graph, other_convex)
    if validate:
        for m, name in ((cmask, "first"), (dmask, "second")):
            if not is_convex(graph, m):
                raise NotConvex(f"{name} set is not convex")
    gates = gate_vector(graph, cmask, validate=False)
    image = np.zeros(graph.n, dtype=bool)
    image[gates[dmask]] = True
    return GateImage(image, bool((cmask & dmask).any()))


def helly_witness(graph: MedianGraph, convex_sets, *, validate: bool = True):
    """Common vertex of pairwise-intersecting convex sets, or a bad pair.

    Returns the lexicographically least vertex of the total
    intersection when every pair meets (guaranteed nonempty by the
    Helly property of median graphs); otherwise the first
    non-intersecting index pair (i, j).
    """
    masks = [as_mask(graph, s) for s in convex_sets]
    if not masks:
        raise EmptySet("no sets given")
    for m in masks:
        if not m.any():
            raise EmptySet("empty convex set")
        if validate and not is_convex(graph, m):
            raise NotConvex("input set is not convex")
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            if not (masks[i] & masks[j]).any():
                return (i, j)
    total = np.logical_and.reduce(masks)
    if not total.any():
        raise NotMedian("pairwise-intersecting convex sets with empty "
                        "total intersection (Helly violated)")
    return int(np.flatnonzero(total)[0])


# -- automorphisms -----------------------------------------------------------

def verify_automorphism(graph: MedianGraph, perm) -> bool:
    """True iff perm is a vertex permutation preserving adjacency."""
    p = np.asarray(perm, dtype=np.int64)
    if p.shape != (graph.n,) or sorted(p.tolist()) != list(range(graph.n)):
        return False
    return bool((graph.adj[np.ix_(p, p)] == graph.adj).all())


def require_automorphism(graph: MedianGraph, perm) -> np.ndarray:
    p = np.asarray(perm, dtype=np.int64)
    if not verify_automorphism(graph, p):
        raise NotAutomorphism("permutation does not preserve adjacency")
    return p


def apply_automorphism(graph: MedianGraph, perm, vertices) -> np.ndarray:
    """Image mask {g(v) : v in S} under a verified automorphism."""
    p = require_automorphism(graph, perm)
    mask = as_mask(graph, vertices)
    image = np.zeros(graph.n, dtype=bool)
    image[p[mask]] = True
    return image


def automorphism_group(graph: MedianGraph, node_limit: int = 2_000_000) -> list[tuple[int, ...]]:
    """All graph automorphisms, by backtracking with distance-profile pruning.

    Intended for desk-scale graphs (the corpus); the search aborts with
    RuntimeError if it exceeds ``node_limit`` internal nodes.
    """
    n = graph.n
    dist = graph.dist
    profile = [tuple(sorted(np.bincount(dist[v]).tolist())) for v in range(n)]
    candidates = [
        np.array([u for u in range(n) if profile[u] == profile[v]], dtype=np.int64)
        for v in range(n)
    ]
    # assign most-constrained vertices first
    order = sorted(range(n), key=lambda v: len(candidates[v]))
    img = np.full(n, -1, dtype=np.int64)
    used = np.zeros(n, dtype=bool)
    found: list[tuple[int, ...]] = []
    nodes = 0

    def descend(k: int):
        nonlocal nodes
        nodes += 1
        if nodes > node_limit:
            raise RuntimeError("automorphism search exceeded node limit")
        if k == n:
            found.append(tuple(int(x) for x in img))
            return
        v = order[k]
        assigned = order[:k]
        for u in candidates[v]:
            if used[u]:
                continue
            ok = True
            for w in assigned:
                if dist[u, img[w]] != dist[v, w]:
                    ok = False
                    break
            if ok:
                img[v] = u
                used[u] = True
                descend(k + 1)
                used[u] = False
                img[v] = -1

    descend(0)
    # distance-preserving == adjacency-preserving here, but keep the check
    return [p for p in found if verify_automorphism(graph, p)]
