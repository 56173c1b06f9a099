"""Wall and halfspace structure of a median graph.

Walls are the Djokovic-Winkler edge classes: edges e=xy and f=uv are
related when d(x,u) + d(y,v) != d(x,v) + d(y,u).  On a median graph the
relation is transitive and each class cuts the graph into two convex
halfspaces.  Transitivity failure is surfaced as a non-median
certificate rather than assumed.

The decomposition is computed once per graph and cached in an immutable
view; every query is a pure function, safe for concurrent readers.
"""

from __future__ import annotations

import os
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import (
    EmptySet,
    NotConvex,
    NotDisjoint,
    NotMedian,
    ThetaNotTransitive,
)
from .graph import (
    MedianGraph,
    apply_automorphism,
    as_mask,
    is_convex,
)
from .pocset import DualGraph, Pocset, dual_median_graph

WALL_GUARD_DEFAULT = 64


@dataclass(frozen=True, eq=False)
class Wall:
    """One Djokovic-Winkler class: an unordered pair of complementary sides."""
    id: int
    rep_edge: tuple[int, int]
    side0: np.ndarray   # side containing vertex 0
    side1: np.ndarray

    def __eq__(self, other):
        return isinstance(other, Wall) and self.id == other.id

    def __hash__(self):
        return hash(("Wall", self.id))


@dataclass(frozen=True, eq=False)
class Halfspace:
    """Oriented side of a wall; orientation 0 is the side containing vertex 0."""
    wall_id: int
    orientation: int
    mask: np.ndarray

    @property
    def id(self) -> int:
        return 2 * self.wall_id + self.orientation

    def complement(self) -> "Halfspace":
        comask = ~self.mask
        comask.setflags(write=False)
        return Halfspace(self.wall_id, 1 - self.orientation, comask)

    def ids(self) -> list[int]:
        return [int(v) for v in np.flatnonzero(self.mask)]

    def __eq__(self, other):
        return (isinstance(other, Halfspace)
                and self.wall_id == other.wall_id
                and self.orientation == other.orientation)

    def __hash__(self):
        return hash(("Halfspace", self.wall_id, self.orientation))

    def __repr__(self):
        return f"Halfspace(wall={self.wall_id}, side={self.orientation})"


class Wallspace:
    """Cached wall decomposition plus derived relation matrices."""

    __slots__ = ("graph", "walls", "sides", "leq", "disjoint",
                 "wall_transverse", "_side_dist")

    def __init__(self, graph: MedianGraph):
        self.graph = graph
        self.walls = _compute_walls(graph)
        w = len(self.walls)
        guard = int(os.environ.get("MEDKIT_MAX_WALLS", WALL_GUARD_DEFAULT))
        if w > guard:
            warnings.warn(
                f"{w} walls exceeds the guard of {guard} "
                "(set MEDKIT_MAX_WALLS to raise it)", stacklevel=3)
        sides = np.zeros((2 * w, graph.n), dtype=bool)
        for wall in self.walls:
            sides[2 * wall.id] = wall.side0
            sides[2 * wall.id + 1] = wall.side1
        sides.setflags(write=False)
        self.sides = sides
        s8 = sides.astype(np.uint8)
        meet = (s8 @ s8.T) > 0                       # sides intersect
        self.disjoint = ~meet
        # a <= b  iff  a n b^c is empty
        co = np.arange(2 * w) ^ 1
        self.leq = ~meet[:, co]
        tv = np.empty((w, w), dtype=bool)
        if w:
            m00 = meet[0::2, 0::2]
            m01 = meet[0::2, 1::2]
            m10 = meet[1::2, 0::2]
            m11 = meet[1::2, 1::2]
            tv = m00 & m01 & m10 & m11
            np.fill_diagonal(tv, False)
        self.wall_transverse = tv
        self._side_dist = None

    @property
    def side_dist(self) -> np.ndarray:
        """d(x, side) for every vertex x and oriented side, (2W, n)."""
        if self._side_dist is None:
            out = np.empty((self.sides.shape[0], self.graph.n), dtype=np.int32)
            for i, m in enumerate(self.sides):
                out[i] = self.graph.dist[:, m].min(axis=1)
            out.setflags(write=False)
            self._side_dist = out
        return self._side_dist

    def halfspace(self, wall_id: int, orientation: int) -> Halfspace:
        return Halfspace(wall_id, orientation, self.sides[2 * wall_id + orientation])

    def by_id(self, hid: int) -> Halfspace:
        return self.halfspace(hid // 2, hid % 2)

    def all_halfspaces(self) -> list[Halfspace]:
        return [self.by_id(h) for h in range(self.sides.shape[0])]

    def side_min_dist(self, hid1: int, hid2: int) -> int:
        """Minimum graph distance between two oriented sides."""
        m1 = self.sides[hid1]
        return int(self.side_dist[hid2][m1].min())


def _compute_walls(graph: MedianGraph) -> tuple[Wall, ...]:
    edges = graph.edges
    m = len(edges)
    if m == 0:
        return ()
    d = graph.dist
    ex = np.fromiter((e[0] for e in edges), dtype=np.int64, count=m)
    ey = np.fromiter((e[1] for e in edges), dtype=np.int64, count=m)
    theta = (d[np.ix_(ex, ex)] + d[np.ix_(ey, ey)]) \
        != (d[np.ix_(ex, ey)] + d[np.ix_(ey, ex)])
    # union-find over the relation
    parent = list(range(m))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i in range(m):
        for j in np.flatnonzero(theta[i, i + 1:]) + i + 1:
            ri, rj = find(i), find(int(j))
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)

    classes: dict[int, list[int]] = {}
    for i in range(m):
        classes.setdefault(find(i), []).append(i)
    walls = []
    for wid, root in enumerate(sorted(classes)):
        members = classes[root]
        block = theta[np.ix_(members, members)]
        np.fill_diagonal(block, True)
        if not block.all():
            raise ThetaNotTransitive(
                f"edge class of {edges[root]} is not a clique under the "
                "Djokovic-Winkler relation (graph is not median)")
        x, y = edges[root]
        side_x = d[x] < d[y]
        side_y = d[y] < d[x]
        if not (side_x ^ side_y).all():
            tie = int(np.flatnonzero(~(side_x ^ side_y))[0])
            raise NotMedian(
                f"vertex {tie} is equidistant from edge {edges[root]} "
                "(graph is not bipartite, hence not median)")
        for side in (side_x, side_y):
            if not is_convex(graph, side):
                raise NotMedian(
                    f"wall side of edge {edges[root]} is not convex")
        crossing = sorted(i for i, (u, v) in enumerate(edges)
                          if side_x[u] != side_x[v])
        if crossing != sorted(members):
            raise ThetaNotTransitive(
                f"wall of edge {edges[root]} is not cut exactly by its "
                "edge class (graph is not median)")
        side0, side1 = (side_x, side_y) if side_x[0] else (side_y, side_x)
        side0.setflags(write=False)
        side1.setflags(write=False)
        walls.append(Wall(wid, edges[root], side0, side1))
    return tuple(walls)


def wallspace(graph: MedianGraph) -> Wallspace:
    ws = graph._cache.get("wallspace")
    if ws is None:
        ws = Wallspace(graph)
        graph._cache["wallspace"] = ws
    return ws


def walls(graph: MedianGraph) -> tuple[Wall, ...]:
    return wallspace(graph).walls


def halfspaces(graph: MedianGraph) -> list[Halfspace]:
    return wallspace(graph).all_halfspaces()


def halfspaces_between(graph: MedianGraph, side_a, side_b) -> list[Halfspace]:
    """All halfspaces containing B and avoiding A (H(A, B))."""
    ws = wallspace(graph)
    amask = as_mask(graph, side_a)
    bmask = as_mask(graph, side_b)
    if not amask.any() or not bmask.any():
        raise EmptySet("H(A, B) needs nonempty A and B")
    contains_b = ~(bmask[None, :] & ~ws.sides).any(axis=1)
    avoids_a = ~(amask[None, :] & ws.sides).any(axis=1)
    return [ws.by_id(int(h)) for h in np.flatnonzero(contains_b & avoids_a)]


def transverse(h1: Halfspace, h2: Halfspace) -> bool:
    """True iff all four mutual intersections of the sides are nonempty."""
    a, b = h1.mask, h2.mask
    return bool((a & b).any() and (a & ~b).any()
                and (~a & b).any() and (~a & ~b).any())


def strongly_separated(graph: MedianGraph, h1: Halfspace, h2: Halfspace) -> bool:
    """Disjoint halfspaces with no wall transverse to both."""
    if (h1.mask & h2.mask).any():
        raise NotDisjoint("halfspaces are not disjoint")
    ws = wallspace(graph)
    t = ws.wall_transverse
    return not (t[h1.wall_id] & t[h2.wall_id]).any()


def rank(graph: MedianGraph) -> int:
    """Maximal number of pairwise transverse walls (max cube dimension)."""
    ws = wallspace(graph)
    return _max_clique(ws.wall_transverse)


def _max_clique(adj: np.ndarray) -> int:
    """Exact max clique via branch and bound with greedy colouring bounds.

    Exponential worst case; fine at desk scale (<= ~64 walls).
    """
    w = adj.shape[0]
    if w == 0:
        return 0
    neighbors = [int(sum(1 << int(j) for j in np.flatnonzero(adj[i])))
                 for i in range(w)]
    best = 0

    def color_bound(cand: int) -> int:
        colors = 0
        rest = cand
        while rest:
            colors += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~(1 << v)
                avail &= ~neighbors[v]
                rest &= ~(1 << v)
        return colors

    def expand(cand: int, size: int):
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + color_bound(cand) <= best:
            return
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= ~(1 << v)
            if size + 1 + bin(cand & neighbors[v]).count("1") <= best:
                continue
            expand(cand & neighbors[v], size + 1)

    expand((1 << w) - 1, 0)
    return best


def separate(graph: MedianGraph, set_c1, set_c2, *, validate: bool = True) -> Halfspace:
    """Halfspace h with C2 inside h and C1 inside h's complement.

    Deterministic tie-break among valid walls: minimal |h| first, then
    lowest wall id.
    """
    c1 = as_mask(graph, set_c1)
    c2 = as_mask(graph, set_c2)
    if not c1.any() or not c2.any():
        raise EmptySet("separation needs nonempty sets")
    if (c1 & c2).any():
        raise NotDisjoint("sets intersect")
    if validate:
        for m, name in ((c1, "first"), (c2, "second")):
            if not is_convex(graph, m):
                raise NotConvex(f"{name} set is not convex")
    ws = wallspace(graph)
    ok = (~(c2[None, :] & ~ws.sides).any(axis=1)
          & ~(c1[None, :] & ws.sides).any(axis=1))
    hits = np.flatnonzero(ok)
    if len(hits) == 0:
        raise NotMedian("no separating halfspace (Separation Theorem violated)")
    sizes = ws.sides[hits].sum(axis=1)
    best = hits[np.lexsort((hits, sizes))[0]]
    return ws.by_id(int(best))


# -- product decomposition ---------------------------------------------------

@dataclass(frozen=True)
class Factorization:
    """Irreducible l1-factors with the vertex coordinate map."""
    factors: tuple[MedianGraph, ...]
    wall_groups: tuple[tuple[int, ...], ...]
    coords: np.ndarray        # (n, k) vertex -> factor-vertex index


def decompose(graph: MedianGraph) -> Factorization:
    """Split walls into components of the non-transversality relation.

    Each component's restricted pocset dualizes to one irreducible
    factor; the l1-product of the factors reconstructs the graph
    (verified by :func:`verify_factorization`).
    """
    ws = wallspace(graph)
    w = len(ws.walls)
    if w == 0:
        return Factorization((graph,), ((),), np.zeros((graph.n, 1), dtype=np.int64))
    non_tv = ~ws.wall_transverse
    np.fill_diagonal(non_tv, False)
    parent = list(range(w))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i in range(w):
        for j in np.flatnonzero(non_tv[i, i + 1:]) + i + 1:
            ri, rj = find(i), find(int(j))
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    groups: dict[int, list[int]] = {}
    for i in range(w):
        groups.setdefault(find(i), []).append(i)
    wall_groups = tuple(tuple(groups[r]) for r in sorted(groups))

    factors = []
    coords = np.zeros((graph.n, len(wall_groups)), dtype=np.int64)
    for gi, group in enumerate(wall_groups):
        elems = [e for wid in group for e in (2 * wid, 2 * wid + 1)]
        sub = _restrict_pocset(ws, elems)
        dual = dual_median_graph(sub)
        factors.append(dual.graph)
        index = {uf: i for i, uf in enumerate(dual.ultrafilters)}
        local = {e: i for i, e in enumerate(elems)}
        for v in range(graph.n):
            choice = tuple(sorted(
                local[e] for e in elems if ws.sides[e, v]))
            coords[v, gi] = index[choice]
    return Factorization(tuple(factors), wall_groups, coords)


def _restrict_pocset(ws: Wallspace, elems: list[int]) -> Pocset:
    k = len(elems)
    star = np.empty(k, dtype=np.int64)
    pos = {e: i for i, e in enumerate(elems)}
    for i, e in enumerate(elems):
        star[i] = pos[e ^ 1]
    leq = ws.leq[np.ix_(elems, elems)].copy()
    np.fill_diagonal(leq, True)
    return Pocset(k, star, leq)


def irreducible_factors(graph: MedianGraph) -> list[MedianGraph]:
    return list(decompose(graph).factors)


def verify_factorization(graph: MedianGraph, fac: Factorization) -> bool:
    """Check the coordinate map is an isomorphism onto the l1-product."""
    sizes = [f.n for f in fac.factors]
    total = 1
    for s in sizes:
        total *= s
    if total != graph.n:
        return False
    seen = {tuple(c) for c in fac.coords.tolist()}
    if len(seen) != graph.n:
        return False
    rev = {tuple(c): v for v, c in enumerate(fac.coords.tolist())}
    expected_edges = set()
    for v in range(graph.n):
        cv = tuple(fac.coords[v].tolist())
        for gi, f in enumerate(fac.factors):
            for u in np.flatnonzero(f.adj[cv[gi]]):
                cu = cv[:gi] + (int(u),) + cv[gi + 1:]
                nb = rev.get(cu)
                if nb is None:
                    return False
                expected_edges.add((min(v, nb), max(v, nb)))
    return expected_edges == set(graph.edges)


# -- duality ------------------------------------------------------------------

def pocset_of(graph: MedianGraph) -> Pocset:
    """The halfspace pocset: oriented sides ordered by inclusion."""
    ws = wallspace(graph)
    w = len(ws.walls)
    star = np.arange(2 * w, dtype=np.int64) ^ 1
    leq = ws.leq.copy()
    np.fill_diagonal(leq, True)
    return Pocset(2 * w, star, leq)


def vertex_ultrafilter(graph: MedianGraph, v: int) -> tuple[int, ...]:
    """Oriented side ids containing v (the canonical dual vertex label)."""
    ws = wallspace(graph)
    return tuple(int(h) for h in np.flatnonzero(ws.sides[:, v]))


def dual_round_trip_isomorphic(graph: MedianGraph, dual: DualGraph) -> bool:
    """Verify v -> {sides containing v} is a graph isomorphism onto the dual."""
    if dual.graph.n != graph.n:
        return False
    index = {uf: i for i, uf in enumerate(dual.ultrafilters)}
    mapping = np.empty(graph.n, dtype=np.int64)
    for v in range(graph.n):
        uf = vertex_ultrafilter(graph, v)
        if uf not in index:
            return False
        mapping[v] = index[uf]
    if len(set(mapping.tolist())) != graph.n:
        return False
    return bool((dual.graph.adj[np.ix_(mapping, mapping)] == graph.adj).all())


# -- fundamental family -------------------------------------------------------

def fundamental_family(graph: MedianGraph) -> list[Halfspace]:
    """Minimal halfspaces over hulls of all balls, all centers and radii.

    Satisfies (1) every vertex pair is separated by a member and
    (2) every halfspace is contained in some member; both clauses are
    verified by the test sweeps rather than assumed.
    """
    ws = wallspace(graph)
    nh = ws.sides.shape[0]
    if nh == 0:
        return []
    strict_lt = ws.leq & ~np.eye(nh, dtype=bool)
    keep = np.zeros(nh, dtype=bool)
    for x in range(graph.n):
        for r in range(graph.diameter + 1):
            ball = graph.dist[x] <= r
            # h contains Conv(ball) iff h contains ball (h is convex)
            cand = ~(ball[None, :] & ~ws.sides).any(axis=1)
            ids = np.flatnonzero(cand)
            minimal = ids[~strict_lt[np.ix_(ids, ids)].any(axis=0)]
            keep[minimal] = True
    return [ws.by_id(int(h)) for h in np.flatnonzero(keep)]


# -- flipping ------------------------------------------------------------------

def flips(graph: MedianGraph, perm, h: Halfspace) -> bool:
    """True iff the automorphism maps h inside its own complement."""
    image = apply_automorphism(graph, perm, h.mask)
    return not bool((image & h.mask).any())
