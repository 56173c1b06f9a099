"""Abstract pocsets and dualization to median graphs.

A pocset is a finite set of oriented elements with a fixed-point-free
complement involution * and a containment partial order satisfying
h <= k  =>  k* <= h*.  Consistent total orientations (ultrafilters)
are the vertices of a median graph; two orientations are adjacent when
they differ in exactly one complement pair.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InconsistentPocset, MedkitError
from .graph import MedianGraph


@dataclass(frozen=True, eq=False)
class Pocset:
    """Ground set 0..size-1 with involution ``star`` and order ``leq``.

    ``leq`` is the full reflexive-transitive relation matrix
    (leq[a, b] means a <= b).  ``labels`` optionally keeps the original
    element names from file input.
    """

    size: int
    star: np.ndarray
    leq: np.ndarray
    labels: tuple = field(default=None)

    def validate(self) -> None:
        n = self.size
        star, leq = self.star, self.leq
        if star.shape != (n,) or leq.shape != (n, n):
            raise InconsistentPocset("shape mismatch")
        if any(star[star[a]] != a or star[a] == a for a in range(n)):
            raise InconsistentPocset("* is not a fixed-point-free involution")
        if not leq.diagonal().all():
            raise InconsistentPocset("order is not reflexive")
        if ((leq @ leq) & ~leq).any():
            raise InconsistentPocset("order is not transitive")
        if (leq & leq.T & ~np.eye(n, dtype=bool)).any():
            raise InconsistentPocset("order is not antisymmetric")
        # a <= b must force b* <= a* (antisymmetry already rules out
        # h <= h* <= h, since * is fixed-point-free)
        if (leq != leq[np.ix_(star, star)].T).any():
            raise InconsistentPocset("order does not reverse under *")

    def pairs(self) -> list[tuple[int, int]]:
        """Complement pairs as (min, max) element indices."""
        return [(a, int(self.star[a])) for a in range(self.size)
                if a < self.star[a]]


def pocset_from_relations(n_elements: int, star_pairs, leq_pairs,
                          labels=None) -> Pocset:
    """Build a pocset from generator pairs, closing leq transitively."""
    star = np.full(n_elements, -1, dtype=np.int64)
    for a, b in star_pairs:
        star[a], star[b] = b, a
    if (star < 0).any():
        raise InconsistentPocset("complement involution is not total")
    leq = np.eye(n_elements, dtype=bool)
    for a, b in leq_pairs:
        leq[a, b] = True
        leq[star[b], star[a]] = True
    # Warshall closure
    for k in range(n_elements):
        leq |= np.outer(leq[:, k], leq[k, :])
    p = Pocset(n_elements, star, leq, labels=tuple(labels) if labels else None)
    p.validate()
    return p


@dataclass(frozen=True)
class DualGraph:
    """Dual median graph together with its ultrafilter vertex labels."""
    graph: MedianGraph
    ultrafilters: tuple[tuple[int, ...], ...]


def dual_median_graph(pocset: Pocset, max_vertices: int = 200_000) -> DualGraph:
    """Enumerate all ultrafilters of a pocset and build the dual graph.

    An orientation picks one element of each complement pair; it is an
    ultrafilter iff no two picks h, k satisfy h <= k*.  Enumeration is
    backtracking over pairs with forward pruning; fine for desk-scale
    pocsets (tens of walls).
    """
    pocset.validate()
    pairs = pocset.pairs()
    w = len(pairs)
    leq, star = pocset.leq, pocset.star
    # incompatible[h, k]: h and k cannot lie in a common ultrafilter
    inc = leq[:, star].copy()    # inc[h, k] = (h <= k*)
    ultrafilters: list[tuple[int, ...]] = []
    if w == 0:
        g = MedianGraph(1, [])
        return DualGraph(g, ((),))

    # alive[d][e]: element e of pair d still selectable
    alive = np.ones((w, 2), dtype=bool)
    options = np.array(pairs, dtype=np.int64)
    for d in range(w):
        for s in range(2):
            e = options[d, s]
            if inc[e, e]:          # h <= h*: h can never be chosen
                alive[d, s] = False
        if not alive[d].any():
            raise InconsistentPocset(f"pair {d} has no selectable element")

    chosen = np.empty(w, dtype=np.int64)

    def descend(d: int, alive_now: np.ndarray):
        if d == w:
            ultrafilters.append(tuple(int(e) for e in chosen))
            if len(ultrafilters) > max_vertices:
                raise MedkitError("dual graph exceeds max_vertices guard")
            return
        for s in range(2):
            if not alive_now[d, s]:
                continue
            e = options[d, s]
            nxt = alive_now.copy()
            ok = True
            for d2 in range(d + 1, w):
                for s2 in range(2):
                    if nxt[d2, s2] and (inc[options[d2, s2], e]
                                        or inc[e, options[d2, s2]]):
                        nxt[d2, s2] = False
                if not nxt[d2].any():
                    ok = False
                    break
            if ok:
                chosen[d] = e
                descend(d + 1, nxt)

    descend(0, alive)
    if not ultrafilters:
        raise InconsistentPocset("pocset admits no ultrafilter")
    ultrafilters.sort()
    index = {uf: i for i, uf in enumerate(ultrafilters)}
    edges = []
    pair_of = {}
    for d, (a, b) in enumerate(pairs):
        pair_of[a], pair_of[b] = (d, b), (d, a)
    for i, uf in enumerate(ultrafilters):
        for d in range(w):
            other = pair_of[uf[d]][1]
            flipped = uf[:d] + (other,) + uf[d + 1:]
            j = index.get(flipped)
            if j is not None and j > i:
                edges.append((i, j))
    g = MedianGraph(len(ultrafilters), edges)
    return DualGraph(g, tuple(ultrafilters))
