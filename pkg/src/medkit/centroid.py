"""Depth-based centroid of bounded vertex sets.

The depth of a halfspace h in a set K is the largest distance from K
to the complementary side.  The centroid intersects the strictly
deeper side of every wall with the convex hull of K; tied walls
contribute neither side, the discrete stand-in for boundary points of
a connected space lying on the wall itself.
"""

from __future__ import annotations

import numpy as np

from .errors import EmptySet
from .graph import MedianGraph, as_mask, convex_hull
from .walls import Halfspace, wallspace


def depth(graph: MedianGraph, k_set, h: Halfspace) -> int:
    """max over x in K of d(x, h^c); zero iff K avoids h."""
    mask = as_mask(graph, k_set)
    if not mask.any():
        raise EmptySet("depth of an empty set")
    ws = wallspace(graph)
    return int(ws.side_dist[h.id ^ 1][mask].max())


def depth_table(graph: MedianGraph, k_set) -> np.ndarray:
    """depths[s] = depth of oriented side s in K, for all 2W sides."""
    mask = as_mask(graph, k_set)
    if not mask.any():
        raise EmptySet("depth of an empty set")
    ws = wallspace(graph)
    nh = ws.sides.shape[0]
    if nh == 0:
        return np.zeros(0, dtype=np.int64)
    co = np.arange(nh) ^ 1
    return ws.side_dist[co][:, mask].max(axis=1).astype(np.int64)


def majority_depth_halfspaces(graph: MedianGraph, k_set,
                              strict: bool = True) -> list[Halfspace]:
    """Sides at least (or strictly) as deep as their complements.

    With strict=False ties contribute both orientations.
    """
    ws = wallspace(graph)
    depths = depth_table(graph, k_set)
    out = []
    for hid in range(len(depths)):
        a, b = depths[hid], depths[hid ^ 1]
        if a > b or (not strict and a == b):
            out.append(ws.by_id(hid))
    return out


def centroid(graph: MedianGraph, k_set) -> np.ndarray:
    """Hull of K intersected with every strictly deeper halfspace.

    Strict sides pairwise intersect and each meets the hull, so the
    Helly property keeps the result nonempty; it is equivariant under
    automorphisms.
    """
    mask = as_mask(graph, k_set)
    if not mask.any():
        raise EmptySet("centroid of an empty set")
    ws = wallspace(graph)
    out = convex_hull(graph, mask)
    depths = depth_table(graph, mask)
    for hid in range(len(depths)):
        if depths[hid] > depths[hid ^ 1]:
            out &= ws.sides[hid]
    if not out.any():
        raise AssertionError("empty centroid (Helly violated)")
    return out
