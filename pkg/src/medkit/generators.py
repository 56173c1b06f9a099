"""Corpus generators; deterministic for fixed parameters and seed.

Every generator except ``cycle`` and ``complete_bipartite`` (negative
controls) produces a median graph.  The staircase is a wedge of three
rank-2 zigzag square strips at a common corner: the minimal family
that is irreducible at rank 2, rich in strongly separated walls, and
branchy enough to admit strongly separated facing triples (so its
median core is nonempty).
"""

from __future__ import annotations

import heapq
from fractions import Fraction

import numpy as np

from .barycenter import ProbMeasure
from .errors import InvalidSpec
from .graph import MedianGraph
from .pocset import Pocset


def path(n: int) -> MedianGraph:
    if n < 1:
        raise InvalidSpec("path needs n >= 1")
    return MedianGraph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> MedianGraph:
    """Negative control: not median for n != 4 (odd or too coarse)."""
    if n < 3:
        raise InvalidSpec("cycle needs n >= 3")
    return MedianGraph(n, [(i, (i + 1) % n) for i in range(n)])


def hypercube(dim: int) -> MedianGraph:
    if dim < 0:
        raise InvalidSpec("hypercube needs dim >= 0")
    n = 1 << dim
    edges = [(v, v | (1 << b)) for v in range(n) for b in range(dim)
             if not v & (1 << b)]
    return MedianGraph(n, edges)


def grid(m: int, n: int) -> MedianGraph:
    if m < 1 or n < 1:
        raise InvalidSpec("grid needs m, n >= 1")
    edges = []
    for i in range(m):
        for j in range(n):
            v = i * n + j
            if j + 1 < n:
                edges.append((v, v + 1))
            if i + 1 < m:
                edges.append((v, v + n))
    return MedianGraph(m * n, edges)


def prufer_tree(n: int, seed: int = 0) -> MedianGraph:
    """Random labelled tree decoded from a seeded Prufer sequence."""
    if n < 1:
        raise InvalidSpec("tree needs n >= 1")
    if n == 1:
        return MedianGraph(1, [])
    if n == 2:
        return MedianGraph(2, [(0, 1)])
    rng = np.random.default_rng(seed)
    seq = rng.integers(0, n, size=n - 2)
    degree = np.ones(n, dtype=np.int64)
    for v in seq:
        degree[v] += 1
    edges = []
    leaves = sorted(v for v in range(n) if degree[v] == 1)
    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, int(v)))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, int(v))
    u = heapq.heappop(leaves)
    w = heapq.heappop(leaves)
    edges.append((u, w))
    return MedianGraph(n, edges)


def spider(legs: int, leg_len: int) -> MedianGraph:
    """Center 0 with ``legs`` chains of ``leg_len`` vertices each."""
    if legs < 1 or leg_len < 1:
        raise InvalidSpec("spider needs legs, leg_len >= 1")
    edges = []
    vid = 1
    for _ in range(legs):
        prev = 0
        for _ in range(leg_len):
            edges.append((prev, vid))
            prev = vid
            vid += 1
    return MedianGraph(vid, edges)


def tripod() -> MedianGraph:
    return spider(3, 1)


def _zigzag_strip(steps: int):
    """Vertex coordinates and edges of a strip of ``steps`` squares.

    Squares alternate stepping right and up starting from the unit
    square at the origin; consecutive squares share an edge.
    """
    squares = [(0, 0)]
    x = y = 0
    for t in range(1, steps):
        if t % 2 == 1:
            x += 1
        else:
            y += 1
        squares.append((x, y))
    verts = set()
    edges = set()
    for (a, b) in squares:
        c00, c10, c01, c11 = (a, b), (a + 1, b), (a, b + 1), (a + 1, b + 1)
        verts.update((c00, c10, c01, c11))
        for u, v in ((c00, c10), (c00, c01), (c10, c11), (c01, c11)):
            edges.add((min(u, v), max(u, v)))
    return sorted(verts), sorted(edges)


def staircase(steps: int) -> MedianGraph:
    """Three zigzag square strips wedged at their origin corners."""
    if steps < 1:
        raise InvalidSpec("staircase needs steps >= 1")
    verts, strip_edges = _zigzag_strip(steps)
    ids = {"center": 0}
    nxt = 1
    for arm in range(3):
        for c in verts:
            if c != (0, 0):
                ids[(arm, c)] = nxt
                nxt += 1
    edges = []
    for arm in range(3):
        for u, v in strip_edges:
            ku = "center" if u == (0, 0) else (arm, u)
            kv = "center" if v == (0, 0) else (arm, v)
            edges.append((ids[ku], ids[kv]))
    return MedianGraph(nxt, edges)


def complete_bipartite(a: int, b: int) -> MedianGraph:
    """Negative control; K_{2,3} is the classical non-median graph."""
    edges = [(i, a + j) for i in range(a) for j in range(b)]
    return MedianGraph(a + b, edges)


def random_pocset(walls: int, density: float, seed: int = 0) -> Pocset:
    """Random consistent pocset on ``walls`` complement pairs.

    Each unordered wall pair independently attempts one random nesting
    relation with probability ``density``; an attempt is kept only if
    the transitive closure stays a consistent pocset.  Unrelated pairs
    dualize to transverse walls, so lower densities mean larger duals.
    """
    if walls < 0 or not 0 <= density <= 1:
        raise InvalidSpec("need walls >= 0 and density in [0, 1]")
    rng = np.random.default_rng(seed)
    n = 2 * walls
    star = np.arange(n, dtype=np.int64) ^ 1
    leq = np.eye(n, dtype=bool)
    for i in range(walls):
        for j in range(i + 1, walls):
            if rng.random() >= density:
                continue
            k = int(rng.integers(0, 4))
            a = 2 * i + (k & 1)
            b = 2 * j + (k >> 1)
            cand = leq.copy()
            cand |= np.outer(cand[:, a], cand[b, :])
            cand |= np.outer(cand[:, b ^ 1], cand[a ^ 1, :])
            idx = np.arange(n)
            if cand[idx, idx ^ 1].any():
                continue
            if (cand & cand.T & ~np.eye(n, dtype=bool)).any():
                continue
            leq = cand
    p = Pocset(n, star, leq)
    p.validate()
    return p


def random_measure(n: int, rng: np.random.Generator,
                   max_support: int = 6) -> ProbMeasure:
    """Random rational measure with bounded support, exact total 1."""
    size = int(rng.integers(1, min(max_support, n) + 1))
    verts = rng.choice(n, size=size, replace=False)
    nums = rng.integers(1, 20, size=size)
    total = int(nums.sum())
    return ProbMeasure(n, {int(v): Fraction(int(a), total)
                           for v, a in zip(verts, nums)})


# -- corpus and CLI-facing generator registry ---------------------------------

GENERATOR_PARAMS = {
    "path": ("n",),
    "cycle": ("n",),
    "hypercube": ("n",),
    "grid": ("m", "n"),
    "tree": ("n", "seed"),
    "spider": ("legs", "len"),
    "staircase": ("steps",),
    "random-pocset": ("walls", "density", "seed"),
}


def generate(name: str, params: dict, default_seed: int = 0):
    """Build a corpus object from a generator name and parameter dict."""
    try:
        if name == "path":
            return path(int(params["n"]))
        if name == "cycle":
            return cycle(int(params["n"]))
        if name == "hypercube":
            return hypercube(int(params["n"]))
        if name == "grid":
            return grid(int(params["m"]), int(params["n"]))
        if name == "tree":
            return prufer_tree(int(params["n"]),
                               int(params.get("seed", default_seed)))
        if name == "spider":
            return spider(int(params["legs"]), int(params["len"]))
        if name == "staircase":
            return staircase(int(params["steps"]))
        if name == "random-pocset":
            return random_pocset(int(params["walls"]),
                                 float(params["density"]),
                                 int(params.get("seed", default_seed)))
    except KeyError as exc:
        raise InvalidSpec(f"generator {name!r} missing parameter {exc}") from exc
    except (TypeError, ValueError) as exc:
        raise InvalidSpec(f"bad parameters for {name!r}: {exc}") from exc
    raise InvalidSpec(f"unknown generator {name!r}")


def default_corpus() -> list[tuple[str, MedianGraph]]:
    """The named graphs the verification sweeps run over."""
    return [
        ("path-7", path(7)),
        ("path-8", path(8)),
        ("tripod", tripod()),
        ("spider-3x2", spider(3, 2)),
        ("grid-3x3", grid(3, 3)),
        ("grid-3x4", grid(3, 4)),
        ("hypercube-3", hypercube(3)),
        ("hypercube-4", hypercube(4)),
        ("staircase-2", staircase(2)),
        ("staircase-4", staircase(4)),
        ("tree-25", prufer_tree(25, seed=7)),
        ("tree-33", prufer_tree(33, seed=11)),
        ("grid-6x6", grid(6, 6)),
        ("tree-60", prufer_tree(60, seed=3)),
        ("grid-10x20", grid(10, 20)),
    ]
