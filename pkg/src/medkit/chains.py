"""Strongly separated chains and the median core.

Finite graphs have an empty Roller boundary, so boundary points are
replaced by finite certificates: nested halfspace chains whose
consecutive links (h_i^c, h_{i+1}) are strongly separated with a
spacing gap, and facing triples of pairwise strongly separated
halfspaces.  The median core is the median hull of the deep-triple
medians, mirroring the boundary construction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import InvalidChain, InvalidTriple, NotConstant
from .graph import MedianGraph, gate_vector, median_hull
from .walls import Halfspace, Wallspace, wallspace


@dataclass(frozen=True)
class Chain:
    """Nested halfspaces h_1 > h_2 > ... with spacing certificates.

    ``gaps[i]`` is d(h_i^c, h_{i+1}); every consecutive pair
    (h_i^c, h_{i+1}) is strongly separated and every gap exceeds r.
    """
    halfspace_ids: tuple[int, ...]
    r: int
    gaps: tuple[int, ...]

    def __len__(self):
        return len(self.halfspace_ids)


@dataclass(frozen=True)
class SeparatedTriple:
    """Three pairwise disjoint, pairwise strongly separated halfspaces."""
    halfspace_ids: tuple[int, int, int]


def _chain_tables(ws: Wallspace):
    """Cached relation tables for chain search.

    succ_ok[h, k]: k strictly nested in h and (h^c, k) strongly
    separated.  gap[h, k]: d(h^c, k) where defined (0 elsewhere).
    """
    cache = ws.graph._cache
    tables = cache.get("chain_tables")
    if tables is not None:
        return tables
    nh = ws.sides.shape[0]
    strict = ws.leq & ~np.eye(nh, dtype=bool)
    nested = strict.T                     # nested[h, k] <=> k < h
    t8 = ws.wall_transverse.astype(np.uint8)
    common_tv = (t8 @ t8.T) > 0           # walls sharing a transverse wall
    wall_of = np.arange(nh) // 2
    ss_ok = ~common_tv[np.ix_(wall_of, wall_of)]
    succ_ok = nested & ss_ok
    gap = np.zeros((nh, nh), dtype=np.int32)
    sd = ws.side_dist
    for h in range(nh):
        comask = ws.sides[h ^ 1]
        gap[h] = sd[:, comask].min(axis=1)   # gap[h, k] = d(h^c, k)
    tables = (succ_ok, gap)
    cache["chain_tables"] = tables
    return tables


def chain_successors(graph: MedianGraph, hid: int, r: int) -> list[int]:
    """Halfspace ids that may follow ``hid`` in an r-spaced chain."""
    ws = wallspace(graph)
    succ_ok, gap = _chain_tables(ws)
    return [int(k) for k in np.flatnonzero(succ_ok[hid] & (gap[hid] > r))]


def validate_chain(graph: MedianGraph, chain: Chain) -> None:
    """Revalidate nesting, strong separation and spacing; raise InvalidChain."""
    ws = wallspace(graph)
    ids = chain.halfspace_ids
    if not ids:
        raise InvalidChain("empty chain")
    nh = ws.sides.shape[0]
    if any(not 0 <= h < nh for h in ids):
        raise InvalidChain("halfspace id out of range")
    if len(chain.gaps) != len(ids) - 1:
        raise InvalidChain("gap certificate count mismatch")
    succ_ok, gap = _chain_tables(ws)
    for i in range(len(ids) - 1):
        h, k = ids[i], ids[i + 1]
        if not succ_ok[h, k]:
            raise InvalidChain(
                f"link {i}: halfspace {k} does not nest strongly "
                f"separated inside {h}")
        if gap[h, k] != chain.gaps[i] or chain.gaps[i] <= chain.r:
            raise InvalidChain(f"link {i}: gap certificate wrong or <= r")


def find_chains(graph: MedianGraph, r: int, length: int,
                limit: int = 10_000) -> list[Chain]:
    """All r-spaced strongly separated chains of the given length.

    Depth-first over the nesting order; enumeration stops after
    ``limit`` chains (desk-scale cap).
    """
    if r < 0 or length < 1:
        raise ValueError("need r >= 0 and length >= 1")
    ws = wallspace(graph)
    nh = ws.sides.shape[0]
    succ_ok, gap = _chain_tables(ws)
    allowed = succ_ok & (gap > r)
    out: list[Chain] = []

    def descend(prefix: list[int], gaps: list[int]):
        if len(out) >= limit:
            return
        if len(prefix) == length:
            out.append(Chain(tuple(prefix), r, tuple(gaps)))
            return
        src = prefix[-1]
        for k in np.flatnonzero(allowed[src]):
            prefix.append(int(k))
            gaps.append(int(gap[src, k]))
            descend(prefix, gaps)
            prefix.pop()
            gaps.pop()
            if len(out) >= limit:
                return

    for h in range(nh):
        descend([h], [])
        if len(out) >= limit:
            break
    return out


def extend_chain(graph: MedianGraph, chain: Chain | None, r: int) -> Chain | None:
    """Append one halfspace nested inside the last link, or None if stuck.

    An empty/None chain extends to the lowest-id single halfspace.
    """
    ws = wallspace(graph)
    nh = ws.sides.shape[0]
    if chain is None or not chain.halfspace_ids:
        if nh == 0:
            return None
        return Chain((0,), r, ())
    validate_chain(graph, chain)
    succ = chain_successors(graph, chain.halfspace_ids[-1], r)
    if not succ:
        return None
    _, gap = _chain_tables(ws)
    k = succ[0]
    return Chain(chain.halfspace_ids + (k,), r,
                 chain.gaps + (int(gap[chain.halfspace_ids[-1], k]),))


# -- facing triples and deep medians ------------------------------------------

def is_separated_triple(graph: MedianGraph, ids) -> bool:
    ws = wallspace(graph)
    t8 = ws.wall_transverse.astype(np.uint8)
    common_tv = (t8 @ t8.T) > 0
    for i in range(3):
        for j in range(i + 1, 3):
            a, b = ids[i], ids[j]
            if not ws.disjoint[a, b]:
                return False
            if common_tv[a // 2, b // 2]:
                return False
    return True


def separated_triples(graph: MedianGraph) -> list[SeparatedTriple]:
    """All unordered triples of pairwise disjoint, strongly separated sides."""
    ws = wallspace(graph)
    nh = ws.sides.shape[0]
    t8 = ws.wall_transverse.astype(np.uint8)
    common_tv = (t8 @ t8.T) > 0
    wall_of = np.arange(nh) // 2
    good = ws.disjoint & ~common_tv[np.ix_(wall_of, wall_of)]
    out = []
    for i in range(nh):
        row_i = good[i]
        for j in range(i + 1, nh):
            if not row_i[j]:
                continue
            ks = np.flatnonzero(row_i[j + 1:] & good[j, j + 1:]) + j + 1
            out.extend(SeparatedTriple((i, j, int(k))) for k in ks)
    return out


def _product_constant(graph: MedianGraph, a_ids, b_ids, c_ids) -> int:
    """Median over the full product; NotConstant if it varies."""
    xs, ys, zs = np.meshgrid(a_ids, b_ids, c_ids, indexing="ij")
    meds = kernels.batch_medians(
        graph.dist, xs.ravel(), ys.ravel(), zs.ravel())
    first = int(meds[0])
    if (meds != first).any():
        raise NotConstant("deep-triple median varies across representatives")
    return first


def deep_triple_median(graph: MedianGraph, triple: SeparatedTriple,
                       *, full_cutoff: int = 10 ** 6,
                       sample_count: int = 4096, seed: int = 0) -> int:
    """The single vertex m(y1, y2, y3) over all choices y_i in h_i.

    Verifies constancy exhaustively when the choice product is within
    ``full_cutoff``; above it, reduces each side to its gate image in
    the complementary halfspace (which determines the median) and
    cross-checks seeded random samples.  A NotConstant outcome means a
    correctness bug or an invalid certificate.
    """
    ids = triple.halfspace_ids
    if len(ids) != 3 or len(set(i // 2 for i in ids)) != 3:
        raise InvalidTriple("need three halfspaces on distinct walls")
    if not is_separated_triple(graph, ids):
        raise InvalidTriple("triple is not pairwise strongly separated")
    ws = wallspace(graph)
    members = [np.flatnonzero(ws.sides[h]) for h in ids]
    total = members[0].size * members[1].size * members[2].size
    if total <= full_cutoff:
        return _product_constant(graph, *members)
    # gate images of each side in its complement are enough to pin the
    # median; verify constancy there, then sample the raw product.
    images = []
    for h, mem in zip(ids, members):
        gates = gate_vector(graph, ws.sides[h ^ 1], validate=False)
        images.append(np.unique(gates[mem]))
    m0 = _product_constant(graph, *images)
    rng = np.random.default_rng(seed)
    picks = [mem[rng.integers(0, mem.size, size=sample_count)]
             for mem in members]
    meds = kernels.batch_medians(graph.dist, picks[0], picks[1], picks[2])
    if (meds != m0).any():
        raise NotConstant("sampled deep-triple median disagrees with gates")
    return m0


@dataclass(frozen=True)
class CoreResult:
    core: np.ndarray                  # median hull of deep-triple medians
    has_regular_directions: bool      # False => no separated triple exists
    generators: np.ndarray            # the deep-triple medians themselves


def median_core(graph: MedianGraph, **deep_kwargs) -> CoreResult:
    """Median hull of all deep-triple medians; empty when none exist."""
    triples = separated_triples(graph)
    y0 = np.zeros(graph.n, dtype=bool)
    if not triples:
        return CoreResult(y0, False, y0.copy())
    for t in triples:
        y0[deep_triple_median(graph, t, **deep_kwargs)] = True
    return CoreResult(median_hull(graph, y0), True, y0)


# -- regular direction report --------------------------------------------------

@dataclass(frozen=True)
class RegularDirectionReport:
    r: int
    base_vertex: int
    levels: tuple[tuple[int, ...], ...]   # levels[p-1] = terminal ids at depth p
    monotone: bool


def regular_direction_report(graph: MedianGraph, r: int,
                             base_vertex: int = 0) -> RegularDirectionReport:
    """Terminal halfspaces of r-spaced chains of each length from a base.

    Level 1 holds every halfspace avoiding the base vertex; level p+1
    holds halfspaces extending some level-p chain.  Terminal sets nest
    level over level (checked, not assumed).
    """
    ws = wallspace(graph)
    nh = ws.sides.shape[0]
    succ_ok, gap = _chain_tables(ws)
    allowed = succ_ok & (gap > r)
    current = ~ws.sides[:, base_vertex]
    levels = []
    monotone = True
    leq = ws.leq
    while current.any():
        levels.append(tuple(int(h) for h in np.flatnonzero(current)))
        nxt = (allowed & current[:, None]).any(axis=0)
        if nxt.any():
            # every new terminal must nest inside an old one
            inside = leq[np.ix_(np.flatnonzero(nxt), np.flatnonzero(current))]
            if not inside.any(axis=1).all():
                monotone = False
        current = nxt
    return RegularDirectionReport(r, base_vertex, tuple(levels), monotone)
