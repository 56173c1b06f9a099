"""Verification sweeps over the corpus.

Each suite drives one batch of properties (the acceptance criteria
plus the per-module invariants) over the default corpus, aggregating
counterexamples instead of stopping at the first.  The CLI ``sweep``
command and the acceptance test module both call these functions; the
brute-force oracles come from :mod:`medkit.oracles` and stay
independent of the fast paths they check.
"""

from __future__ import annotations

import time
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import numpy as np

from . import oracles
from .barycenter import (
    ProbMeasure,
    balanced_transversality_check,
    center_of_mass,
    ev,
    psi,
    pushforward,
    singleton_criterion,
)
from .centroid import centroid, depth_table
from .chains import (
    deep_triple_median,
    find_chains,
    median_core,
    regular_direction_report,
    separated_triples,
    validate_chain,
)
from .errors import MedkitError, NotConstant
from .generators import (
    complete_bipartite,
    cycle,
    default_corpus,
    grid,
    hypercube,
    path,
    prufer_tree,
    random_measure,
    random_pocset,
    spider,
    staircase,
    tripod,
)
from .graph import (
    MedianGraph,
    apply_automorphism,
    as_mask,
    automorphism_group,
    convex_hull,
    gate_vector,
    gate_image,
    helly_witness,
    is_convex,
    is_median_graph,
    median,
    median_hull,
)
from . import kernels
from .pocset import dual_median_graph
from .walls import (
    dual_round_trip_isomorphic,
    fundamental_family,
    halfspaces_between,
    pocset_of,
    rank,
    separate,
    strongly_separated,
    wallspace,
)


@dataclass
class SweepResult:
    suite: str
    checks: int = 0
    failures: list = field(default_factory=list)
    skipped: list = field(default_factory=list)
    elapsed_s: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, passed: bool, message: str):
        self.checks += 1
        if not passed:
            self.failures.append(message)

    def summary(self) -> str:
        state = "pass" if self.ok else "FAIL"
        line = (f"[{state}] {self.suite}: {self.checks} checks, "
                f"{len(self.failures)} failures, {self.elapsed_s:.1f}s")
        if self.skipped:
            line += f", {len(self.skipped)} skipped"
        return line


def _timed(fn):
    def wrapper(*args, **kwargs) -> SweepResult:
        t0 = time.perf_counter()
        res = fn(*args, **kwargs)
        res.elapsed_s = time.perf_counter() - t0
        return res
    return wrapper


def _corpus(corpus, max_vertices=None, max_walls=None):
    items = list(corpus) if corpus is not None else default_corpus()
    if max_vertices is not None:
        items = [(name, g) for name, g in items if g.n <= max_vertices]
    if max_walls is not None:
        kept = []
        for name, g in items:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                if len(wallspace(g).walls) <= max_walls:
                    kept.append((name, g))
        items = kept
    return items


def _random_convex(graph, ws, rng, anchor=None, max_seeds=3):
    """Random convex set as an intersection of halfspaces around seeds."""
    k = int(rng.integers(1, max_seeds + 1))
    seeds = rng.choice(graph.n, size=min(k, graph.n), replace=False).tolist()
    if anchor is not None:
        seeds.append(int(anchor))
    cand = ws.sides[:, seeds].all(axis=1)
    if cand.any():
        return ws.sides[cand].all(axis=0)
    return np.ones(graph.n, dtype=bool)


# -- criterion 1: median validator --------------------------------------------

@_timed
def sweep_validator(corpus=None, time_budget_s: float = 10.0) -> SweepResult:
    res = SweepResult("validator")
    for name, g in _corpus(corpus, max_vertices=200):
        t0 = time.perf_counter()
        verdict = is_median_graph(g)
        dt = time.perf_counter() - t0
        res.check(verdict.ok, f"{name}: rejected with witness {verdict.witness}")
        res.check(dt < time_budget_s, f"{name}: validation took {dt:.1f}s")
    for name, g in (("cycle-5", cycle(5)), ("cycle-6", cycle(6)),
                    ("k23", complete_bipartite(2, 3))):
        verdict = is_median_graph(g)
        res.check(not verdict.ok, f"{name}: negative control accepted")
        res.check(verdict.witness is not None,
                  f"{name}: rejection carries no witness")
    return res


# -- criterion 2: Crofton count ------------------------------------------------

@_timed
def sweep_crofton(corpus=None) -> SweepResult:
    res = SweepResult("crofton")
    for name, g in _corpus(corpus, max_vertices=200):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            ws = wallspace(g)
        s = ws.sides[0::2].astype(np.int64)   # one orientation per wall
        if len(s):
            crossing = s.T @ (1 - s) + (1 - s).T @ s
        else:
            crossing = np.zeros((g.n, g.n), dtype=np.int64)
        res.check(bool((crossing == g.dist).all()),
                  f"{name}: |H(x,y)| != d(x,y) somewhere")
    return res


# -- criterion 3: separation + Helly -------------------------------------------

@_timed
def sweep_separation_helly(corpus=None, instances: int = 10_000,
                           seed: int = 2024) -> SweepResult:
    res = SweepResult("separation-helly")
    for name, g in _corpus(corpus, max_vertices=200):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            ws = wallspace(g)
        rng = np.random.default_rng(seed)
        done = fails = 0
        attempts = 0
        while done < instances and attempts < 50 * instances:
            attempts += 1
            c1 = _random_convex(g, ws, rng)
            c2 = _random_convex(g, ws, rng)
            if (c1 & c2).any():
                continue
            h = separate(g, c1, c2, validate=False)
            good = (not (c2 & ~h.mask).any()) and (not (c1 & h.mask).any())
            if not good:
                fails += 1
                if fails <= 3:
                    res.failures.append(f"{name}: separate returned a "
                                        f"non-separating halfspace")
            # Helly instance anchored at a common vertex
            v = int(rng.integers(0, g.n))
            sets = [_random_convex(g, ws, rng, anchor=v)
                    for _ in range(int(rng.integers(2, 5)))]
            w = helly_witness(g, sets, validate=False)
            if not (isinstance(w, int) and all(m[w] for m in sets)):
                fails += 1
                res.failures.append(f"{name}: helly witness invalid")
            if done % 997 == 0:
                # spot-check the generated instances really are convex
                if not (is_convex(g, c1) and is_convex(g, c2)):
                    res.failures.append(f"{name}: generator made a "
                                        f"non-convex instance")
            done += 1
            res.checks += 2
        if done < instances:
            res.skipped.append(f"{name}: only {done} disjoint instances found")
    return res


# -- criterion 4: gate laws ------------------------------------------------------

@_timed
def sweep_gates(corpus=None, convex_samples: int = 25,
                image_pairs: int = 1000, seed: int = 77) -> SweepResult:
    res = SweepResult("gates")
    for name, g in _corpus(corpus, max_vertices=100):
        ws = wallspace(g)
        rng = np.random.default_rng(seed)
        # 1-Lipschitz over exhaustive vertex pairs, sampled convex targets
        for _ in range(convex_samples):
            c = _random_convex(g, ws, rng)
            gv = gate_vector(g, c, validate=False)
            lip = g.dist[np.ix_(gv, gv)] <= g.dist
            res.check(bool(lip.all()), f"{name}: gate is not 1-Lipschitz")
        # gate onto [a,b] equals median(a, b, .), exhaustive pairs
        bad = 0
        for a in range(g.n):
            for b in range(g.n):
                idx = np.flatnonzero(g.interval(a, b))
                gates = idx[g.dist[:, idx].argmin(axis=1)]
                xs = np.arange(g.n, dtype=np.int64)
                meds = kernels.batch_medians(
                    g.dist, np.full(g.n, a, dtype=np.int64),
                    np.full(g.n, b, dtype=np.int64), xs)
                if (gates != meds).any():
                    bad += 1
        res.check(bad == 0,
                  f"{name}: gate-onto-interval != median on {bad} pairs")
        # gate image equals intersection on intersecting convex pairs
        done = 0
        while done < image_pairs:
            c1 = _random_convex(g, ws, rng)
            v = int(np.flatnonzero(c1)[rng.integers(0, int(c1.sum()))])
            c2 = _random_convex(g, ws, rng, anchor=v)
            gi = gate_image(g, c1, c2, validate=False)
            if not gi.lemma_applies:
                continue
            if not (gi.image == (c1 & c2)).all():
                res.failures.append(f"{name}: gate image != intersection")
            done += 1
            res.checks += 1
    return res


# -- criterion 5: duality round trip ---------------------------------------------

@_timed
def sweep_duality(corpus=None, pocset_seeds: int = 100) -> SweepResult:
    res = SweepResult("duality")
    for name, g in _corpus(corpus, max_walls=24):
        dual = dual_median_graph(pocset_of(g))
        res.check(dual_round_trip_isomorphic(g, dual),
                  f"{name}: dual round trip is not an isomorphism")
    for s in range(pocset_seeds):
        walls = 5 + (s * 7) % 16          # 5..20
        density = 0.45 + 0.05 * (s % 8)   # 0.45..0.80
        p = random_pocset(walls, density, seed=s)
        try:
            dual = dual_median_graph(p)
        except MedkitError as exc:
            res.check(False, f"pocset seed {s}: dualization failed: {exc}")
            continue
        verdict = is_median_graph(dual.graph)
        res.check(verdict.ok,
                  f"pocset seed {s}: dual fails the median axiom")
    return res


# -- criterion 6: rank and factors -----------------------------------------------

def _is_path_graph(g: MedianGraph) -> bool:
    if g.n == 1:
        return len(g.edges) == 0
    degs = sorted(int(d) for d in g.adj.sum(axis=1))
    return (len(g.edges) == g.n - 1 and degs[:2] == [1, 1]
            and all(d == 2 for d in degs[2:]))


@_timed
def sweep_rank_factors(max_cube_dim: int = 6, max_grid: int = 8) -> SweepResult:
    from .walls import decompose, verify_factorization
    res = SweepResult("rank-factors")
    for d in range(1, max_cube_dim + 1):
        res.check(rank(hypercube(d)) == d, f"rank(Q{d}) != {d}")
    for name, g in (("tree-25", prufer_tree(25, 7)),
                    ("tree-33", prufer_tree(33, 11)),
                    ("path-9", path(9)), ("tripod", tripod()),
                    ("spider-3x2", spider(3, 2))):
        res.check(rank(g) == 1, f"rank({name}) != 1")
    for m in range(2, max_grid + 1):
        for n in range(2, max_grid + 1):
            g = grid(m, n)
            dec = decompose(g)
            lens = sorted(f.n for f in dec.factors)
            res.check(lens == sorted((m, n)),
                      f"grid-{m}x{n}: factor sizes {lens}")
            res.check(all(_is_path_graph(f) for f in dec.factors),
                      f"grid-{m}x{n}: factors are not paths")
            res.check(verify_factorization(g, dec),
                      f"grid-{m}x{n}: product reconstruction failed")
            for f in dec.factors:
                res.check(len(decompose(f).factors) == 1,
                          f"grid-{m}x{n}: factor re-decomposes")
    return res


# -- criterion 7: deep-triple constancy -------------------------------------------

@_timed
def sweep_deep_triples(corpus=None) -> SweepResult:
    res = SweepResult("deep-triple-constancy")
    for name, g in _corpus(corpus, max_walls=32):
        triples = separated_triples(g)
        bad = 0
        for t in triples:
            try:
                deep_triple_median(g, t)
            except NotConstant:
                bad += 1
        res.checks += max(1, len(triples))
        if bad:
            res.failures.append(f"{name}: {bad} NotConstant triples "
                                f"of {len(triples)}")
    return res


# -- criterion 8: barycenter oracle ------------------------------------------------

@_timed
def sweep_barycenter(corpus=None, measures: int = 1000,
                     seed: int = 31) -> SweepResult:
    res = SweepResult("barycenter-oracle")
    for name, g in _corpus(corpus):
        if g.n > 50:
            res.skipped.append(f"{name}: oracle skipped (over 50 vertices)")
            continue
        ws = wallspace(g)
        halfspace_sets = [frozenset(int(v) for v in np.flatnonzero(side))
                          for side in ws.sides]
        rng = np.random.default_rng(seed)
        for _ in range(measures):
            mu = random_measure(g.n, rng)
            result = center_of_mass(g, mu)
            got = set(int(v) for v in np.flatnonzero(result.center))
            want = oracles.center_of_mass(halfspace_sets, mu.weights)
            if not want:
                want = set(range(g.n))   # no majority halfspaces at all
            res.check(got == want, f"{name}: center != oracle intersection")
            crit = singleton_criterion(g, mu)
            res.check(crit.holds == result.singleton,
                      f"{name}: singleton criterion mismatch")
            res.check(balanced_transversality_check(g, mu) is None,
                      f"{name}: unbalanced halfspace separates the center")
    return res


# -- criterion 9: psi lower bound ----------------------------------------------------

def _first_strongly_separated_pair(g: MedianGraph):
    ws = wallspace(g)
    nh = ws.sides.shape[0]
    for i in range(nh):
        for j in range(i + 1, nh):
            if ws.disjoint[i, j] and strongly_separated(
                    g, ws.by_id(i), ws.by_id(j)):
                return ws.by_id(i), ws.by_id(j)
    return None


def _concentrated_measure(g, inside_mask, eps: Fraction, rng) -> ProbMeasure:
    """Random measure with mass strictly above 1 - eps inside the mask."""
    k = int(rng.integers(1, 101))
    inside_total = 1 - eps + eps * Fraction(k, 100)
    inside_ids = np.flatnonzero(inside_mask)
    outside_ids = np.flatnonzero(~inside_mask)
    weights: dict[int, Fraction] = {}

    def spread(ids, total):
        if total == 0:
            return
        m = int(rng.integers(1, min(3, len(ids)) + 1))
        chosen = rng.choice(ids, size=m, replace=False)
        parts = rng.integers(1, 10, size=m)
        s = int(parts.sum())
        for v, p in zip(chosen, parts):
            weights[int(v)] = weights.get(int(v), Fraction(0)) \
                + total * Fraction(int(p), s)

    spread(inside_ids, inside_total)
    spread(outside_ids, 1 - inside_total)
    return ProbMeasure(g.n, weights)


@_timed
def sweep_psi_bound(corpus=None, pairs: int = 1000, seed: int = 5) -> SweepResult:
    res = SweepResult("psi-bound")
    for name, g in _corpus(corpus, max_vertices=100):
        found = _first_strongly_separated_pair(g)
        if found is None:
            res.skipped.append(f"{name}: no strongly separated pair")
            continue
        h1, h2 = found
        rng = np.random.default_rng(seed)
        for eps in (Fraction(1, 10), Fraction(1, 100)):
            bound = 1 - 2 * eps
            for _ in range(pairs):
                mu1 = _concentrated_measure(g, h1.mask, eps, rng)
                mu2 = _concentrated_measure(g, h2.mask, eps, rng)
                value = psi(g, mu1, mu2)
                res.check(value > bound,
                          f"{name}: psi={value} <= 1-2eps={bound}")
    return res


# -- criterion 10: centroid --------------------------------------------------------

EQUIVARIANCE_CORPUS = ("path-7", "path-8", "tripod", "spider-3x2",
                       "grid-3x3", "grid-3x4", "hypercube-3", "staircase-2")


def _random_subset(n, rng):
    size = int(rng.integers(1, n + 1))
    mask = np.zeros(n, dtype=bool)
    mask[rng.choice(n, size=size, replace=False)] = True
    return mask


@_timed
def sweep_centroid(corpus=None, k_sets: int = 1000, seed: int = 13) -> SweepResult:
    res = SweepResult("centroid")
    items = _corpus(corpus, max_vertices=200)
    by_name = dict(items)
    # equivariance under the full automorphism group of symmetric instances
    for name in EQUIVARIANCE_CORPUS:
        g = by_name.get(name)
        if g is None:
            continue
        auts = automorphism_group(g)
        rng = np.random.default_rng(seed)
        for _ in range(k_sets):
            k = _random_subset(g.n, rng)
            c = centroid(g, k)
            for perm in auts:
                moved = centroid(g, apply_automorphism(g, perm, k))
                expect = apply_automorphism(g, perm, c)
                if not (moved == expect).all():
                    res.failures.append(f"{name}: centroid not equivariant")
                    break
            res.checks += len(auts)
    # odd paths: the centroid of everything is the middle vertex
    for k in range(1, 7):
        g = path(2 * k + 1)
        c = centroid(g, range(g.n))
        res.check(set(np.flatnonzero(c)) == {k},
                  f"path-{2 * k + 1}: centroid(all) != middle vertex")
    # nonempty everywhere, and on paths inside the eccentricity minimizers
    for name, g in items:
        rng = np.random.default_rng(seed + 1)
        dist_list = g.dist.tolist()
        for _ in range(k_sets):
            k = _random_subset(g.n, rng)
            c = centroid(g, k)
            res.check(bool(c.any()), f"{name}: empty centroid")
            if name.startswith("path"):
                hull = convex_hull(g, k)
                ecc = oracles.eccentricity_minimizers(
                    dist_list, [int(v) for v in np.flatnonzero(k)],
                    [int(v) for v in np.flatnonzero(hull)])
                res.check(set(np.flatnonzero(c)) <= ecc,
                          f"{name}: centroid outside eccentricity minimizers")
    return res


# -- criterion 11: median core ------------------------------------------------------

@_timed
def sweep_median_core(max_steps: int = 6) -> SweepResult:
    res = SweepResult("median-core")
    tri = tripod()
    core = median_core(tri)
    res.check(set(np.flatnonzero(core.core)) == {0},
              "tripod core is not the center")
    g33 = grid(3, 3)
    core33 = median_core(g33)
    res.check(not core33.core.any() and not core33.has_regular_directions,
              "grid-3x3 core should be empty and flagged")
    # nontrivial products have no strongly separated pairs at all
    for name, g in (("grid-3x4", grid(3, 4)), ("hypercube-3", hypercube(3)),
                    ("hypercube-4", hypercube(4))):
        r = median_core(g)
        res.check(not r.has_regular_directions and not r.core.any(),
                  f"{name}: product has a nonempty core")
    for steps in range(1, max_steps + 1):
        g = staircase(steps)
        r = median_core(g)
        ids = set(int(v) for v in np.flatnonzero(r.core))
        res.check(bool(ids), f"staircase-{steps}: empty core")
        closed = median_hull(g, r.core)
        res.check(bool((closed == r.core).all()),
                  f"staircase-{steps}: core is not median-closed")
        for perm in automorphism_group(g):
            img = apply_automorphism(g, perm, r.core)
            res.check(bool((img == r.core).all()),
                      f"staircase-{steps}: core not invariant")
    return res


# -- remaining module invariants ------------------------------------------------------

@_timed
def sweep_invariants(corpus=None, samples: int = 200, seed: int = 9) -> SweepResult:
    """Sampled checks of the invariants not covered by a dedicated suite."""
    res = SweepResult("invariants")
    small = _corpus(corpus, max_vertices=40)
    for name, g in small:
        rng = np.random.default_rng(seed)
        ws = wallspace(g)
        # median algebra axioms, sampled
        for _ in range(samples):
            x, y, z, t, w = (int(v) for v in rng.integers(0, g.n, size=5))
            res.check(median(g, x, x, y) == x, f"{name}: m(x,x,y) != x")
            m1 = median(g, x, y, z)
            res.check(m1 == median(g, y, x, z) == median(g, x, z, y),
                      f"{name}: median not symmetric")
            lhs = median(g, m1, t, w)
            rhs = median(g, x, median(g, y, t, w), median(g, z, t, w))
            res.check(lhs == rhs, f"{name}: distributive axiom fails")
        # interval = fixed points of m(a, b, .)
        for _ in range(min(samples, 50)):
            a, b = (int(v) for v in rng.integers(0, g.n, size=2))
            fixed = np.array([median(g, a, b, x) == x for x in range(g.n)])
            res.check(bool((fixed == g.interval(a, b)).all()),
                      f"{name}: interval != median fixed points")
        # hulls: containment, idempotence, monotonicity
        for _ in range(min(samples, 50)):
            mask = _random_subset(g.n, rng)
            ch = convex_hull(g, mask)
            mh = median_hull(g, mask)
            res.check(bool((mh & ~ch).sum() == 0),
                      f"{name}: median hull escapes convex hull")
            res.check(bool((convex_hull(g, ch) == ch).all()),
                      f"{name}: convex hull not idempotent")
            res.check(bool((median_hull(g, mh) == mh).all()),
                      f"{name}: median hull not idempotent")
            bigger = mask | _random_subset(g.n, rng)
            res.check(bool((ch & ~convex_hull(g, bigger)).sum() == 0),
                      f"{name}: convex hull not monotone")
        # fundamental family clauses
        fam = fundamental_family(g)
        fam_ids = [h.id for h in fam]
        sides = ws.sides
        for x in range(g.n):
            for y in range(g.n):
                if x == y:
                    continue
                if not any(sides[h][y] and not sides[h][x] for h in fam_ids):
                    res.failures.append(
                        f"{name}: family misses the pair ({x},{y})")
        res.checks += g.n * (g.n - 1)
        leq = ws.leq
        for hid in range(sides.shape[0]):
            if not any(leq[hid, f] for f in fam_ids):
                res.failures.append(
                    f"{name}: halfspace {hid} not below any family member")
        res.checks += sides.shape[0]
        # chain revalidation and the A_p report
        for r in (0, 1):
            for ch_ in find_chains(g, r, 2, limit=50):
                validate_chain(g, ch_)
                res.checks += 1
            rep = regular_direction_report(g, r)
            res.check(rep.monotone, f"{name}: A_p levels not nested")
            if ws.sides.shape[0]:
                base = 0
                level1 = set(rep.levels[0]) if rep.levels else set()
                want = {h for h in range(ws.sides.shape[0])
                        if not ws.sides[h][base]}
                res.check(level1 == want,
                          f"{name}: A_1 != halfspaces avoiding the base")
        # Crofton via halfspaces_between on sampled pairs
        for _ in range(min(samples, 40)):
            x, y = (int(v) for v in rng.integers(0, g.n, size=2))
            res.check(len(halfspaces_between(g, [x], [y])) == g.distance(x, y),
                      f"{name}: |H(x,y)| != d(x,y)")
    # equivariance of median, hulls, barycenter, psi on symmetric instances
    by_name = dict(default_corpus())
    for name in ("tripod", "grid-3x3", "hypercube-3", "staircase-2"):
        g = by_name[name]
        auts = automorphism_group(g)
        rng = np.random.default_rng(seed)
        for perm in auts:
            p = np.asarray(perm)
            for _ in range(10):
                x, y, z = (int(v) for v in rng.integers(0, g.n, size=3))
                res.check(median(g, int(p[x]), int(p[y]), int(p[z]))
                          == int(p[median(g, x, y, z)]),
                          f"{name}: median not equivariant")
                mask = _random_subset(g.n, rng)
                res.check(bool((convex_hull(g, apply_automorphism(g, perm, mask))
                                == apply_automorphism(g, perm, convex_hull(g, mask))).all()),
                          f"{name}: hull not equivariant")
                mu = random_measure(g.n, rng)
                moved = pushforward(g, mu, perm)
                before = center_of_mass(g, mu)
                after = center_of_mass(g, moved)
                res.check(bool((after.center
                                == apply_automorphism(g, perm, before.center)).all()),
                          f"{name}: barycenter not equivariant")
                mu2 = random_measure(g.n, rng)
                res.check(psi(g, mu, mu2)
                          == psi(g, pushforward(g, mu, perm),
                                 pushforward(g, mu2, perm)),
                          f"{name}: psi value not invariant")
    # concentration echo: small mass beyond a chain link forces a
    # fundamental-family member of large mass
    for name, g in (("path-7", path(7)), ("spider-3x2", spider(3, 2)),
                    ("staircase-3", staircase(3))):
        ws = wallspace(g)
        fam = fundamental_family(g)
        chains_ = find_chains(g, 0, 2, limit=20)
        rng = np.random.default_rng(seed)
        eps = Fraction(1, 5)
        used = 0
        for ch_ in chains_:
            tail = ws.by_id(ch_.halfspace_ids[-1])
            for _ in range(10):
                mu = random_measure(g.n, rng)
                if ev(mu, tail) >= eps:
                    continue
                used += 1
                # family members containing tail^c carry mass > 1 - eps
                best = max((ev(mu, h) for h in fam
                            if not (~tail.mask & ~h.mask).any()),
                           default=Fraction(0))
                res.check(best > 1 - eps,
                          f"{name}: no family member of mass > 1-eps")
        if not used:
            res.skipped.append(f"{name}: concentration premise never met")
    return res


SUITES = {
    "validator": sweep_validator,
    "crofton": sweep_crofton,
    "separation-helly": sweep_separation_helly,
    "gates": sweep_gates,
    "duality": sweep_duality,
    "rank-factors": sweep_rank_factors,
    "deep-triple-constancy": sweep_deep_triples,
    "barycenter-oracle": sweep_barycenter,
    "psi-bound": sweep_psi_bound,
    "centroid": sweep_centroid,
    "median-core": sweep_median_core,
    "invariants": sweep_invariants,
}


def run_suite(name: str) -> list[SweepResult]:
    """Run one named suite (or every suite for "default"/"all")."""
    if name in ("default", "all"):
        return [fn() for fn in SUITES.values()]
    if name not in SUITES:
        raise MedkitError(f"unknown suite {name!r}")
    return [SUITES[name]()]
