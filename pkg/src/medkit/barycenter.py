"""Measures on vertices, majority halfspaces and the center of mass.

Weights are exact rationals: the balanced condition mu(h) = 1/2 is an
exact equality, so floating point would corrupt the balanced family.
The center of mass is the intersection of all halfspaces of mass
strictly above 1/2; it is nonempty and convex by the Helly property.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import EmptyFamily, MedkitError, NotAutomorphism
from .graph import MedianGraph, require_automorphism
from .walls import Halfspace, wallspace

HALF = Fraction(1, 2)


class ProbMeasure:
    """Finitely supported probability measure with exact rational weights."""

    __slots__ = ("n", "weights")

    def __init__(self, n: int, weights):
        self.n = n
        clean: dict[int, Fraction] = {}
        total = Fraction(0)
        for v, w in dict(weights).items():
            v = int(v)
            w = Fraction(w)
            if not 0 <= v < n:
                raise MedkitError(f"vertex {v} out of range")
            if w < 0:
                raise MedkitError(f"negative weight at vertex {v}")
            if w > 0:
                clean[v] = clean.get(v, Fraction(0)) + w
            total += w
        if total != 1:
            raise MedkitError(f"total mass {total} != 1")
        self.weights = clean

    @classmethod
    def delta(cls, n: int, v: int) -> "ProbMeasure":
        return cls(n, {v: Fraction(1)})

    @classmethod
    def uniform(cls, n: int, vertices) -> "ProbMeasure":
        vs = list(vertices)
        return cls(n, {v: Fraction(1, len(vs)) for v in vs})

    @classmethod
    def from_triples(cls, n: int, triples) -> "ProbMeasure":
        """Build from (vertex, numerator, denominator) triples."""
        acc: dict[int, Fraction] = {}
        for v, num, den in triples:
            acc[int(v)] = acc.get(int(v), Fraction(0)) + Fraction(int(num), int(den))
        return cls(n, acc)

    def mass(self, mask: np.ndarray) -> Fraction:
        return sum((w for v, w in self.weights.items() if mask[v]),
                   Fraction(0))

    def support(self) -> list[int]:
        return sorted(self.weights)

    def __eq__(self, other):
        return (isinstance(other, ProbMeasure)
                and self.n == other.n and self.weights == other.weights)

    def __repr__(self):
        return f"ProbMeasure(n={self.n}, support={self.support()})"


def ev(measure: ProbMeasure, halfspace: Halfspace) -> Fraction:
    """mu(h): total weight of the halfspace's vertex set."""
    return measure.mass(halfspace.mask)


@dataclass(frozen=True)
class BarycenterResult:
    center: np.ndarray              # C_mu as a vertex mask
    singleton: bool
    majority_ids: tuple[int, ...]   # halfspace ids with mass > 1/2
    balanced_ids: tuple[int, ...]   # halfspace ids with mass == 1/2


def center_of_mass(graph: MedianGraph, measure: ProbMeasure) -> BarycenterResult:
    """Intersection of all halfspaces of mass > 1/2.

    Majority halfspaces pairwise intersect (their masses sum above 1),
    so the Helly property makes the result nonempty; equivariance under
    automorphisms is a test-enforced invariant.
    """
    ws = wallspace(graph)
    majority, balanced = [], []
    center = np.ones(graph.n, dtype=bool)
    for hid in range(ws.sides.shape[0]):
        m = measure.mass(ws.sides[hid])
        if m > HALF:
            majority.append(hid)
            center &= ws.sides[hid]
        elif m == HALF:
            balanced.append(hid)
    if not center.any():
        raise MedkitError("empty center of mass (Helly violated)")
    return BarycenterResult(center, int(center.sum()) == 1,
                            tuple(majority), tuple(balanced))


def _separation_counts(graph: MedianGraph, measure: ProbMeasure) -> np.ndarray:
    """counts[x, y] = number of unbalanced halfspaces separating y from x."""
    ws = wallspace(graph)
    nh = ws.sides.shape[0]
    unbalanced = np.array(
        [measure.mass(ws.sides[h]) != HALF for h in range(nh)], dtype=bool)
    s = ws.sides[unbalanced].astype(np.uint8)
    if s.size == 0:
        out = np.zeros((graph.n, graph.n), dtype=np.int64)
        return out
    return ((1 - s).T.astype(np.int64) @ s.astype(np.int64))


@dataclass(frozen=True)
class SingletonCriterion:
    holds: bool
    witness: tuple[int, int] | None   # pair with H(x, y) fully balanced


def singleton_criterion(graph: MedianGraph, measure: ProbMeasure) -> SingletonCriterion:
    """Literal test: no vertex pair has every separating halfspace balanced.

    Must be equivalent to the center of mass being a single vertex;
    that equivalence is the proposition under test, enforced by sweeps.
    """
    counts = _separation_counts(graph, measure)
    np.fill_diagonal(counts, 1)
    bad = np.argwhere(counts == 0)
    if len(bad):
        x, y = int(bad[0][0]), int(bad[0][1])
        return SingletonCriterion(False, (x, y))
    return SingletonCriterion(True, None)


def balanced_transversality_check(graph: MedianGraph, measure: ProbMeasure):
    """Verify every halfspace separating two center points is balanced.

    Returns None on success, else a counterexample (x, y, halfspace_id);
    none should exist on a median graph.
    """
    result = center_of_mass(graph, measure)
    ids = np.flatnonzero(result.center)
    counts = _separation_counts(graph, measure)
    sub = counts[np.ix_(ids, ids)]
    np.fill_diagonal(sub, 0)
    bad = np.argwhere(sub > 0)
    if not len(bad):
        return None
    x, y = int(ids[bad[0][0]]), int(ids[bad[0][1]])
    ws = wallspace(graph)
    for hid in range(ws.sides.shape[0]):
        side = ws.sides[hid]
        if side[y] and not side[x] and measure.mass(side) != HALF:
            return (x, y, hid)
    raise AssertionError("inconsistent separation counts")


def psi(graph: MedianGraph, mu1: ProbMeasure, mu2: ProbMeasure,
        family=None) -> Fraction:
    """min over the family of |mu1(h)-mu1(h^c)| + |mu2(h)-mu2(h^c)|.

    Defaults to all halfspaces; any subfamily gives a value at least as
    large.  Point masses anywhere give exactly 2.
    """
    ws = wallspace(graph)
    if family is None:
        masks = list(ws.sides)
    else:
        masks = [h.mask for h in family]
    if not masks:
        raise EmptyFamily("psi needs a nonempty halfspace family")
    best = None
    for mask in masks:
        m1 = mu1.mass(mask)
        m2 = mu2.mass(mask)
        val = abs(2 * m1 - 1) + abs(2 * m2 - 1)
        if best is None or val < best:
            best = val
    return best


def pushforward(graph: MedianGraph, measure: ProbMeasure, perm) -> ProbMeasure:
    """(g_* mu)(v) = mu(g^{-1} v) for a verified automorphism g."""
    p = require_automorphism(graph, perm)
    if measure.n != graph.n:
        raise NotAutomorphism("measure lives on a different vertex set")
    return ProbMeasure(graph.n,
                       {int(p[v]): w for v, w in measure.weights.items()})
