"""Wall structure, transversality, rank, factorization, duality, family."""

import numpy as np
import pytest

from medkit import generators as gen
from medkit import oracles
from medkit.errors import EmptySet, NotDisjoint, NotMedian, ThetaNotTransitive
from medkit.graph import is_convex
from medkit.pocset import dual_median_graph
from medkit.walls import (
    decompose,
    dual_round_trip_isomorphic,
    flips,
    fundamental_family,
    halfspaces,
    halfspaces_between,
    irreducible_factors,
    pocset_of,
    rank,
    separate,
    strongly_separated,
    transverse,
    verify_factorization,
    wallspace,
    walls,
)

from conftest import ids


class TestWalls:
    def test_path_wall_count(self, p4):
        assert len(walls(p4)) == 3

    def test_cube_walls(self, q3):
        ws = walls(q3)
        assert len(ws) == 3
        for w in ws:
            assert int(w.side0.sum()) == 4 and int(w.side1.sum()) == 4

    def test_tripod_walls(self, tripod):
        sides = sorted(min(ids(w.side0), ids(w.side1), key=len)
                       for w in walls(tripod))
        assert sides == [{1}, {2}, {3}]

    def test_sides_partition_and_convex(self, staircase3):
        for w in walls(staircase3):
            assert not (w.side0 & w.side1).any()
            assert (w.side0 | w.side1).all()
            assert is_convex(staircase3, w.side0)
            assert is_convex(staircase3, w.side1)

    def test_side0_contains_vertex_zero(self, grid33):
        for w in walls(grid33):
            assert w.side0[0]

    def test_nonmedian_rejected(self):
        with pytest.raises(NotMedian):
            walls(gen.cycle(5))
        with pytest.raises((ThetaNotTransitive, NotMedian)):
            walls(gen.complete_bipartite(2, 3))

    def test_all_halfspaces_match_subset_oracle(self):
        # full subset enumeration on tiny graphs certifies that the
        # Djokovic-Winkler sides are ALL the halfspaces
        for g in (gen.path(4), gen.tripod(), gen.hypercube(2),
                  gen.staircase(1)):
            dist = g.dist.tolist()
            want = set(oracles.all_halfspaces(dist))
            got = {frozenset(h.ids()) for h in halfspaces(g)}
            assert got == want


class TestHalfspacesBetween:
    def test_same_vertex_empty(self, p4):
        assert halfspaces_between(p4, [2], [2]) == []

    def test_crofton_on_path(self, p4):
        assert len(halfspaces_between(p4, [0], [3])) == 3

    def test_square_pair(self, q2):
        got = {frozenset(h.ids()) for h in halfspaces_between(q2, [0], [3])}
        assert got == {frozenset({1, 3}), frozenset({2, 3})}

    def test_empty_input_raises(self, p4):
        with pytest.raises(EmptySet):
            halfspaces_between(p4, [], [1])


class TestTransversality:
    def test_square_walls_transverse(self, q2):
        h1, h2 = (wallspace(q2).halfspace(w, 0) for w in (0, 1))
        assert transverse(h1, h2)

    def test_tree_walls_never_transverse(self, p7):
        hs = halfspaces(p7)
        assert not any(transverse(a, b) for a in hs for b in hs
                       if a.wall_id != b.wall_id)

    def test_self_and_complement(self, q2):
        h = halfspaces(q2)[0]
        assert not transverse(h, h)
        assert not transverse(h, h.complement())


class TestStrongSeparation:
    def test_tripod_leaves(self, tripod):
        ws = wallspace(tripod)
        leaf = {}
        for w in ws.walls:
            small = min(ids(w.side0), ids(w.side1), key=len)
            leaf[tuple(small)] = ws.halfspace(
                w.id, 0 if len(ids(w.side0)) == 1 else 1)
        assert strongly_separated(tripod, leaf[(1,)], leaf[(2,)])

    def test_grid_columns_not_strongly_separated(self, grid33):
        ws = wallspace(grid33)
        left = right = None
        for h in ws.all_halfspaces():
            if ids(h.mask) == {0, 3, 6}:
                left = h
            if ids(h.mask) == {2, 5, 8}:
                right = h
        assert left is not None and right is not None
        assert not strongly_separated(grid33, left, right)

    def test_staircase_first_last_step_walls(self, staircase3):
        # far vertical cuts of one arm: strongly separated when the
        # arm is long enough for no horizontal wall to cross both
        ws = wallspace(staircase3)
        center_side = ws.sides[:, 0]
        arm_far = [h for h in range(ws.sides.shape[0]) if not center_side[h]]
        found = any(
            ws.disjoint[a, b] and strongly_separated(
                staircase3, ws.by_id(a), ws.by_id(b))
            for a in arm_far for b in arm_far if a < b)
        assert found

    def test_overlapping_raises(self, q2):
        hs = halfspaces(q2)
        with pytest.raises(NotDisjoint):
            strongly_separated(q2, hs[0], hs[2])

    def test_symmetry_and_rank1_equivalence(self, p7):
        # every disjoint pair in a tree is strongly separated
        ws = wallspace(p7)
        nh = ws.sides.shape[0]
        for a in range(nh):
            for b in range(a + 1, nh):
                if ws.disjoint[a, b]:
                    assert strongly_separated(p7, ws.by_id(a), ws.by_id(b))
                    assert strongly_separated(p7, ws.by_id(b), ws.by_id(a))


class TestRank:
    def test_trees_rank_one(self, p7, tripod):
        assert rank(p7) == 1
        assert rank(tripod) == 1

    def test_cube(self, q3):
        assert rank(q3) == 3

    def test_grid(self, grid33):
        assert rank(grid33) == 2

    def test_matches_subset_oracle(self, staircase3, spider32, grid33):
        for g in (staircase3, spider32, grid33):
            ws = wallspace(g)
            universe = frozenset(range(g.n))
            sides = [frozenset(ids(w.side0)) for w in ws.walls]
            assert rank(g) == oracles.max_transverse_family(sides, universe)


class TestFactorization:
    def test_square_splits(self, q2):
        factors = irreducible_factors(q2)
        assert sorted(f.n for f in factors) == [2, 2]

    def test_path_is_irreducible(self, p4):
        factors = irreducible_factors(p4)
        assert len(factors) == 1 and factors[0].n == 4

    def test_grid_three_by_three(self, grid33):
        dec = decompose(grid33)
        assert sorted(f.n for f in dec.factors) == [3, 3]
        assert verify_factorization(grid33, dec)

    def test_staircase_irreducible(self, staircase3):
        assert len(irreducible_factors(staircase3)) == 1

    def test_rank_additivity(self):
        g = gen.grid(3, 5)
        dec = decompose(g)
        assert rank(g) == sum(rank(f) for f in dec.factors)

    def test_single_vertex(self):
        g = gen.path(1)
        assert [f.n for f in irreducible_factors(g)] == [1]


class TestDuality:
    def test_empty_pocset_dualizes_to_point(self):
        poc = pocset_of(gen.path(1))
        dual = dual_median_graph(poc)
        assert dual.graph.n == 1

    def test_two_transverse_pairs_give_square(self):
        from medkit.pocset import pocset_from_relations
        poc = pocset_from_relations(4, [(0, 1), (2, 3)], [])
        dual = dual_median_graph(poc)
        assert dual.graph.n == 4
        assert sorted(int(d) for d in dual.graph.adj.sum(axis=1)) == [2, 2, 2, 2]

    def test_chain_gives_path(self):
        from medkit.pocset import pocset_from_relations
        # h1 <= h2 <= h3 (elements 0, 2, 4; complements 1, 3, 5)
        poc = pocset_from_relations(
            6, [(0, 1), (2, 3), (4, 5)], [(0, 2), (2, 4)])
        dual = dual_median_graph(poc)
        assert dual.graph.n == 4
        degs = sorted(int(d) for d in dual.graph.adj.sum(axis=1))
        assert degs == [1, 1, 2, 2]

    @pytest.mark.parametrize("maker", [
        lambda: gen.path(6), lambda: gen.tripod(), lambda: gen.hypercube(3),
        lambda: gen.grid(3, 4), lambda: gen.staircase(2),
        lambda: gen.prufer_tree(12, seed=4),
    ])
    def test_round_trip(self, maker):
        g = maker()
        assert dual_round_trip_isomorphic(g, dual_median_graph(pocset_of(g)))


class TestFundamentalFamily:
    def test_path_gets_everything(self, p4):
        fam = fundamental_family(p4)
        assert len(fam) == 6

    def test_single_edge(self):
        g = gen.path(2)
        assert len(fundamental_family(g)) == 2

    def test_separates_all_pairs(self, staircase3):
        fam = fundamental_family(staircase3)
        for x in range(staircase3.n):
            for y in range(staircase3.n):
                if x != y:
                    assert any(h.mask[y] and not h.mask[x] for h in fam)

    def test_dominates_every_halfspace(self, grid33):
        fam = fundamental_family(grid33)
        for h in halfspaces(grid33):
            assert any(not (h.mask & ~f.mask).any() for f in fam)


class TestFlips:
    def test_identity_never_flips(self, tripod):
        for h in halfspaces(tripod):
            assert not flips(tripod, [0, 1, 2, 3], h)

    def test_leaf_swap_flips(self, tripod):
        ws = wallspace(tripod)
        h = next(hh for hh in ws.all_halfspaces() if ids(hh.mask) == {1})
        assert flips(tripod, [0, 2, 1, 3], h)

    def test_rotation_does_not_flip_overlapping_side(self, q2):
        ws = wallspace(q2)
        h = next(hh for hh in ws.all_halfspaces() if ids(hh.mask) == {0, 1})
        assert not flips(q2, [2, 0, 3, 1], h)


class TestSeparate:
    def test_path_example(self, p4):
        h = separate(p4, [0], [2, 3])
        assert ids(h.mask) == {2, 3}

    def test_square_tie_break(self, q2):
        h = separate(q2, [0], [3])
        # both separating walls have two vertices; the lowest wall id wins
        valid = [hh for hh in halfspaces(q2)
                 if hh.mask[3] and not hh.mask[0]]
        best = min(valid, key=lambda hh: (int(hh.mask.sum()), hh.id))
        assert h == best

    def test_tripod_example(self, tripod):
        assert ids(separate(tripod, [1], [2]).mask) == {2}

    def test_not_disjoint_raises(self, p4):
        with pytest.raises(NotDisjoint):
            separate(p4, [0, 1], [1, 2])
