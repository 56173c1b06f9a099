"""Core graph operations against spec examples and brute-force oracles."""

import numpy as np
import pytest

from medkit import generators as gen
from medkit import oracles
from medkit.errors import (
    DisconnectedGraph,
    EmptySet,
    NotAutomorphism,
    NotConvex,
    NotDisjoint,
    NotMedian,
)
from medkit.graph import (
    MedianGraph,
    apply_automorphism,
    automorphism_group,
    convex_hull,
    gate,
    gate_image,
    helly_witness,
    is_convex,
    is_median_graph,
    median,
    median_hull,
    verify_automorphism,
)

from conftest import ids


class TestConstruction:
    def test_distances_path(self, p4):
        assert p4.distance(0, 3) == 3

    def test_distances_square(self, q2):
        assert q2.distance(0, 3) == 2

    def test_distances_tripod(self, tripod):
        assert tripod.distance(1, 2) == 2

    def test_distance_matrix_is_metric(self, grid33):
        d = grid33.dist
        assert (d == d.T).all()
        assert (d.diagonal() == 0).all()
        # d(x, y) <= d(x, c) + d(c, y) for all x, c, y
        assert (d[:, :, None] <= d[:, None, :] + d[None, :, :]).all()

    def test_matches_bfs_oracle(self, staircase3):
        want = oracles.bfs_distances(staircase3.n, staircase3.edges)
        assert staircase3.dist.tolist() == want

    def test_disconnected_rejected(self):
        with pytest.raises(DisconnectedGraph):
            MedianGraph(4, [(0, 1), (2, 3)])

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError):
            MedianGraph(2, [(0, 0), (0, 1)])

    def test_duplicate_edge_rejected(self):
        with pytest.raises(ValueError):
            MedianGraph(2, [(0, 1), (1, 0)])


class TestInterval:
    def test_whole_path(self, p4):
        assert ids(p4.interval(0, 3)) == {0, 1, 2, 3}

    def test_square_diagonal(self, q2):
        assert ids(q2.interval(0, 3)) == {0, 1, 2, 3}

    def test_tripod_leaves(self, tripod):
        assert ids(tripod.interval(1, 2)) == {1, 0, 2}

    def test_interval_is_convex(self, grid33):
        for a in range(grid33.n):
            for b in range(grid33.n):
                assert is_convex(grid33, grid33.interval(a, b))

    def test_matches_oracle(self, spider32):
        dist = spider32.dist.tolist()
        for a in range(spider32.n):
            for b in range(spider32.n):
                assert ids(spider32.interval(a, b)) == oracles.interval(dist, a, b)


class TestMedian:
    def test_majority_absorbs(self, p7):
        for x in range(p7.n):
            for y in range(p7.n):
                assert median(p7, x, x, y) == x

    def test_tripod_center(self, tripod):
        assert median(tripod, 1, 2, 3) == 0

    def test_path_example(self, p4):
        assert median(p4, 0, 3, 2) == 2

    def test_not_median_raises(self):
        c6 = gen.cycle(6)
        with pytest.raises(NotMedian):
            median(c6, 0, 2, 4)


class TestValidator:
    def test_trees_are_median(self, p4):
        assert is_median_graph(p4)

    def test_cycle_six_rejected(self):
        verdict = is_median_graph(gen.cycle(6))
        assert not verdict
        x, y, z = verdict.witness
        dist = gen.cycle(6).dist.tolist()
        assert len(oracles.median_candidates(dist, x, y, z)) != 1

    def test_k23_rejected(self):
        assert not is_median_graph(gen.complete_bipartite(2, 3))

    @pytest.mark.parametrize("maker", [
        lambda: gen.grid(4, 5),
        lambda: gen.hypercube(4),
        lambda: gen.staircase(3),
        lambda: gen.spider(4, 3),
        lambda: gen.prufer_tree(40, seed=5),
    ])
    def test_generators_validate(self, maker):
        assert is_median_graph(maker())

    def test_matches_oracle_on_small(self):
        for g in (gen.cycle(5), gen.staircase(1), gen.grid(2, 3)):
            want, _ = oracles.is_median(g.dist.tolist())
            assert bool(is_median_graph(g)) == want


class TestConvexity:
    def test_singleton(self, p4):
        assert is_convex(p4, [1])

    def test_gap_not_convex(self, p4):
        assert not is_convex(p4, [0, 2])

    def test_hull_of_convex_is_identity(self, grid33):
        col = [0, 3, 6]
        assert is_convex(grid33, col)
        assert ids(convex_hull(grid33, col)) == set(col)

    def test_hull_path_example(self, p4):
        assert ids(convex_hull(p4, [0, 2])) == {0, 1, 2}

    def test_hull_square(self, q2):
        assert ids(convex_hull(q2, [0, 3])) == {0, 1, 2, 3}

    def test_hull_matches_oracle(self, staircase3):
        rng = np.random.default_rng(1)
        dist = staircase3.dist.tolist()
        for _ in range(20):
            s = rng.choice(staircase3.n, size=3, replace=False).tolist()
            assert ids(convex_hull(staircase3, s)) == oracles.hull(dist, s)

    def test_hull_empty_raises(self, p4):
        with pytest.raises(EmptySet):
            convex_hull(p4, [])


class TestMedianHull:
    def test_fixed_point(self, q2):
        assert ids(median_hull(q2, [0, 1])) == {0, 1}

    def test_tripod(self, tripod):
        assert ids(median_hull(tripod, [1, 2, 3])) == {0, 1, 2, 3}

    def test_pair_in_square_stays(self, q2):
        assert ids(median_hull(q2, [0, 3])) == {0, 3}

    def test_inside_convex_hull_and_oracle(self, spider32):
        rng = np.random.default_rng(3)
        dist = spider32.dist.tolist()
        for _ in range(15):
            s = rng.choice(spider32.n, size=3, replace=False).tolist()
            mh = median_hull(spider32, s)
            assert ids(mh) == oracles.median_closure(dist, s)
            assert ids(mh) <= ids(convex_hull(spider32, s))


class TestGate:
    def test_identity_on_members(self, p4):
        assert gate(p4, [2, 3], 2) == 2

    def test_path_example(self, p4):
        assert gate(p4, [2, 3], 0) == 2

    def test_square_example(self, q2):
        assert gate(q2, [0, 1], 3) == 1

    def test_not_convex_raises(self, p4):
        with pytest.raises(NotConvex):
            gate(p4, [0, 2], 3)

    def test_gate_interval_property(self, grid33):
        convex = [0, 1, 3, 4]
        for x in range(grid33.n):
            p = gate(grid33, convex, x)
            for c in convex:
                assert grid33.distance(x, c) == \
                    grid33.distance(x, p) + grid33.distance(p, c)

    def test_matches_oracle(self, staircase3):
        dist = staircase3.dist.tolist()
        convex = ids(convex_hull(staircase3, [0, 5]))
        for x in range(staircase3.n):
            assert {gate(staircase3, convex, x)} == \
                oracles.gate_points(dist, convex, x)


class TestGateImage:
    def test_same_set(self, p4):
        gi = gate_image(p4, [1, 2], [1, 2])
        assert ids(gi.image) == {1, 2} and gi.lemma_applies

    def test_path_example(self, p4):
        gi = gate_image(p4, [1, 2], [2, 3])
        assert ids(gi.image) == {2} and gi.lemma_applies

    def test_square_example(self, q2):
        gi = gate_image(q2, [0, 1], [1, 3])
        assert ids(gi.image) == {1}

    def test_disjoint_flagged(self, p4):
        gi = gate_image(p4, [0], [2, 3])
        assert not gi.lemma_applies
        assert ids(gi.image) == {0}


class TestHelly:
    def test_three_intervals_give_median(self, grid33):
        x, y, z = 0, 8, 2
        sets = [grid33.interval(x, y), grid33.interval(y, z),
                grid33.interval(x, z)]
        w = helly_witness(grid33, sets)
        assert w == median(grid33, x, y, z)

    def test_disjoint_pair_returned(self, p4):
        assert helly_witness(p4, [[0], [2, 3]]) == (0, 1)

    def test_single_set(self, p4):
        assert helly_witness(p4, [[2, 3]]) == 2

    def test_not_convex_raises(self, p4):
        with pytest.raises(NotConvex):
            helly_witness(p4, [[0, 2]])

    def test_empty_raises(self, p4):
        with pytest.raises(EmptySet):
            helly_witness(p4, [])


class TestAutomorphisms:
    def test_identity(self, p4):
        assert verify_automorphism(p4, [0, 1, 2, 3])
        assert ids(apply_automorphism(p4, [0, 1, 2, 3], [0, 2])) == {0, 2}

    def test_leaf_swap(self, tripod):
        swap = [0, 2, 1, 3]
        assert verify_automorphism(tripod, swap)
        assert ids(apply_automorphism(tripod, swap, [1])) == {2}

    def test_square_rotation_moves_halfspace(self, q2):
        rot = [2, 0, 3, 1]  # 00 -> 10 -> 11 -> 01 -> 00
        assert verify_automorphism(q2, rot)
        assert ids(apply_automorphism(q2, rot, [0, 1])) == {0, 2}

    def test_non_automorphism_rejected(self, p4):
        assert not verify_automorphism(p4, [1, 0, 2, 3])
        with pytest.raises(NotAutomorphism):
            apply_automorphism(p4, [1, 0, 2, 3], [0])

    def test_group_orders(self, p4, q2, q3, tripod, grid33):
        assert len(automorphism_group(p4)) == 2
        assert len(automorphism_group(q2)) == 8
        assert len(automorphism_group(q3)) == 48
        assert len(automorphism_group(tripod)) == 6
        assert len(automorphism_group(grid33)) == 8

    def test_median_equivariance(self, q3):
        for perm in automorphism_group(q3):
            p = np.asarray(perm)
            for (x, y, z) in ((0, 7, 3), (1, 2, 4), (5, 6, 0)):
                assert median(q3, int(p[x]), int(p[y]), int(p[z])) \
                    == int(p[median(q3, x, y, z)])
