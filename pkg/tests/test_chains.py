"""Chains, separated triples, deep medians, the core, direction reports."""

import numpy as np
import pytest

from medkit import generators as gen
from medkit.chains import (
    Chain,
    SeparatedTriple,
    deep_triple_median,
    extend_chain,
    find_chains,
    median_core,
    regular_direction_report,
    separated_triples,
    validate_chain,
)
from medkit.errors import InvalidChain, InvalidTriple
from medkit.graph import median_hull, apply_automorphism, automorphism_group
from medkit.walls import wallspace

from conftest import ids


class TestFindChains:
    def test_grid_has_no_pairs(self, grid33):
        assert find_chains(grid33, 0, 2) == []

    def test_path_chain_with_gap(self, p7):
        chains = find_chains(p7, 1, 2)
        assert chains
        ws = wallspace(p7)
        # the spec's sample chain: vertices >= 1 followed by vertices >= 4
        sample = None
        for c in chains:
            m1, m2 = (ids(ws.sides[h]) for h in c.halfspace_ids)
            if m1 == {1, 2, 3, 4, 5, 6} and m2 == {4, 5, 6}:
                sample = c
        assert sample is not None
        # min vertex distance between {0} and {4,5,6} is 4 > 1
        assert sample.gaps == (4,)

    def test_staircase_depth_three(self, staircase3):
        assert find_chains(staircase3, 0, 3)

    def test_all_chains_revalidate(self, staircase3):
        for c in find_chains(staircase3, 0, 2, limit=200):
            validate_chain(staircase3, c)

    def test_length_one_lists_halfspaces(self, p4):
        assert len(find_chains(p4, 0, 1)) == 6

    def test_limit_respected(self, p7):
        assert len(find_chains(p7, 0, 1, limit=3)) == 3


class TestExtendChain:
    def test_empty_chain_gets_first_halfspace(self, p7):
        c = extend_chain(p7, None, 0)
        assert c.halfspace_ids == (0,)

    def test_extension_validates(self, p7):
        c = Chain((1,), 0, ())   # the side {1..6}, which can nest further
        c2 = extend_chain(p7, c, 0)
        assert c2 is not None and len(c2) == 2
        validate_chain(p7, c2)
        ws = wallspace(p7)
        assert ids(ws.sides[c2.halfspace_ids[1]]) < ids(ws.sides[c2.halfspace_ids[0]])

    def test_minimal_halfspace_has_no_extension(self, p7):
        # halfspace 0 is the singleton {0}; nothing nests inside it
        assert extend_chain(p7, Chain((0,), 0, ()), 0) is None

    def test_exhaustion_returns_none(self, p4):
        c = Chain((0,), 0, ())
        while c is not None:
            last = c
            c = extend_chain(p4, c, 0)
        assert last is not None  # finite graph ran out

    def test_invalid_chain_rejected(self, p7):
        with pytest.raises(InvalidChain):
            validate_chain(p7, Chain((0, 0), 0, (1,)))


class TestSeparatedTriples:
    def test_tripod_unique_triple(self, tripod):
        triples = separated_triples(tripod)
        assert len(triples) == 1
        sides = [ids(wallspace(tripod).sides[h])
                 for h in triples[0].halfspace_ids]
        assert sorted(sides, key=min) == [{1}, {2}, {3}]

    def test_grid_has_none(self, grid33):
        assert separated_triples(grid33) == []

    def test_transverse_pair_rejected(self, q2):
        with pytest.raises(InvalidTriple):
            deep_triple_median(q2, SeparatedTriple((0, 2, 3)))


class TestDeepTripleMedian:
    def test_tripod_center(self, tripod):
        (t,) = separated_triples(tripod)
        assert deep_triple_median(tripod, t) == 0

    def test_spider_all_triples_hit_center(self, spider32):
        triples = separated_triples(spider32)
        assert triples
        for t in triples:
            assert deep_triple_median(spider32, t) == 0

    def test_full_and_gate_paths_agree(self, staircase3):
        for t in separated_triples(staircase3)[:40]:
            full = deep_triple_median(staircase3, t, full_cutoff=10 ** 6)
            gated = deep_triple_median(staircase3, t, full_cutoff=1)
            assert full == gated


class TestMedianCore:
    def test_tripod(self, tripod):
        res = median_core(tripod)
        assert ids(res.core) == {0} and res.has_regular_directions

    def test_grid_flagged_empty(self, grid33):
        res = median_core(grid33)
        assert not res.core.any()
        assert not res.has_regular_directions

    def test_spider(self, spider32):
        assert ids(median_core(spider32).core) == {0}

    def test_staircase_invariant_closed(self, staircase3):
        res = median_core(staircase3)
        assert res.core.any()
        assert (median_hull(staircase3, res.core) == res.core).all()
        for perm in automorphism_group(staircase3):
            moved = apply_automorphism(staircase3, perm, res.core)
            assert (moved == res.core).all()


class TestRegularDirectionReport:
    def test_level_one_is_complement_of_base(self, p7):
        rep = regular_direction_report(p7, 0, base_vertex=0)
        ws = wallspace(p7)
        want = {h for h in range(ws.sides.shape[0]) if not ws.sides[h][0]}
        assert set(rep.levels[0]) == want

    def test_path_reaches_depth_two(self, p7):
        rep = regular_direction_report(p7, 0)
        assert len(rep.levels) >= 2 and rep.monotone

    def test_grid_stops_at_depth_one(self, grid33):
        rep = regular_direction_report(grid33, 0)
        assert len(rep.levels) == 1

    def test_spacing_prunes(self, p7):
        deep0 = len(regular_direction_report(p7, 0).levels)
        deep2 = len(regular_direction_report(p7, 2).levels)
        assert deep2 <= deep0
