"""Claim checkers: verdict logic, integer-exact bounds, the longest-path
intersection set, and hypotraceability."""

from itertools import combinations

import pytest

from conftest import (
    corpus,
    corpus_up_to,
    cycle_graph,
    path_graph,
    petersen_graph,
    star_graph,
)
from gallai.claims import (
    HOLDS,
    SKIPPED_TRUNCATED,
    VACUOUS,
    VIOLATED,
    CONJECTURE_CLAIMS,
    PROVEN_CLAIMS,
    TruncatedEnumerationError,
    case1_inequality,
    case2_inequality,
    check_case_bounds,
    check_conjecture4,
    check_conjecture_z,
    check_lemma21,
    check_lemma22,
    check_lemma23,
    check_prop1,
    check_theorem1,
    crossing_length_inequality,
    gallai_vertex_set,
    is_hypotraceable,
    lemma21_inequality,
    lemma22_inequality,
    theorem1_inequality,
)
from gallai.graphs import distances_from_set, from_edge_list
from gallai.paths import BudgetError, Path, enumerate_longest_paths
from gallai.triples import PathTriple, analyze_triple


def star_setup():
    g = star_graph(3)
    lp = enumerate_longest_paths(g)
    return g, lp, PathTriple(tuple(lp.paths))


def cycle_setup():
    g = cycle_graph(5)
    lp = enumerate_longest_paths(g)
    return g, lp, PathTriple(tuple(lp.paths[:3]))


class TestInequalities:
    def test_lemma21_boundary(self):
        # 2*13 = 26 against 3*7 + 2 + 3 = 26.
        assert lemma21_inequality(13, 7, (2, 0, 0))
        assert not lemma21_inequality(12, 7, (2, 0, 0))

    def test_lemma22_negative_rhs(self):
        assert lemma22_inequality((0, 0, 0), (1, 1, 1), 0)
        assert lemma22_inequality((0, 0, 0), (5, 5, 5), 0)
        assert lemma22_inequality((0, 0, 0), (2, 2, 2), 1)
        assert not lemma22_inequality((0, 1, 1), (2, 2, 2), 2)

    def test_theorem1_boundaries(self):
        assert theorem1_inequality(7, 0)
        assert theorem1_inequality(7, 1)       # 13 <= 13
        assert not theorem1_inequality(6, 1)   # 13 > 12

    def test_case_bounds_arithmetic(self):
        assert case1_inequality(9, 1)          # 26 <= 27
        assert not case1_inequality(8, 1)      # 26 > 25
        assert case2_inequality(5, 0)          # 0 <= 22
        assert not case2_inequality(7, 1)      # 27 > 26

    def test_crossing_length_bound(self):
        assert crossing_length_inequality(4, 1)
        assert not crossing_length_inequality(3, 1)


class TestProp1:
    def test_star_pair(self):
        g, lp, _ = star_setup()
        v = check_prop1(g, Path((1, 0, 2)), Path((2, 0, 3)), longest_paths=lp)
        assert v.status == HOLDS
        assert v.witness["common"] == [0, 2]

    def test_cycle_pair(self):
        g, lp, _ = cycle_setup()
        v = check_prop1(g, lp.paths[0], lp.paths[1], longest_paths=lp)
        assert v.status == HOLDS
        assert len(v.witness["common"]) == 5

    def test_identical_paths_rejected(self):
        g, lp, _ = star_setup()
        with pytest.raises(ValueError):
            check_prop1(g, lp.paths[0], lp.paths[0], longest_paths=lp)

    def test_non_longest_rejected(self):
        g, lp, _ = star_setup()
        with pytest.raises(ValueError):
            check_prop1(g, Path((0, 1)), lp.paths[0], longest_paths=lp)

    def test_every_pair_in_small_corpus(self):
        # Proven statement: any failure is an implementation bug.
        for g in corpus_up_to(5):
            lp = enumerate_longest_paths(g)
            for a, b in combinations(lp.paths, 2):
                assert check_prop1(g, a, b, longest_paths=lp).status == HOLDS


class TestConjectureZ:
    def test_star(self):
        g, lp, t = star_setup()
        v = check_conjecture_z(g, t, longest_paths=lp)
        assert v.status == HOLDS
        assert v.witness["common"] == [0]

    def test_cycle(self):
        g, lp, t = cycle_setup()
        assert check_conjecture_z(g, t, longest_paths=lp).status == HOLDS

    def test_skipped_on_truncated_enumeration(self):
        g = cycle_graph(5)
        lp = enumerate_longest_paths(g, cap=3)
        t = PathTriple(tuple(lp.paths))
        v = check_conjecture_z(g, t, longest_paths=lp)
        assert v.status == SKIPPED_TRUNCATED


class TestLemma21:
    def test_vacuous_at_zero(self):
        g, lp, t = star_setup()
        assert check_lemma21(g, t, longest_paths=lp).status == VACUOUS


class TestLemma22:
    def test_star(self):
        g, lp, t = star_setup()
        v = check_lemma22(g, t, longest_paths=lp)
        assert v.status == HOLDS
        assert v.witness["x_sizes"] == [0, 0, 0]

    def test_cycle(self):
        g, lp, t = cycle_setup()
        assert check_lemma22(g, t, longest_paths=lp).status == HOLDS


class TestLemma23:
    def test_star_holds(self):
        g, lp, t = star_setup()
        assert check_lemma23(g, t, longest_paths=lp).status == HOLDS

    def test_cycle_vacuous(self):
        g, lp, t = cycle_setup()
        assert check_lemma23(g, t, longest_paths=lp).status == VACUOUS


class TestTheorem1:
    def test_star(self):
        g, lp, t = star_setup()
        v = check_theorem1(g, t, longest_paths=lp)
        assert v.status == HOLDS
        assert v.witness == {"n": 4, "f": 0}


class TestCaseBounds:
    def test_cycle_case2(self):
        g, lp, t = cycle_setup()
        v = check_case_bounds(g, t, longest_paths=lp)
        assert v.claim == "case2_bound"
        assert v.status == HOLDS
        assert v.witness["t_min"] == 5
        assert v.witness["proof_internal_length_bound"]["holds"]

    def test_star_vacuous(self):
        g, lp, t = star_setup()
        v = check_case_bounds(g, t, longest_paths=lp)
        assert v.status == VACUOUS
        assert v.witness["t_min"] == 1


class TestConjecture4:
    def test_cycle_vacuous(self):
        g, lp, t = cycle_setup()
        assert check_conjecture4(g, t, longest_paths=lp).status == VACUOUS

    def test_star_vacuous(self):
        g, lp, t = star_setup()
        assert check_conjecture4(g, t, longest_paths=lp).status == VACUOUS


CHECKERS = (
    check_conjecture_z,
    check_lemma21,
    check_lemma22,
    check_lemma23,
    check_theorem1,
    check_case_bounds,
    check_conjecture4,
)


class TestCorpusSweep:
    def test_all_claims_on_all_triples_up_to_five(self):
        # Everything proven holds or is vacuous, the conjectures hold, and
        # the single-crossing implication chain stays consistent.
        triples_seen = 0
        for g in corpus_up_to(5):
            lp = enumerate_longest_paths(g)
            if len(lp.paths) < 3:
                continue
            for combo in combinations(lp.paths, 3):
                triples_seen += 1
                t = PathTriple(combo)
                ana = analyze_triple(g, t)
                statuses = {}
                for chk in CHECKERS:
                    v = chk(g, t, longest_paths=lp, analysis=ana)
                    assert v.status in (HOLDS, VACUOUS), (v.claim, v.witness)
                    statuses[v.claim] = v.status
                if statuses.get("lemma23") == VIOLATED:
                    assert statuses["conj_Z"] == VIOLATED
        assert triples_seen > 35000

    def test_sampled_triples_on_six_and_seven_vertices(self):
        # Triple spaces explode here (K6 alone has 7.7 million), so each
        # graph contributes a deterministic slice; exhaustive coverage at
        # these sizes comes from the scan's common-vertex shortcut.
        import random

        rng = random.Random(7)
        for n in (6, 7):
            for g in corpus(n):
                lp = enumerate_longest_paths(g)
                if len(lp.paths) < 3:
                    continue
                paths = list(lp.paths)
                picks = set()
                for _ in range(10):
                    picks.add(tuple(sorted(rng.sample(range(len(paths)), 3))))
                for idxs in sorted(picks):
                    t = PathTriple(tuple(paths[i] for i in idxs))
                    ana = analyze_triple(g, t)
                    for chk in CHECKERS:
                        v = chk(g, t, longest_paths=lp, analysis=ana)
                        assert v.status in (HOLDS, VACUOUS), (v.claim, v.witness)


class TestGallaiVertexSet:
    def test_star_center(self):
        assert gallai_vertex_set(star_graph(3)) == {0}

    def test_cycle_everything(self):
        assert gallai_vertex_set(cycle_graph(5)) == frozenset(range(5))

    def test_contained_in_every_longest_path(self):
        for g in corpus_up_to(5):
            lp = enumerate_longest_paths(g)
            gal = gallai_vertex_set(g, longest_paths=lp)
            for p in lp.paths:
                assert gal <= p.vertex_set()

    def test_trees_contain_their_centers(self):
        # Eccentricity-minimal vertices of a tree lie on every longest path.
        for n in range(1, 8):
            for g in corpus(n):
                if g.m != g.n - 1:
                    continue
                ecc = []
                for v in range(g.n):
                    dv = distances_from_set(g, [v])
                    ecc.append(max(d for d in dv.dist if d is not None))
                centers = {v for v in range(g.n) if ecc[v] == min(ecc)}
                assert centers <= gallai_vertex_set(g)

    def test_disconnected_rejected(self):
        with pytest.raises(ValueError):
            gallai_vertex_set(from_edge_list(2, []))

    def test_truncated_rejected(self):
        g = cycle_graph(5)
        lp = enumerate_longest_paths(g, cap=2)
        with pytest.raises(TruncatedEnumerationError):
            gallai_vertex_set(g, longest_paths=lp)


class TestHypotraceable:
    def test_star_is_not(self):
        # Deleting the centre disconnects the leaves.
        assert not is_hypotraceable(star_graph(3))

    def test_cycle_is_not(self):
        assert not is_hypotraceable(cycle_graph(5))

    def test_path_is_not(self):
        assert not is_hypotraceable(path_graph(4))

    def test_petersen_is_not(self):
        assert not is_hypotraceable(petersen_graph())

    def test_none_in_small_corpus(self):
        # The smallest graphs with the property are far larger than this.
        for g in corpus_up_to(5):
            assert not is_hypotraceable(g)

    def test_size_limit(self):
        g = from_edge_list(35, [(i, i + 1) for i in range(34)])
        with pytest.raises(ValueError):
            is_hypotraceable(g)

    def test_budget_error(self):
        with pytest.raises(BudgetError):
            is_hypotraceable(star_graph(3), budget_s=-1.0)


class TestClaimRegistry:
    def test_proven_and_conjecture_disjoint(self):
        assert not (PROVEN_CLAIMS & CONJECTURE_CLAIMS)
