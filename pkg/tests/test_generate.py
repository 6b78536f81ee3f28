"""Isomorphism-free exhaustive generation of small connected graphs."""

from itertools import combinations, permutations

import pytest

from conftest import corpus, oracle_isomorphic
from gallai.generate import (
    _canonical_masks,
    _pair_bitpos,
    generate_connected_graphs,
    graph_to_mask,
    mask_to_graph,
)
from gallai.graphs import is_connected, to_graph6


def oracle_min_mask(n: int, mask: int) -> int:
    """Direct minimisation over all relabellings, reimplemented plainly."""
    g = mask_to_graph(n, mask)
    best = mask
    for perm in permutations(range(n)):
        m = 0
        for u, v in g.edges():
            a, b = perm[u], perm[v]
            if a > b:
                a, b = b, a
            m |= 1 << _pair_bitpos(n, a, b)
        best = min(best, m)
    return best


class TestCounts:
    @pytest.mark.parametrize(
        "n,count", [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112)]
    )
    def test_connected_counts(self, n, count):
        assert len(corpus(n)) == count

    def test_connected_count_at_eight(self):
        # The gated largest size; takes ~15s, the count pins completeness.
        assert sum(1 for _ in generate_connected_graphs(8)) == 11117

    @pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)])
    def test_all_graph_counts(self, n, count):
        # Including disconnected graphs, as used by the extension step.
        assert len(_canonical_masks(n)) == count


class TestSoundness:
    def test_all_connected(self):
        for n in range(1, 6):
            for g in corpus(n):
                assert is_connected(g)
                assert g.n == n

    def test_pairwise_non_isomorphic(self):
        for n in range(1, 6):
            graphs = corpus(n)
            for a, b in combinations(graphs, 2):
                assert not oracle_isomorphic(a, b)

    def test_emitted_masks_are_orbit_minima(self):
        for n in range(2, 6):
            for g in corpus(n):
                mask = graph_to_mask(g)
                assert oracle_min_mask(n, mask) == mask

    def test_stream_sorted_by_canonical_mask(self):
        for n in range(1, 7):
            masks = [graph_to_mask(g) for g in corpus(n)]
            assert masks == sorted(masks)

    def test_stream_sorted_by_graph6(self):
        # graph6 records inherit the mask order byte for byte.
        for n in range(1, 7):
            recs = [to_graph6(g) for g in corpus(n)]
            assert recs == sorted(recs)


class TestCompleteness:
    def test_every_four_vertex_graph_is_represented(self):
        # Brute force over all labelled graphs on four vertices: each must
        # be isomorphic to exactly one emitted representative.
        reps = corpus(4)
        for mask in range(1 << 6):
            g = mask_to_graph(4, mask)
            if not is_connected(g):
                continue
            matches = [r for r in reps if oracle_isomorphic(g, r)]
            assert len(matches) == 1


class TestInterface:
    def test_range_validation(self):
        with pytest.raises(ValueError):
            list(generate_connected_graphs(0))
        with pytest.raises(ValueError):
            list(generate_connected_graphs(9))

    def test_mask_round_trip(self):
        for g in corpus(5):
            assert mask_to_graph(g.n, graph_to_mask(g)) == g
