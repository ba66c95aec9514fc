import pytest

from cliquesub.dense import (
    dense_subset,
    greedy_shrink_trace,
    missing_pair_count,
    peel_sequence,
)
from cliquesub.graphs import induced
from cliquesub.oracles import alpha_exact
from conftest import complete, cycle, empty, random_graph


class TestPeelSequence:
    def test_complete_graph_terminates_immediately(self):
        chain = peel_sequence(complete(8), 0.4)
        assert len(chain) == 1
        assert missing_pair_count(complete(8), chain[0]) == 0

    def test_empty_graph_shrinks_by_rho(self):
        chain = peel_sequence(empty(16), 0.5)
        for before, after in zip(chain, chain[1:]):
            assert len(after) >= 0.5 * len(before)
            assert len(after) < len(before)

    def test_c5_terminal_is_v0(self):
        # every C5 vertex has 2 non-neighbors < 0.5 * 5, so V0 is terminal
        # with 5 missing pairs < 0.5 * 25 / 2
        chain = peel_sequence(cycle(5), 0.5)
        assert chain == [(0, 1, 2, 3, 4)]
        assert missing_pair_count(cycle(5), chain[0]) == 5

    def test_terminal_has_few_missing_pairs(self, rng):
        for _ in range(300):
            g = random_graph(rng, rng.randint(1, 12))
            for rho in (0.3, 0.6):
                term = peel_sequence(g, rho)[-1]
                t = len(term)
                assert missing_pair_count(g, term) < rho * t * t / 2 or t == 1

    def test_chain_length_bounded_by_alpha(self, rng):
        for _ in range(300):
            g = random_graph(rng, rng.randint(1, 10))
            a = alpha_exact(g).value
            for rho in (0.3, 0.6):
                assert len(peel_sequence(g, rho)) - 1 <= max(0, a - 1)

    def test_independence_drops_along_chain(self, rng):
        for _ in range(100):
            g = random_graph(rng, rng.randint(2, 10))
            chain = peel_sequence(g, 0.5)
            alphas = [alpha_exact(induced(g, vs)[0]).value for vs in chain]
            for x, y in zip(alphas, alphas[1:]):
                assert y <= x - 1

    def test_bad_rho(self):
        with pytest.raises(ValueError, match="rho"):
            peel_sequence(cycle(5), 1.0)


class TestDenseSubset:
    def test_whole_clique(self):
        assert dense_subset(complete(10), 0.5, 10) == tuple(range(10))

    def test_clique_prefix_rule(self):
        # terminal clique larger than s: the first s vertices come back
        assert dense_subset(complete(10), 0.5, 4) == (0, 1, 2, 3)

    def test_c5_three_consecutive(self):
        s = dense_subset(cycle(5), 0.5, 3)
        assert missing_pair_count(cycle(5), s) <= 0.5 * 9
        # the greedy shrink keeps three consecutive cycle vertices: 1 missing
        assert missing_pair_count(cycle(5), s) == 1

    def test_bound_on_all_valid_sizes(self, rng):
        import math

        for _ in range(500):
            g = random_graph(rng, rng.randint(1, 10))
            a = alpha_exact(g).value
            for rho in (0.3, 0.6):
                smax = min(g.n, max(1, math.ceil(rho ** (a - 1) * g.n)))
                for s in range(1, smax + 1):
                    out = dense_subset(g, rho, s)
                    assert len(out) == s
                    assert missing_pair_count(g, out) <= rho * s * s

    def test_s_out_of_range(self):
        with pytest.raises(ValueError, match="out of range"):
            dense_subset(cycle(5), 0.5, 0)
        with pytest.raises(ValueError, match="out of range"):
            dense_subset(cycle(5), 0.5, 6)

    def test_invalid_caller_bound_is_input_error(self):
        # s far above ceil(rho^(alpha-1) n) on a sparse graph
        with pytest.raises(ValueError, match="independence bound"):
            dense_subset(empty(10), 0.3, 9)


class TestGreedyShrink:
    def test_missing_counts_consistent(self, rng):
        for _ in range(200):
            g = random_graph(rng, rng.randint(2, 10))
            order, missing = greedy_shrink_trace(g, range(g.n))
            assert missing[g.n] == missing_pair_count(g, range(g.n))
            kept = set(range(g.n))
            for i, v in enumerate(order):
                kept.discard(v)
                assert missing[g.n - 1 - i] == missing_pair_count(g, kept)

    def test_density_monotone(self, rng):
        # density never increases as the greedy shrink deletes
        for _ in range(200):
            g = random_graph(rng, rng.randint(3, 10))
            _, missing = greedy_shrink_trace(g, range(g.n))
            for k in range(3, g.n + 1):
                dk = missing[k] / (k * (k - 1) / 2)
                dk1 = missing[k - 1] / ((k - 1) * (k - 2) / 2) if k > 3 else 0
                if k > 3:
                    assert dk1 <= dk + 1e-12
