from fractions import Fraction
from itertools import permutations

import pytest

from cliquesub.drc import (
    DrcCertificate,
    PartitionError,
    PreconditionRefusal,
    count_disjoint_paths4,
    crossing_edges,
    drc_partition,
    drc_select,
    verify_drc_certificate,
)
from cliquesub.graphs import edge_density, gen_gnp, new_graph
from conftest import complete, cycle, empty, random_graph


def brute_max_disjoint_paths4(g, u, v, forbidden=()):
    """Independent oracle: enumerate all length-4 u-v paths, then try every
    packing by recursion."""
    banned = set(forbidden) | {u, v}
    candidates = []
    for a in range(g.n):
        for b in range(g.n):
            for c in range(g.n):
                trio = {a, b, c}
                if len(trio) < 3 or trio & banned:
                    continue
                if g.has_edge(u, a) and g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, v):
                    candidates.append((a, b, c))

    def best(idx, used):
        top = 0
        for i in range(idx, len(candidates)):
            trio = set(candidates[i])
            if trio & used:
                continue
            top = max(top, 1 + best(i + 1, used | trio))
        return top

    return best(0, set())


class TestPartition:
    def test_k4_bound(self):
        v1, v2 = drc_partition(complete(4), seed=0)
        assert len(v1) == 2 and len(v2) == 2
        assert crossing_edges(complete(4), v1, v2) == 4  # >= (1/2)*6 = 3

    def test_empty_graph_any_split(self):
        v1, v2 = drc_partition(empty(6), seed=5)
        assert len(v1) == 3 and crossing_edges(empty(6), v1, v2) == 0

    def test_odd_n_sizes(self):
        v1, v2 = drc_partition(cycle(7), seed=1)
        assert len(v1) == 4 and len(v2) == 3

    def test_deterministic(self):
        g = gen_gnp(100, 0.5, 3)
        assert drc_partition(g, seed=9) == drc_partition(g, seed=9)

    def test_bound_holds_on_randoms(self, rng):
        for _ in range(100):
            g = random_graph(rng, rng.randint(2, 30))
            v1, v2 = drc_partition(g, seed=rng.randrange(1 << 30))
            assert 2 * crossing_edges(g, v1, v2) >= g.m

    def test_small_n_rejected(self):
        with pytest.raises(ValueError, match="n >= 2"):
            drc_partition(empty(1), seed=0)

    def test_partition_error_type_carries_best(self):
        err = PartitionError(3, ((0,), (1,)), 0)
        assert err.best_partition == ((0,), (1,))
        assert err.best_crossing == 0


class TestSelect:
    def test_paper_gate_boundary(self):
        # complete graphs sit exactly on the gate: d=1 so d^2*n = n
        k1599 = complete(1599)
        v1, v2 = drc_partition(k1599, seed=0)
        with pytest.raises(PreconditionRefusal, match="d\\^2 \\* n >= 1600"):
            drc_select(k1599, v1, v2, mode="paper")
        k1600 = complete(1600)
        v1, v2 = drc_partition(k1600, seed=0)
        cert = drc_select(k1600, v1, v2, mode="paper")
        assert isinstance(cert, DrcCertificate)

    def test_practical_mode_runs_below_gate(self):
        g = gen_gnp(60, 0.6, 2)
        v1, v2 = drc_partition(g, seed=0)
        cert = drc_select(g, v1, v2, mode="practical")
        assert len(cert.u_set) >= 1

    def test_complete_graph_no_bad_pairs(self):
        g = complete(1600)
        v1, v2 = drc_partition(g, seed=0)
        cert = drc_select(g, v1, v2, mode="paper")
        assert cert.bad_pair_count == 0
        # U is the ceil(|X|/5) lowest-labelled vertices of X
        want = -(-len(cert.x_set) // 5)
        assert cert.u_set == cert.x_set[:want]
        assert all(ok for _, ok in verify_drc_certificate(g, cert))

    def test_invariants_on_mid_scale_random(self):
        g = gen_gnp(2200, 0.9, 4)  # d^2*n ~ 1780 passes the paper gate
        v1, v2 = drc_partition(g, seed=1)
        cert = drc_select(g, v1, v2, mode="paper")
        d = edge_density(g).fraction
        n = g.n
        assert Fraction(10 * len(cert.x_set)) >= d * n
        assert Fraction(40 * cert.bad_pair_count) <= len(cert.x_set) ** 2
        assert Fraction(50 * len(cert.u_set)) >= d * n
        for name, ok in verify_drc_certificate(g, cert):
            assert ok, name

    def test_deterministic_given_partition(self):
        g = gen_gnp(300, 0.8, 7)
        v1, v2 = drc_partition(g, seed=2)
        a = drc_select(g, v1, v2, mode="practical")
        b = drc_select(g, v1, v2, mode="practical")
        assert a == b

    def test_wrong_partition_rejected(self):
        g = complete(8)
        with pytest.raises(ValueError, match="partition"):
            drc_select(g, (0, 1, 2), (3, 4, 5), mode="practical")

    def test_practical_path_bound_is_measured(self):
        g = gen_gnp(220, 0.85, 3)
        v1, v2 = drc_partition(g, seed=0)
        cert = drc_select(g, v1, v2, mode="practical")
        # every sampled pair must actually achieve the recorded bound
        forb = set(cert.u_set)
        for u in cert.u_set[:4]:
            for v in cert.u_set[4:8]:
                got = count_disjoint_paths4(
                    g, u, v, forb - {u, v}, limit=cert.path_bound
                )
                assert got >= cert.path_bound


class TestCountDisjointPaths:
    def test_single_path(self):
        g = new_graph(5, [(0, 2), (2, 3), (3, 4), (4, 1)])
        assert count_disjoint_paths4(g, 0, 1) == 1

    def test_two_disjoint_then_forbid(self):
        g = new_graph(
            8, [(0, 2), (2, 3), (3, 4), (4, 1), (0, 5), (5, 6), (6, 7), (7, 1)]
        )
        assert count_disjoint_paths4(g, 0, 1) == 2
        assert count_disjoint_paths4(g, 0, 1, [3]) == 1

    def test_c5_adjacent_pair_uses_long_way(self):
        # the only length-4 route between adjacent cycle vertices is the
        # complementary arc
        assert count_disjoint_paths4(cycle(5), 0, 1) == 1

    def test_shared_vertex_blocks_second_path(self):
        # two path templates sharing one interior vertex: answer is 1,
        # strictly below the per-layer flow relaxation
        g = new_graph(
            7,
            [(0, 2), (2, 3), (3, 4), (4, 1), (0, 5), (5, 2), (2, 6), (6, 1)],
        )
        assert brute_max_disjoint_paths4(g, 0, 1) == 1
        assert count_disjoint_paths4(g, 0, 1) == 1

    def test_limit_short_circuits(self):
        g = complete(30)
        assert count_disjoint_paths4(g, 0, 1, limit=3) == 3

    def test_matches_brute_force(self, rng):
        for _ in range(250):
            n = rng.randint(4, 10)
            g = random_graph(rng, n, rng.uniform(0.2, 0.9))
            u, v = rng.sample(range(n), 2)
            forb = [w for w in range(n) if w not in (u, v) and rng.random() < 0.2]
            assert count_disjoint_paths4(g, u, v, forb) == brute_max_disjoint_paths4(
                g, u, v, forb
            )

    def test_endpoint_validations(self):
        g = complete(5)
        with pytest.raises(ValueError, match="differ"):
            count_disjoint_paths4(g, 1, 1)
        with pytest.raises(ValueError, match="forbidden"):
            count_disjoint_paths4(g, 0, 1, [1])
