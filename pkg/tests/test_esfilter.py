import math
from fractions import Fraction

import pytest

from cliquesub.esfilter import es_filter
from cliquesub.graphs import induced, new_graph, vertex_mask
from cliquesub.oracles import alpha_exact
from conftest import random_graph


def exact_instance(rng, n):
    """Random graph with its exact maximum independent set and the vertices
    outside it, ready for filtering."""
    g = random_graph(rng, n)
    res = alpha_exact(g)
    assert res.exact
    i_set = res.witness
    rest = [v for v in range(g.n) if v not in set(i_set)]
    return g, i_set, rest


class TestEsFilter:
    def test_d_one_single_bucket(self, rng):
        g, i_set, rest = exact_instance(rng, 10)
        out = es_filter(g, i_set, rest, 1)
        assert out == tuple(sorted(rest))

    def test_pigeonhole_instance(self):
        # |I| = 4, d = 1/2, 60 outside vertices each adjacent to <= 2 of I:
        # at most C(4,2) = 6 buckets so the largest has >= 10 members,
        # comfortably above (e/d)^(-d*alpha) * 60 ~ 2.03
        edges = []
        for v in range(4, 64):
            a = (v * 7) % 4
            b = (v * 3 + 1) % 4
            edges.append((v, a))
            if b != a:
                edges.append((v, b))
        g = new_graph(64, edges)
        i_set = (0, 1, 2, 3)
        out = es_filter(g, i_set, range(4, 64), 0.5)
        assert len(out) >= 10
        assert len(out) >= (math.e / 0.5) ** (-0.5 * 4) * 60

    def test_cap_violation_names_vertex(self):
        g = new_graph(5, [(4, 0), (4, 1), (4, 2)])
        with pytest.raises(ValueError, match="vertex 4"):
            es_filter(g, (0, 1, 2, 3), (4,), 0.5)

    def test_dependent_set_rejected(self):
        g = new_graph(4, [(0, 1)])
        with pytest.raises(ValueError, match="not independent"):
            es_filter(g, (0, 1), (2,), 0.5)

    def test_overlap_rejected(self):
        g = new_graph(4, [])
        with pytest.raises(ValueError, match="overlaps"):
            es_filter(g, (0, 1), (1, 2), 0.5)

    def test_size_and_independence_drop(self, rng):
        # the two lemma conclusions on random exact instances
        ran = 0
        while ran < 400:
            g, i_set, rest = exact_instance(rng, rng.randint(4, 12))
            alpha = len(i_set)
            d = rng.choice((0.3, 0.5, 0.7))
            cap = Fraction(d) * alpha
            v1 = [
                v
                for v in rest
                if (g.rows[v] & vertex_mask(i_set)).bit_count() <= cap
            ]
            if not v1:
                continue
            out = es_filter(g, i_set, v1, d)
            assert len(out) >= (math.e / d) ** (-d * alpha) * len(v1) - 1e-9
            sub, _ = induced(g, out)
            assert alpha_exact(sub).value <= int(Fraction(d) * alpha)
            ran += 1

    def test_extension_argument(self, rng):
        # independent subsets of the bucket extend by the untouched part of I
        ran = 0
        while ran < 150:
            g, i_set, rest = exact_instance(rng, rng.randint(4, 11))
            alpha = len(i_set)
            d = 0.5
            cap = Fraction(1, 2) * alpha
            v1 = [
                v
                for v in rest
                if (g.rows[v] & vertex_mask(i_set)).bit_count() <= cap
            ]
            if not v1:
                continue
            out = es_filter(g, i_set, v1, d)
            if not out:
                continue
            sub_u, _ = induced(g, out)
            a_u = alpha_exact(sub_u).value
            ambient, _ = induced(g, list(v1) + list(i_set))
            a_ambient = alpha_exact(ambient).value
            assert a_u + (alpha - int(cap)) <= a_ambient
            ran += 1

    def test_empty_v1(self, rng):
        g, i_set, _ = exact_instance(rng, 8)
        assert es_filter(g, i_set, (), 0.5) == ()

    def test_deterministic(self, rng):
        g, i_set, rest = exact_instance(rng, 12)
        cap = Fraction(1, 2) * len(i_set)
        v1 = [
            v for v in rest if (g.rows[v] & vertex_mask(i_set)).bit_count() <= cap
        ]
        assert es_filter(g, i_set, v1, 0.5) == es_filter(g, i_set, v1, 0.5)
