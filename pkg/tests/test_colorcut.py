import math
import random
from fractions import Fraction
from math import comb

import pytest

from dicuts import oracle
from dicuts.colorcut import (
    Coloring,
    best_balanced_class_bipartition,
    degeneracy_order,
    dicut_acyclic,
    dicut_d22,
    greedy_color,
)
from dicuts.digraph import Digraph, PreconditionError
from dicuts.generators import gen_random_family, gen_regular_tournament


def transitive(n):
    return Digraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


class TestDegeneracy:
    def test_tree(self):
        edges = [(0, 1), (1, 2), (1, 3), (3, 4)]
        _, d = degeneracy_order(5, edges)
        assert d == 1

    def test_clique(self):
        edges = [(i, j) for i in range(4) for j in range(i + 1, 4)]
        _, d = degeneracy_order(4, edges)
        assert d == 3

    def test_transitive_low_outdegree_side(self):
        D = transitive(6)
        side = [v for v in range(6) if D.out_deg(v) <= 2]
        ss = set(side)
        remap = {v: i for i, v in enumerate(sorted(ss))}
        sub = [(remap[u], remap[v]) for u, v in D.edges
               if u in ss and v in ss]
        _, d = degeneracy_order(len(side), sub)
        assert d <= 2

    def test_greedy_color_uses_d_plus_one(self):
        edges = [(i, j) for i in range(4) for j in range(i + 1, 4)]
        order, d = degeneracy_order(4, edges)
        col = greedy_color(4, edges, order)
        assert col.gamma <= d + 1


class TestBalancedSplit:
    def crossing(self, S, edges):
        ss = set(S)
        return sum(1 for u, v in edges if (u in ss) != (v in ss))

    def test_two_classes_all_crossing(self):
        edges = [(0, 1), (2, 1), (0, 3)]
        col = Coloring((0, 1, 0, 1), 2)
        S, T = best_balanced_class_bipartition(col, 4, edges)
        assert self.crossing(S, edges) == 3

    def test_triangle_three_classes(self):
        edges = [(0, 1), (1, 2), (0, 2)]
        col = Coloring((0, 1, 2), 3)
        S, T = best_balanced_class_bipartition(col, 3, edges)
        assert self.crossing(S, edges) >= 2

    def test_random_meets_counting_bound(self):
        rng = random.Random(9)
        for _ in range(120):
            n = rng.randint(4, 16)
            edges = list({tuple(sorted(rng.sample(range(n), 2)))
                          for _ in range(rng.randint(3, 30))})
            order, d = degeneracy_order(n, edges)
            col = greedy_color(n, edges, order)
            if col.gamma < 2 or col.gamma > 8:
                continue
            S, T = best_balanced_class_bipartition(col, n, edges)
            g, m = col.gamma, len(edges)
            need = Fraction((g * g // 4) * m, comb(g, 2))
            assert self.crossing(S, edges) >= need


class TestAcyclic:
    def test_rejects_cycle(self):
        with pytest.raises(PreconditionError):
            dicut_acyclic(Digraph(3, [(0, 1), (1, 2), (2, 0)]), 1)

    def test_transitive3(self):
        cert = dicut_acyclic(transitive(3), 1)
        assert cert.size >= 1
        assert oracle.max_dicut_exact(transitive(3)).size == 2

    def test_transitive5(self):
        cert = dicut_acyclic(transitive(5), 2)
        assert cert.size >= 3
        assert oracle.max_dicut_exact(transitive(5)).size == 6

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_random(self, k):
        rng = random.Random(10 + k)
        for _ in range(30):
            D = gen_random_family("acyclic-dkk", rng.randint(4, 40), k,
                                  rng.randrange(1 << 30))
            cert = dicut_acyclic(D, k)
            cert.verify(D)
            assert (4 * k + 2) * cert.size >= (k + 1) * D.m


class TestD22:
    def test_tournament5_exact(self):
        cert = dicut_d22(gen_regular_tournament(2))
        assert cert.size == 3

    def test_single_edge(self):
        assert dicut_d22(Digraph(2, [(0, 1)])).size == 1

    def test_rejects_outside_class(self):
        with pytest.raises(PreconditionError):
            dicut_d22(gen_regular_tournament(3))

    def test_peel_steps_recorded(self):
        # double tournament has plenty of X->Y cycles
        from dicuts.generators import gen_example2
        steps = []
        cert = dicut_d22(gen_example2(), steps)
        assert cert.size >= math.ceil(3 * 45 / 10)
        for s in steps:
            assert len(s.F_C) == len(s.X_C) + len(s.Y_C)
            assert not set(s.F_C) & set(s.E_C)

    def test_random_with_digons(self):
        rng = random.Random(12)
        for _ in range(80):
            n = rng.randint(3, 12)
            edges = set()
            for _ in range(3 * n):
                u, v = rng.sample(range(n), 2)
                if (u, v) in edges:
                    continue
                edges.add((u, v))
                D = Digraph(n, edges)
                if any(D.in_deg(x) > 2 and D.out_deg(x) > 2
                       for x in range(n)):
                    edges.discard((u, v))
            D = Digraph(n, edges)
            cert = dicut_d22(D)
            cert.verify(D)
            assert 10 * cert.size >= 3 * D.m
