import pytest

from dicuts import oracle
from dicuts.digraph import Digraph, ResourceLimitError, is_p3_free
from dicuts.generators import gen_example1, gen_regular_tournament


def triangle():
    return Digraph(3, [(0, 1), (1, 2), (2, 0)])


class TestMaxDicut:
    def test_triangle(self):
        cert = triangle()
        got = oracle.max_dicut_exact(cert)
        assert got.size == 1

    def test_tournament5(self):
        assert oracle.max_dicut_exact(gen_regular_tournament(2)).size == 3

    def test_example1(self):
        assert oracle.max_dicut_exact(gen_example1(1)).size == 4

    def test_lexicographic_tie_break(self):
        # both {0} and {1} cut one edge of a digon; smallest X wins
        D = Digraph(2, [(0, 1), (1, 0)])
        cert = oracle.max_dicut_exact(D)
        assert cert.size == 1 and cert.X == (0,)

    def test_empty_graph(self):
        cert = oracle.max_dicut_exact(Digraph(3, []))
        assert cert.size == 0 and cert.X == ()

    def test_guard(self):
        with pytest.raises(ResourceLimitError):
            oracle.max_dicut_exact(Digraph(27, []))

    def test_matches_max_p3_free_on_small(self):
        # cut sizes and maximum P3-free subset sizes agree (both directions
        # of the correspondence)
        # digon-free only: a digon is P3-free but no cut contains both sides
        import itertools
        for n in (3, 4):
            pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
            for take in itertools.combinations(pairs, 4):
                if any((v, u) in take for u, v in take):
                    continue
                D = Digraph(n, take)
                best_p3 = max(
                    (len(S) for r in range(len(take) + 1)
                     for S in itertools.combinations(take, r)
                     if is_p3_free(D, S)),
                    default=0)
                assert oracle.max_dicut_exact(D).size == best_p3


class TestTrianglePacking:
    def test_disjoint_triangles(self):
        e = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]
        assert oracle.max_triangle_packing(Digraph(6, e)) == 2

    def test_triangle_free(self):
        assert oracle.max_triangle_packing(Digraph(4, [(0, 1), (1, 2)])) == 0

    def test_example1(self):
        assert oracle.max_triangle_packing(gen_example1(1)) == 2

    def test_sharing_a_vertex(self):
        e = [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]
        assert oracle.max_triangle_packing(Digraph(5, e)) == 1


class TestMinRemoval:
    def test_already_below(self):
        D = Digraph(3, [(0, 1), (0, 2)])
        assert oracle.min_removal_exact(D, 2) == frozenset()

    def test_triangle_needs_two(self):
        # removing one edge leaves a 2-path whose middle vertex has
        # in-degree 1 and out-degree 1, outside D(0,0)
        assert len(oracle.min_removal_exact(triangle(), 1)) == 2

    def test_tournament5(self):
        D = gen_regular_tournament(2)
        R = oracle.min_removal_exact(D, 2)
        assert len(R) == 3
        rest = D.without_edges(R)
        assert all(rest.in_deg(v) <= 1 or rest.out_deg(v) <= 1
                   for v in range(5))

    def test_tournament7(self):
        assert len(oracle.min_removal_exact(gen_regular_tournament(3), 3)) == 4


class TestCutCover:
    def test_single_cut(self):
        D = Digraph(4, [(0, 2), (0, 3), (1, 3)])
        res = oracle.decompose_into_cuts(D, 1)
        assert res is not None and len(res) == 1
        assert set(res[0].cut_edges) == set(D.edges)

    def test_tournament_needs_four(self):
        T5 = gen_regular_tournament(2)
        assert oracle.decompose_into_cuts(T5, 3) is None
        res = oracle.decompose_into_cuts(T5, 4)
        assert res is not None
        covered = set()
        for c in res:
            c.verify(T5)
            covered |= set(c.cut_edges)
        assert covered == set(T5.edges)

    def test_guard(self):
        with pytest.raises(ResourceLimitError):
            oracle.decompose_into_cuts(Digraph(11, []), 2)
