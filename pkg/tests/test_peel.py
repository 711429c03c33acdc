import random

import pytest

from dicuts import oracle
from dicuts.digraph import Digraph, PreconditionError, class_partition, is_p3_free
from dicuts.generators import gen_random_family, gen_regular_tournament
from dicuts.peel import (
    RemovalState,
    find_improvement,
    initial_removal,
    peel_to_lower_class,
    vertex_coloring,
)


class TestColoring:
    def test_white_black_cover(self):
        D = gen_regular_tournament(2)
        col = vertex_coloring(D, 2)
        assert col.white | col.black == set(range(5))

    def test_colors_from_original(self):
        # vertex 0: in 0 <= 1 so white; out 2 > 1 so not black
        D = Digraph(3, [(0, 1), (0, 2)])
        col = vertex_coloring(D, 1)
        assert 0 in col.white and 0 not in col.black


class TestInitialRemoval:
    def test_already_member_empty(self):
        D = Digraph(3, [(0, 1), (0, 2)])
        st = initial_removal(D, 2)
        assert st.R == set()

    def test_triangle_feasible(self):
        D = Digraph(3, [(0, 1), (1, 2), (2, 0)])
        st = initial_removal(D, 1)
        assert len(st.R) <= 3  # feasibility is asserted inside

    def test_tournament_feasible(self):
        st = initial_removal(gen_regular_tournament(2), 2)
        assert len(st.R) <= 10


class TestMoves:
    def test_m0_fires_on_returnable_edge(self):
        # an edge removed for no reason has no critical endpoint
        D = Digraph(3, [(0, 1), (0, 2)])
        st = RemovalState(D, 2, {(0, 1)})
        rw = find_improvement(st)
        assert rw is not None and rw.tag == "return-edge"
        st.apply(rw)
        assert st.R == set()

    def test_every_applied_move_decreases_potential(self):
        rng = random.Random(4)
        for _ in range(30):
            D = gen_random_family("dkk", rng.randint(4, 12), 2,
                                  rng.randrange(1 << 30))
            st = initial_removal(D, 2)
            last = st.potential()
            while (rw := find_improvement(st)) is not None:
                st.apply(rw)  # raises if potential fails to drop
                assert st.potential() < last
                last = st.potential()

    def test_inflated_removal_shrinks(self):
        D = gen_regular_tournament(2)
        inflated = set(list(D.edges)[:6])
        st = RemovalState(D, 2, inflated)
        while (rw := find_improvement(st)) is not None:
            st.apply(rw)
        assert len(st.R) <= 4
        assert len(st.R) >= len(oracle.min_removal_exact(D, 2))


class TestPeel:
    def test_rejects_outside_class(self):
        with pytest.raises(PreconditionError):
            peel_to_lower_class(gen_regular_tournament(3), 2)

    @pytest.mark.parametrize("k", [2, 3])
    def test_tournament(self, k):
        D = gen_regular_tournament(k)
        rest, R = peel_to_lower_class(D, k)
        assert class_partition(rest, k - 1, k - 1) is not None
        assert (2 * k + 1) * len(R) <= 2 * D.m
        assert len(R) >= k + 1  # known lower bound for this instance

    def test_k1_gives_p3_free_remainder(self):
        rng = random.Random(6)
        for _ in range(40):
            D = gen_random_family("d11", rng.randint(3, 12), 1,
                                  rng.randrange(1 << 30))
            rest, R = peel_to_lower_class(D, 1)
            assert is_p3_free(D, rest.edges)
            assert 3 * len(R) <= 2 * D.m

    @pytest.mark.parametrize("k", [2, 3])
    def test_random(self, k):
        rng = random.Random(7 + k)
        for _ in range(40):
            D = gen_random_family("dkk", rng.randint(4, 20), k,
                                  rng.randrange(1 << 30))
            rest, R = peel_to_lower_class(D, k)
            assert class_partition(rest, k - 1, k - 1) is not None
            assert (2 * k + 1) * len(R) <= 2 * D.m

    def test_fixpoint_consequences(self):
        # two derived properties of locally optimal removal sets: a black
        # vertex with two or more removed out-edges is never critical, and a
        # removed edge followed by another through a black vertex is critical
        # exactly at its tail
        rng = random.Random(21)
        for k in (2, 3):
            for _ in range(25):
                D = gen_random_family("dkk", rng.randint(4, 16), k,
                                      rng.randrange(1 << 30))
                st = initial_removal(D, k)
                while (rw := find_improvement(st)) is not None:
                    st.apply(rw)
                critR = st.crit_R()
                out_in_R: dict = {}
                heads: dict = {}
                for u, v in st.R:
                    out_in_R[u] = out_in_R.get(u, 0) + 1
                    heads.setdefault(v, []).append((u, v))
                for v in st.coloring.black:
                    if out_in_R.get(v, 0) >= 2:
                        assert v not in critR
                for (y, z) in st.R:
                    if y in st.coloring.black:
                        for e in heads.get(y, []):
                            assert st.crit(e) == frozenset({e[0]})

    def test_member_of_lower_class_untouched(self):
        D = Digraph(4, [(0, 1), (1, 2), (2, 3)])
        rest, R = peel_to_lower_class(D, 2)
        assert R == frozenset()
