import math
import random

import pytest

from dicuts import oracle
from dicuts.d11 import (
    contraction_graph,
    dicut_d11,
    dicut_d11_connected,
    find_reducing_pair,
    find_triangle_reduction,
    is_triangle_forest,
    plus_minus,
    validate_reducing_pair,
)
from dicuts.digraph import (
    AlgorithmBugError,
    Digraph,
    PreconditionError,
    is_p3_free,
)
from dicuts.generators import gen_example1, gen_random_family


def bound_ok(D, cert):
    t = oracle.max_triangle_packing(D)
    return cert.size >= math.ceil((2 * D.m - t) / 5)


class TestPreconditions:
    def test_rejects_digon(self):
        with pytest.raises(PreconditionError):
            dicut_d11(Digraph(2, [(0, 1), (1, 0)]))

    def test_rejects_outside_class(self):
        D = Digraph(4, [(0, 3), (1, 3), (3, 1), (3, 2)])
        with pytest.raises(PreconditionError):
            dicut_d11(D)

    def test_plus_minus(self):
        D = Digraph(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
        pm = plus_minus(D)
        assert pm.V_plus == (0,) and pm.V_minus == (3,) and pm.V_zero == (1, 2)


class TestTriangleReduction:
    def test_finds_reducible_edge(self):
        # pendant triangle: the edge into the pendant tail qualifies
        D = Digraph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (4, 0)])
        hit = find_triangle_reduction(D)
        assert hit is not None
        (x, y), tri = hit
        assert D.in_deg(x) == 1 and D.out_deg(y) == 1

    def test_none_when_triangle_saturated(self):
        # every triangle vertex has out-degree 2: no edge qualifies
        e = [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5)]
        assert find_triangle_reduction(Digraph(6, e)) is None


# one hand-built instance per reducing-pair pattern, chosen so that all
# earlier patterns in the scan order stay silent
PATTERN_INSTANCES = {
    "leaf-in-minus": Digraph(7, [(6, 0), (0, 4), (1, 4), (2, 5), (3, 5),
                                 (4, 5)]),
    "even-cycle": Digraph(8, [(i, (i + 1) % 4) for i in range(4)]
                          + [(i, 4 + i) for i in range(4)]),
    "v0-attach-with-inedge": Digraph(9, [(0, 1), (1, 2), (2, 0)]
                                     + [(3 + i, i) for i in range(3)]
                                     + [(6 + i, 3 + i) for i in range(3)]),
    "v0-attach-source": Digraph(6, [(0, 1), (1, 2), (2, 0)]
                                + [(3 + i, i) for i in range(3)]),
    "path-or-cycle": Digraph(9, [(i, (i + 1) % 9) for i in range(9)]),
    "multiedge-in-M": Digraph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5),
                                  (5, 3), (0, 3), (1, 4), (2, 5)]),
}


def _gamma_instance():
    edges = []
    for i in range(3):
        p = [3 * i, 3 * i + 1, 3 * i + 2]
        z = [9 + 3 * i, 9 + 3 * i + 1, 9 + 3 * i + 2]
        edges += [(p[0], p[1]), (p[1], p[2]), (p[2], p[0])]
        edges += [(z[0], z[1]), (z[1], z[2]), (z[2], z[0])]
    for i in range(3):
        for j in range(3):
            edges.append((3 * i + j, 9 + 3 * j + i))
    return Digraph(18, edges)


PATTERN_INSTANCES["gamma-cycle"] = _gamma_instance()


class TestReducingPairs:
    @pytest.mark.parametrize("tag", sorted(PATTERN_INSTANCES))
    def test_pattern_fires_and_validates(self, tag):
        D = PATTERN_INSTANCES[tag]
        rp = find_reducing_pair(D)
        assert rp.provenance == tag
        validate_reducing_pair(D, rp.A, rp.B, tag)  # idempotent re-check

    @pytest.mark.parametrize("tag", sorted(PATTERN_INSTANCES))
    def test_pattern_instance_meets_bound(self, tag):
        D = PATTERN_INSTANCES[tag]
        cert = dicut_d11(D)
        cert.verify(D)
        assert bound_ok(D, cert)

    def test_contraction_graph_on_gamma_instance(self):
        D = _gamma_instance()
        pm = plus_minus(D)
        M = contraction_graph(D, set(pm.V_plus), set(pm.V_minus))
        assert len(M.plus_cycles) == 3 and len(M.minus_cycles) == 3
        assert len(M.links) == 9
        cyc_of = M.cycle_of()
        # every link goes from a contracted plus-cycle to a minus-cycle
        assert all(cyc_of[u][0] == "+" and cyc_of[v][0] == "-"
                   for u, v in M.links)

    def test_validator_rejects_bad_pair(self):
        D = Digraph(3, [(0, 1), (1, 2)])
        with pytest.raises(AlgorithmBugError):
            validate_reducing_pair(D, frozenset(D.edges), frozenset(), "bad")

    def test_validator_rejects_oversized_b(self):
        D = Digraph(4, [(0, 1), (2, 3), (1, 2)])
        with pytest.raises(AlgorithmBugError):
            validate_reducing_pair(
                D, frozenset([(0, 1)]),
                frozenset([(2, 3), (1, 2)]), "too-big")


class TestBound:
    def test_small_shapes(self):
        for edges, n in [
            ([(0, 1), (1, 2), (2, 0)], 3),          # triangle
            ([(i, (i + 1) % 5) for i in range(5)], 5),
            ([(i, (i + 1) % 7) for i in range(7)], 7),
            ([(0, 1)], 2),
        ]:
            D = Digraph(n, edges)
            cert = dicut_d11(D)
            cert.verify(D)
            assert bound_ok(D, cert)

    def test_example1_chain(self):
        for k in (1, 2, 3):
            D = gen_example1(k)
            cert = dicut_d11(D)
            assert bound_ok(D, cert)
            assert cert.size <= 3 * k + 1

    def test_random_instances(self):
        rng = random.Random(5)
        for _ in range(120):
            D = gen_random_family("d11", rng.randint(3, 12), 1,
                                  rng.randrange(1 << 30))
            trace = []
            cert = dicut_d11(D, trace)
            cert.verify(D)
            assert bound_ok(D, cert)
            for tag, a_size, b_size, A in trace:
                assert is_p3_free(D, A)


class TestTriangleForest:
    def forest(self, t):
        # chain of t triangles, bridge from each apex to the next tail
        edges = []
        for i in range(t):
            a = 3 * i
            edges += [(a, a + 1), (a + 1, a + 2), (a + 2, a)]
            if i:
                edges.append((a - 2, a))
        return Digraph(3 * t, edges)

    def test_shape_detected(self):
        shape = is_triangle_forest(self.forest(3))
        assert shape is not None
        assert len(shape.triangles) == 3 and len(shape.bridges) == 2

    def test_shape_rejected_on_extra_edge(self):
        D = self.forest(3)
        D2 = Digraph(D.n, list(D.edges) + [(1, 5)])
        assert is_triangle_forest(D2) is None

    def test_connected_bound(self):
        for t in (2, 3, 4):
            D = self.forest(t)
            cert = dicut_d11_connected(D)
            cert.verify(D)
            assert 20 * cert.size >= 7 * D.m

    def test_rejects_lone_triangle(self):
        with pytest.raises(PreconditionError):
            dicut_d11_connected(Digraph(3, [(0, 1), (1, 2), (2, 0)]))

    def test_rejects_disconnected(self):
        D = Digraph(4, [(0, 1), (2, 3)])
        with pytest.raises(PreconditionError):
            dicut_d11_connected(D)

    def test_mirrored_bridge(self):
        # bridge pointing INTO the leaf triangle
        edges = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (3, 0)]
        D = Digraph(6, edges)
        cert = dicut_d11_connected(D)
        assert 20 * cert.size >= 7 * D.m
