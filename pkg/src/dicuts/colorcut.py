"""Coloring-based directed cuts: the balanced-class counting bound, the
acyclic D(k,k) algorithm, and the 3m/10 algorithm for all of D(2,2)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .digraph import (
    AlgorithmBugError,
    CutCertificate,
    Digraph,
    Edge,
    InputError,
    PreconditionError,
    class_partition,
    cut_from_partition,
    extend_p3free_to_cut,
    is_p3_free,
)


@dataclass(frozen=True)
class Coloring:
    """Proper vertex coloring of an undirected graph with colors 0..gamma-1."""

    colors: tuple[int, ...]
    gamma: int


def _underlying_adj(n: int, und_edges) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in und_edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def degeneracy_order(n: int, und_edges) -> tuple[list[int], int]:
    """Remove a minimum-degree vertex repeatedly; returns (order, d) where d
    is the largest degree seen at removal time.  Greedy coloring along the
    reverse order needs at most d+1 colors."""
    adj = _underlying_adj(n, und_edges)
    deg = [len(a) for a in adj]
    alive = set(range(n))
    order = []
    d = 0
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        d = max(d, deg[v])
        order.append(v)
        alive.discard(v)
        for w in adj[v]:
            if w in alive:
                deg[w] -= 1
    return order, d


def greedy_color(n: int, und_edges, order: list[int]) -> Coloring:
    """Color in reverse `order`; each vertex takes the least color unused by
    already-colored neighbors."""
    adj = _underlying_adj(n, und_edges)
    colors = [-1] * n
    for v in reversed(order):
        used = {colors[w] for w in adj[v] if colors[w] >= 0}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    gamma = max(colors, default=-1) + 1
    return Coloring(tuple(colors), max(gamma, 1) if n else 0)


def best_balanced_class_bipartition(
    coloring: Coloring, n: int, und_edges
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split the color classes into groups of floor(gamma/2) and the rest so
    that the number of crossing edges is maximum; the average over all such
    splits already crosses (floor(gamma^2/4) / C(gamma,2)) * m edges."""
    gamma = coloring.gamma
    if gamma < 2:
        raise InputError("need at least two color classes")
    adj_pairs = []
    for u, v in und_edges:
        cu, cv = coloring.colors[u], coloring.colors[v]
        if cu == cv:
            raise InputError("coloring is not proper")
        adj_pairs.append((cu, cv))
    best = None
    best_group = None
    for group in combinations(range(gamma), gamma // 2):
        gs = set(group)
        crossing = sum(1 for cu, cv in adj_pairs if (cu in gs) != (cv in gs))
        if best is None or crossing > best:
            best = crossing
            best_group = gs
    m = len(adj_pairs)
    need = Fraction((gamma * gamma // 4) * m, comb(gamma, 2))
    if best < need:
        raise AlgorithmBugError(
            f"balanced split crosses {best} < guaranteed {need}")
    S = tuple(v for v in range(n) if coloring.colors[v] in best_group)
    T = tuple(v for v in range(n) if coloring.colors[v] not in best_group)
    return S, T


def _better_oriented_cut(D: Digraph, S) -> CutCertificate:
    a = cut_from_partition(D, S)
    b = cut_from_partition(D, [v for v in range(D.n) if v not in set(S)])
    return a if a.size >= b.size else b


def dicut_acyclic(D: Digraph, k: int) -> CutCertificate:
    """A directed cut of size >= (k+1)m/(4k+2) for acyclic D in D(k,k).

    Both sides of the degree witness induce k-degenerate underlying graphs,
    so 2k+2 colors suffice; a best balanced class split then donates at
    least half of its crossing edges to one orientation.
    """
    if not D.is_acyclic():
        raise PreconditionError("digraph is not acyclic")
    if class_partition(D, k, k) is None:
        raise PreconditionError(f"digraph is not in D({k},{k})")
    X = [v for v in range(D.n) if D.out_deg(v) <= k]
    Y = [v for v in range(D.n) if v not in set(X)]
    colors = [-1] * D.n
    offset = 0
    for side in (X, Y):
        ss = set(side)
        sub_edges = [(u, v) for u, v in D.edges if u in ss and v in ss]
        sub, remap = _relabel(side, sub_edges)
        order, d = degeneracy_order(len(side), sub)
        if d > k:
            raise AlgorithmBugError(f"side degeneracy {d} exceeds {k}")
        col = greedy_color(len(side), sub, order)
        for i, v in enumerate(sorted(ss)):
            colors[v] = offset + col.colors[i]
        offset += k + 1
    und = [(u, v) for u, v in D.edges]
    for u, v in und:
        if colors[u] == colors[v]:
            raise AlgorithmBugError("combined coloring is not proper")
    gamma = 2 * k + 2
    full = Coloring(tuple(colors), gamma)
    S, _ = best_balanced_class_bipartition(full, D.n, und)
    cert = _better_oriented_cut(D, S)
    if (4 * k + 2) * cert.size < (k + 1) * D.m:
        raise AlgorithmBugError("acyclic cut misses its guarantee")
    return cert


def _relabel(side: list[int], edges) -> tuple[list[Edge], dict[int, int]]:
    remap = {v: i for i, v in enumerate(sorted(side))}
    return [(remap[u], remap[v]) for u, v in edges], remap


@dataclass(frozen=True)
class CyclePeelStep:
    """One recursion step: an undirected cycle of the (X, Y; F) bipartite
    graph, its cycle edges F_C (all oriented X -> Y), and the side edges E_C
    (head in X_C or tail in Y_C) deleted alongside."""

    X_C: tuple[int, ...]
    Y_C: tuple[int, ...]
    F_C: tuple[Edge, ...]
    E_C: tuple[Edge, ...]


def dicut_d22(
    D: Digraph, steps: list[CyclePeelStep] | None = None
) -> CutCertificate:
    """A directed cut of size >= 3m/10 for any D in D(2,2).

    Recursion: while the bipartite graph of X->Y edges has a cycle, bank the
    cycle edges (P3-free after deleting their in/out neighborhoods) and
    recurse; the base case is 5-degenerate, 6-colorable, and a balanced
    class split gives 3m/5 bichromatic edges, half of them oriented one way.
    """
    part = class_partition(D, 2, 2)
    if part is None:
        raise PreconditionError("digraph is not in D(2,2)")
    S = _d22_p3free(D, steps)
    if not is_p3_free(D, S):
        raise AlgorithmBugError("banked edge set lost P3-freeness")
    cert = extend_p3free_to_cut(D, S)
    if 10 * cert.size < 3 * D.m:
        raise AlgorithmBugError("3m/10 guarantee missed")
    return cert


def _d22_p3free(D: Digraph, steps: list[CyclePeelStep] | None) -> set[Edge]:
    part = class_partition(D, 2, 2)
    if part is None:
        raise AlgorithmBugError("recursion left D(2,2)")
    X, Y = set(part.X), set(part.Y)
    F = [e for e in D.edges if e[0] in X and e[1] in Y]
    cyc = _bipartite_cycle(D.n, F)
    if cyc is None:
        return _d22_base(D, X, F)
    X_C = sorted(set(cyc) & X)
    Y_C = sorted(set(cyc) & Y)
    F_C = _cycle_edge_list(cyc, F)
    E_C = sorted(
        e for e in D.edges
        if e not in F_C and (e[1] in set(X_C) or e[0] in set(Y_C)))
    if steps is not None:
        steps.append(CyclePeelStep(tuple(X_C), tuple(Y_C),
                                   tuple(sorted(F_C)), tuple(E_C)))
    rest = D.without_edges(set(F_C) | set(E_C))
    S = _d22_p3free(rest, steps)
    S.update(F_C)
    return S


def _cycle_edge_list(cyc: list[int], F) -> set[Edge]:
    fs = set(F)
    out = set()
    for i, v in enumerate(cyc):
        w = cyc[(i + 1) % len(cyc)]
        if (v, w) in fs:
            out.add((v, w))
        elif (w, v) in fs:
            out.add((w, v))
        else:
            raise AlgorithmBugError("cycle edge missing from F")
    return out


def _bipartite_cycle(n: int, F) -> list[int] | None:
    """Shortest undirected cycle of the graph with edge set F, by BFS from
    every vertex; None when F is a forest."""
    adj = _underlying_adj(n, F)
    best = None
    for s in range(n):
        if not adj[s]:
            continue
        parent = {s: -1}
        dist = {s: 0}
        queue = [s]
        qi = 0
        while qi < len(queue):
            v = queue[qi]
            qi += 1
            for w in sorted(adj[v]):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w:
                    path_v = []
                    x = v
                    while x != -1:
                        path_v.append(x)
                        x = parent[x]
                    path_w = []
                    x = w
                    while x not in path_v:
                        path_w.append(x)
                        x = parent[x]
                    join = path_v.index(x)
                    cand = path_v[: join + 1] + list(reversed(path_w))
                    if len(cand) >= 3 and (best is None or len(cand) < len(best)):
                        best = cand
        if best is not None and len(best) == 4:
            break  # bipartite girth floor
    return best


def _d22_base(D: Digraph, X: set[int], F) -> set[Edge]:
    """F is a forest: the whole underlying graph is 5-degenerate; 6-color it
    and take the best balanced class split's better orientation."""
    if D.m == 0:
        return set()
    und = [(u, v) for u, v in D.edges]
    order, d = degeneracy_order(D.n, und)
    if d > 5:
        raise AlgorithmBugError(f"base-case degeneracy {d} exceeds 5")
    col = greedy_color(D.n, und, order)
    if col.gamma < 2:
        return set()
    S, _ = best_balanced_class_bipartition(col, D.n, und)
    cert = _better_oriented_cut(D, S)
    return set(cert.cut_edges)
