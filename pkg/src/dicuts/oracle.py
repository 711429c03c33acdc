"""Exact brute-force ground truth at desk scale.

Every guarantee in the library is cross-checked against these: maximum
directed cut by full bipartition enumeration, maximum vertex-disjoint
triangle packing by backtracking, minimum edge removal to a lower degree
class by iterative deepening, and cut-cover search.  Guards are explicit;
exceeding one raises, it never truncates silently.
"""

from __future__ import annotations

from typing import Optional

from .digraph import (
    CutCertificate,
    Digraph,
    Edge,
    PreconditionError,
    ResourceLimitError,
    class_partition,
    cut_from_partition,
)

MAX_DICUT_VERTICES = 26


def max_dicut_exact(D: Digraph, max_n: int = MAX_DICUT_VERTICES) -> CutCertificate:
    """A maximum directed cut, the lexicographically smallest X among maximizers.

    Enumerates bipartitions in Gray-code order so each step updates the cut
    size in O(degree) time.
    """
    if D.n > max_n:
        raise ResourceLimitError(f"n={D.n} exceeds enumeration guard {max_n}")
    n = D.n
    in_x = [False] * n
    size = 0
    best_size = 0
    best_x: tuple[int, ...] = ()

    def flip(v: int) -> None:
        nonlocal size
        if in_x[v]:
            # leaving X: out-edges to Y stop counting, in-edges from X start
            size -= sum(1 for w in D.succ[v] if not in_x[w])
            in_x[v] = False
            size += sum(1 for u in D.pred[v] if in_x[u])
        else:
            size -= sum(1 for u in D.pred[v] if in_x[u])
            in_x[v] = True
            size += sum(1 for w in D.succ[v] if not in_x[w])

    total = 1 << n
    for i in range(1, total + 1):
        if size > best_size or (size == best_size and best_x and
                                tuple(v for v in range(n) if in_x[v]) < best_x):
            best_size = size
            best_x = tuple(v for v in range(n) if in_x[v])
        if i == total:
            break
        flip((i & -i).bit_length() - 1)
    return cut_from_partition(D, best_x)


def max_triangle_packing(D: Digraph, max_triangles: int = 2000) -> int:
    """Maximum number of pairwise vertex-disjoint directed triangles."""
    tris = D.triangles()
    if len(tris) > max_triangles:
        raise ResourceLimitError(
            f"{len(tris)} triangles exceed guard {max_triangles}")
    best = 0
    used: set[int] = set()

    def rec(i: int, count: int) -> None:
        nonlocal best
        best = max(best, count)
        if count + (len(tris) - i) <= best:
            return
        for j in range(i, len(tris)):
            tri = tris[j]
            if used.isdisjoint(tri):
                used.update(tri)
                rec(j + 1, count + 1)
                used.difference_update(tri)
        return

    rec(0, 0)
    return best


def min_removal_exact(D: Digraph, k: int,
                      max_edges: int = 40) -> frozenset[Edge]:
    """Smallest R with D \\ R in D(k-1, k-1).

    Iterative deepening; branches on the edges incident to a violating
    vertex, so the depth never exceeds the answer.
    """
    if k < 1:
        raise PreconditionError("k must be >= 1")
    if class_partition(D, k, k) is None:
        raise PreconditionError(f"digraph is not in D({k},{k})")
    if D.m > max_edges:
        raise ResourceLimitError(f"m={D.m} exceeds guard {max_edges}")

    def violator(removed: set[Edge]) -> Optional[int]:
        for v in range(D.n):
            din = sum(1 for u in D.pred[v] if (u, v) not in removed)
            dout = sum(1 for w in D.succ[v] if (v, w) not in removed)
            if din > k - 1 and dout > k - 1:
                return v
        return None

    def search(removed: set[Edge], budget: int) -> Optional[frozenset[Edge]]:
        v = violator(removed)
        if v is None:
            return frozenset(removed)
        if budget == 0:
            return None
        for e in D.in_edges(v) + D.out_edges(v):
            if e in removed:
                continue
            removed.add(e)
            res = search(removed, budget - 1)
            removed.discard(e)
            if res is not None:
                return res
        return None

    for budget in range(D.m + 1):
        res = search(set(), budget)
        if res is not None:
            return res
    raise AssertionError("unreachable: removing all edges always works")


def decompose_into_cuts(D: Digraph, c: int, max_n: int = 10,
                        max_cuts: int = 4) -> Optional[list[CutCertificate]]:
    """c directed cuts covering E(D) (assign each edge to the first cut that
    contains it to read the result as a partition), or None if no such cover
    exists within the guard."""
    if D.n > max_n or c > max_cuts:
        raise ResourceLimitError(
            f"n={D.n}, c={c} exceeds guard n<={max_n}, c<={max_cuts}")
    n = D.n
    edge_list = list(D.edges)

    def cut_mask(xmask: int) -> int:
        mask = 0
        for i, (u, v) in enumerate(edge_list):
            if (xmask >> u) & 1 and not (xmask >> v) & 1:
                mask |= 1 << i
        return mask

    all_masks = [cut_mask(x) for x in range(1 << n)]
    full = (1 << len(edge_list)) - 1

    chosen: list[int] = []

    def rec(covered: int, depth: int) -> bool:
        if covered == full:
            return True
        if depth == c:
            return False
        # first uncovered edge; only bipartitions cutting it are candidates
        unc = ~covered & full
        idx = (unc & -unc).bit_length() - 1
        u, v = edge_list[idx]
        for x in range(1 << n):
            if (x >> u) & 1 and not (x >> v) & 1:
                chosen.append(x)
                if rec(covered | all_masks[x], depth + 1):
                    return True
                chosen.pop()
        return False

    if not rec(0, 0):
        return None
    certs = [cut_from_partition(D, [v for v in range(n) if (x >> v) & 1])
             for x in chosen]
    while len(certs) < c:
        certs.append(cut_from_partition(D, []))
    return certs
