"""Loopless digraphs on dense integer vertex ids, and the certificates built on them.

Everything here is an immutable value: algorithms never mutate a digraph, they
build new ones.  All set-like outputs are emitted in ascending order so that
golden tests and the CLI are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

Edge = tuple[int, int]


class InputError(ValueError):
    """Malformed input data (bad file, edge outside the graph, ...)."""


class PreconditionError(ValueError):
    """An operation was called on a digraph outside its declared domain."""


class AlgorithmBugError(AssertionError):
    """An internal construction failed validation; never silently returned."""


class ResourceLimitError(RuntimeError):
    """An exact search exceeded its explicit guard."""


@dataclass(frozen=True)
class Digraph:
    """A digraph without loops or parallel edges on vertices 0..n-1.

    Antiparallel pairs (digons) are representable; operations that need
    digon-free input check for themselves.
    """

    n: int
    edges: tuple[Edge, ...]

    def __init__(self, n: int, edges: Iterable[Edge]):
        edge_tuple = tuple(sorted((int(u), int(v)) for u, v in edges))
        if n < 0:
            raise InputError("vertex count must be non-negative")
        seen = set()
        for u, v in edge_tuple:
            if u == v:
                raise InputError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if (u, v) in seen:
                raise InputError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", edge_tuple)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def succ(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            out[u].append(v)
        return tuple(tuple(sorted(vs)) for vs in out)

    @cached_property
    def pred(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            inc[v].append(u)
        return tuple(tuple(sorted(us)) for us in inc)

    def out_deg(self, v: int) -> int:
        return len(self.succ[v])

    def in_deg(self, v: int) -> int:
        return len(self.pred[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edge_set

    def out_edges(self, v: int) -> list[Edge]:
        return [(v, w) for w in self.succ[v]]

    def in_edges(self, v: int) -> list[Edge]:
        return [(u, v) for u in self.pred[v]]

    def without_edges(self, remove: Iterable[Edge]) -> "Digraph":
        gone = set(remove)
        bad = gone - self.edge_set
        if bad:
            raise InputError(f"edges not in digraph: {sorted(bad)}")
        return Digraph(self.n, [e for e in self.edges if e not in gone])

    def reverse(self) -> "Digraph":
        return Digraph(self.n, [(v, u) for u, v in self.edges])

    def has_digon(self) -> bool:
        return any((v, u) in self.edge_set for u, v in self.edges)

    def induced(self, vertices: Iterable[int]) -> tuple["Digraph", dict[int, int]]:
        """Induced subgraph on `vertices`, relabeled densely.

        Returns the subgraph and the old-id -> new-id map.
        """
        vs = sorted(set(vertices))
        remap = {v: i for i, v in enumerate(vs)}
        edges = [
            (remap[u], remap[v])
            for u, v in self.edges
            if u in remap and v in remap
        ]
        return Digraph(len(vs), edges), remap

    # -- structural queries ------------------------------------------------

    def weak_components(self) -> list[list[int]]:
        """Weakly connected components, each sorted, ordered by least vertex."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            stack, comp = [s], []
            seen[s] = True
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self.succ[v] + self.pred[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_weakly_connected(self) -> bool:
        return len(self.weak_components()) <= 1

    def triangles(self) -> list[tuple[int, int, int]]:
        """All directed 3-cycles, as (a, b, c) with a minimal and a->b->c->a."""
        out = []
        for a in range(self.n):
            for b in self.succ[a]:
                if b < a:
                    continue
                for c in self.succ[b]:
                    if c > a and c != b and (c, a) in self.edge_set:
                        out.append((a, b, c))
        return sorted(out)

    def undirected_cycle(self) -> Optional[list[int]]:
        """Some cycle of the underlying graph as a vertex list, or None.

        A digon counts as a cycle of length 2.
        """
        for u, v in self.edges:
            if (v, u) in self.edge_set:
                return [u, v]
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        color = [0] * self.n
        parent = [-1] * self.n
        for s in range(self.n):
            if color[s]:
                continue
            stack = [(s, -1)]
            while stack:
                v, par = stack.pop()
                if color[v]:
                    continue
                color[v] = 1
                parent[v] = par
                for w in sorted(adj[v]):
                    if w == par:
                        par = -2  # skip the tree edge back exactly once
                        continue
                    if color[w]:
                        # found a cycle: walk both ancestries
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
                        return path_v[: join + 1] + list(reversed(path_w))
                    stack.append((w, v))
        return None

    def is_acyclic(self) -> bool:
        indeg = [self.in_deg(v) for v in range(self.n)]
        queue = [v for v in range(self.n) if indeg[v] == 0]
        done = 0
        while queue:
            v = queue.pop()
            done += 1
            for w in self.succ[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    queue.append(w)
        return done == self.n


@dataclass(frozen=True)
class ClassPartition:
    """Witness that a digraph is in D(k, ell): X covers d- <= k, Y covers d+ <= ell."""

    k: int
    ell: int
    X: tuple[int, ...]
    Y: tuple[int, ...]


@dataclass(frozen=True)
class CutCertificate:
    """A vertex bipartition and the directed cut it induces."""

    X: tuple[int, ...]
    Y: tuple[int, ...]
    cut_edges: tuple[Edge, ...]
    size: int

    def verify(self, D: Digraph) -> None:
        if sorted(self.X + self.Y) != list(range(D.n)) or set(self.X) & set(self.Y):
            raise AlgorithmBugError("X, Y do not partition V")
        xs = set(self.X)
        expect = tuple(sorted(e for e in D.edges if e[0] in xs and e[1] not in xs))
        if expect != self.cut_edges or self.size != len(expect):
            raise AlgorithmBugError("stored cut does not match its partition")


def class_partition(D: Digraph, k: int, ell: int) -> Optional[ClassPartition]:
    """The (X, Y) witness of D in D(k, ell), or None if D is not a member.

    Vertices satisfying both degree bounds go to X.
    """
    if k < 0 or ell < 0:
        raise InputError("k and ell must be non-negative")
    X, Y = [], []
    for v in range(D.n):
        if D.in_deg(v) <= k:
            X.append(v)
        elif D.out_deg(v) <= ell:
            Y.append(v)
        else:
            return None
    return ClassPartition(k, ell, tuple(X), tuple(Y))


def is_p3_free(D: Digraph, S: Iterable[Edge]) -> bool:
    """True iff no two edges of S form a directed path on three distinct vertices."""
    S = set(S)
    bad = S - D.edge_set
    if bad:
        raise InputError(f"edges not in digraph: {sorted(bad)}")
    heads = {}
    for u, v in S:
        heads.setdefault(v, []).append(u)
    for u, v in S:
        # u is the middle vertex of a P3 if some S-edge ends at u
        for w in heads.get(u, ()):
            if w != v:
                return False
    return True


def cut_from_partition(D: Digraph, X: Iterable[int]) -> CutCertificate:
    xs = set(X)
    if any(not 0 <= v < D.n for v in xs):
        raise InputError("vertex outside digraph")
    cut = tuple(sorted(e for e in D.edges if e[0] in xs and e[1] not in xs))
    Y = tuple(v for v in range(D.n) if v not in xs)
    return CutCertificate(tuple(sorted(xs)), Y, cut, len(cut))


def extend_p3free_to_cut(D: Digraph, S: Iterable[Edge]) -> CutCertificate:
    """Grow a P3-free edge set into a full directed cut containing it.

    Tails of S go to X, heads to Y; vertices not touched by S go to Y.
    """
    S = set(S)
    if not is_p3_free(D, S):
        raise PreconditionError("edge set is not P3-free")
    tails = {u for u, _ in S}
    cert = cut_from_partition(D, tails)
    if not S <= set(cert.cut_edges):
        raise AlgorithmBugError("extension dropped an edge of the P3-free set")
    return cert


@dataclass(frozen=True)
class StructuralSummary:
    components: tuple[tuple[int, ...], ...]
    triangles: tuple[tuple[int, int, int], ...]
    some_cycle: Optional[tuple[int, ...]]
    has_digon: bool


def structural_queries(D: Digraph) -> StructuralSummary:
    cyc = D.undirected_cycle()
    return StructuralSummary(
        components=tuple(tuple(c) for c in D.weak_components()),
        triangles=tuple(D.triangles()),
        some_cycle=tuple(cyc) if cyc is not None else None,
        has_digon=D.has_digon(),
    )


# -- .dg text format -------------------------------------------------------

def parse_dg(text: str) -> Digraph:
    """Parse the `.dg` format: comments (#), an `n m` header, then m `u v` lines."""
    lines = [ln for ln in (l.strip() for l in text.splitlines())
             if ln and not ln.startswith("#")]
    if not lines:
        raise InputError("empty .dg input")
    head = lines[0].split()
    if len(head) != 2:
        raise InputError("header must be 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise InputError("non-numeric header") from exc
    if len(lines) - 1 != m:
        raise InputError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise InputError(f"bad edge line: {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise InputError(f"bad edge line: {ln!r}") from exc
        edges.append((u, v))
    return Digraph(n, edges)


def format_dg(D: Digraph, comment: str | None = None) -> str:
    out = []
    if comment:
        for ln in comment.splitlines():
            out.append(f"# {ln}")
    out.append(f"{D.n} {D.m}")
    out.extend(f"{u} {v}" for u, v in D.edges)
    return "\n".join(out) + "\n"


def load_dg(path) -> Digraph:
    with open(path, "r", encoding="ascii") as fh:
        return parse_dg(fh.read())


def save_dg(D: Digraph, path, comment: str | None = None) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_dg(D, comment))
