"""Multigraphs as (V, E+, incidence, inversion), Cayley graphs, and the
structural data (matrices, spanning trees, fundamental cycles) built on them."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .abelian import FiniteAbelianGroup
from .errors import (
    ContainsIdentity,
    Disconnected,
    DuplicateGenerator,
    InvalidMultigraph,
    NotGenerating,
    NotSymmetric,
)


@dataclass(frozen=True, eq=False)
class Multigraph:
    """Directed edges indexed by id; ``inversion[e]`` is the reverse edge of ``e``.

    ``labels`` optionally names the vertices (group elements for Cayley graphs,
    (base vertex, fibre coordinate) pairs for derived covers).
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    inversion: tuple[int, ...]
    labels: tuple | None = None

    def __post_init__(self):
        n, E, inv = self.vertex_count, self.edges, self.inversion
        if n < 1:
            raise InvalidMultigraph("a multigraph needs at least one vertex")
        if len(inv) != len(E):
            raise InvalidMultigraph("inversion must be defined on every edge")
        for e, (o, t) in enumerate(E):
            if not (0 <= o < n and 0 <= t < n):
                raise InvalidMultigraph(f"edge {e} references a vertex out of range")
            j = inv[e]
            if not 0 <= j < len(E) or j == e or inv[j] != e:
                raise InvalidMultigraph(f"inversion is not a fixed-point-free involution at edge {e}")
            if E[j] != (t, o):
                raise InvalidMultigraph(f"inversion of edge {e} does not swap its endpoints")
        if self.labels is not None and len(self.labels) != n:
            raise InvalidMultigraph("labels must name every vertex")

    @classmethod
    def from_undirected(cls, vertex_count: int, pairs, labels=None) -> "Multigraph":
        """Each (u, v) pair becomes directed edges 2k: u->v and 2k+1: v->u (loops allowed)."""
        edges, inv = [], []
        for k, (u, v) in enumerate(pairs):
            edges += [(u, v), (v, u)]
            inv += [2 * k + 1, 2 * k]
        return cls(vertex_count, tuple(edges), tuple(inv), labels)

    def origin(self, e: int) -> int:
        return self.edges[e][0]

    def target(self, e: int) -> int:
        return self.edges[e][1]

    @cached_property
    def out_edges(self) -> tuple[tuple[int, ...], ...]:
        out = [[] for _ in range(self.vertex_count)]
        for e, (o, _) in enumerate(self.edges):
            out[o].append(e)
        return tuple(tuple(x) for x in out)

    def degree(self, v: int) -> int:
        return len(self.out_edges[v])

    @property
    def degrees(self) -> list[int]:
        return [len(x) for x in self.out_edges]

    @cached_property
    def undirected_representatives(self) -> tuple[int, ...]:
        """Lowest edge id of each inversion orbit (an orientation of the graph)."""
        return tuple(e for e in range(len(self.edges)) if e < self.inversion[e])

    @property
    def undirected_edge_count(self) -> int:
        return len(self.edges) // 2

    def components(self) -> list[list[int]]:
        seen = [False] * self.vertex_count
        comps = []
        for s in range(self.vertex_count):
            if seen[s]:
                continue
            seen[s] = True
            comp, queue = [s], deque([s])
            while queue:
                v = queue.popleft()
                for e in self.out_edges[v]:
                    t = self.edges[e][1]
                    if not seen[t]:
                        seen[t] = True
                        comp.append(t)
                        queue.append(t)
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) == 1


@dataclass(frozen=True)
class BaseReport:
    connected: bool
    min_degree: int
    euler_characteristic: int
    betti: tuple[int, int]
    assumption_ok: bool

    def failures(self) -> list[str]:
        out = []
        if not self.connected:
            out.append("graph is disconnected")
        if self.min_degree < 2:
            out.append(f"a vertex has degree {self.min_degree} < 2")
        if self.euler_characteristic == 0:
            out.append("Euler characteristic is 0 (cycle graph)")
        return out


def build_cayley(group: FiniteAbelianGroup, gens) -> Multigraph:
    """Cay(G, S): an edge g1 -> g2 whenever g1 - g2 lies in S.

    Vertices follow the lexicographic element order of ``group``; edge ids
    follow the lexicographic order of (origin, target).
    """
    S = [group.element(s) for s in gens]
    if not S:
        raise NotGenerating("generator list is empty")
    if len(set(S)) != len(S):
        raise DuplicateGenerator(f"duplicate generators in {S}")
    if group.identity in S:
        raise ContainsIdentity("the identity may not be a generator")
    Sset = set(S)
    missing = [s for s in S if group.neg(s) not in Sset]
    if missing:
        raise NotSymmetric(f"inverses of {missing} are not in S")
    if not group.generates(S):
        raise NotGenerating(f"{S} does not generate {group}")
    elems = group.elements
    edges = []
    for i, g1 in enumerate(elems):
        for j, g2 in enumerate(elems):
            if group.sub(g1, g2) in Sset:
                edges.append((i, j))
    index = {ij: k for k, ij in enumerate(edges)}
    inversion = tuple(index[(j, i)] for i, j in edges)
    return Multigraph(len(elems), tuple(edges), inversion, tuple(elems))


def validate_base(X: Multigraph) -> BaseReport:
    b0 = len(X.components())
    connected = b0 == 1
    chi = X.vertex_count - X.undirected_edge_count
    b1 = X.undirected_edge_count - X.vertex_count + b0
    min_deg = min(X.degrees)
    ok = connected and min_deg >= 2 and chi != 0
    return BaseReport(connected, min_deg, chi, (b0, b1), ok)


def matrices(X: Multigraph) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(A, D, Q = D - A); A counts directed edges, so a loop adds 2 on the diagonal."""
    n = X.vertex_count
    A = np.zeros((n, n), dtype=np.int64)
    for o, t in X.edges:
        A[o, t] += 1
    D = np.diag(np.array(X.degrees, dtype=np.int64))
    return A, D, D - A


def spanning_structure(X: Multigraph, root: int = 0) -> tuple[frozenset, list[tuple[int, ...]]]:
    """BFS spanning tree (lowest edge id first) and one fundamental cycle at the
    root per non-tree undirected edge, each a closed walk of directed edge ids."""
    parent_edge: dict[int, int] = {root: -1}
    queue = deque([root])
    tree = set()
    while queue:
        v = queue.popleft()
        for e in X.out_edges[v]:
            t = X.edges[e][1]
            if t not in parent_edge:
                parent_edge[t] = e
                tree.add(e)
                tree.add(X.inversion[e])
                queue.append(t)
    if len(parent_edge) != X.vertex_count:
        raise Disconnected("graph is disconnected")

    def path_from_root(v: int) -> list[int]:
        path = []
        while parent_edge[v] != -1:
            e = parent_edge[v]
            path.append(e)
            v = X.edges[e][0]
        return path[::-1]

    cycles = []
    for e in X.undirected_representatives:
        if e in tree:
            continue
        o, t = X.edges[e]
        back = [X.inversion[d] for d in reversed(path_from_root(t))]
        cycles.append(tuple(path_from_root(o) + [e] + back))
    return frozenset(tree), cycles
