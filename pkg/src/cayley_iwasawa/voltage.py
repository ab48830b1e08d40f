"""Integer voltage functions on Cayley generators, derived covers, and
connectivity of the resulting Z_l-towers."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from math import gcd

from .abelian import FiniteAbelianGroup, require_prime
from .errors import AntisymmetryViolated, WalkConditionFails
from .multigraph import Multigraph, spanning_structure


@dataclass(frozen=True)
class VoltageDatum:
    """beta on the ordered generator list S; alpha(g1 -> g2) = beta(g1 - g2)."""

    group: FiniteAbelianGroup
    gens: tuple
    beta: tuple[int, ...]
    ell: int

    def __post_init__(self):
        require_prime(self.ell)
        gens = tuple(self.group.element(s) for s in self.gens)
        if len(gens) != len(self.beta):
            raise ValueError("gens and beta must have the same length")
        if any(not isinstance(b, int) for b in self.beta):
            raise TypeError("beta values must be integers")
        object.__setattr__(self, "gens", gens)
        object.__setattr__(self, "beta", tuple(self.beta))

    @property
    def r(self) -> int:
        return len(self.gens)

    @property
    def beta_map(self) -> dict:
        return dict(zip(self.gens, self.beta))

    def beta_of(self, s) -> int:
        return self.beta_map[self.group.element(s)]

    @property
    def m_beta(self) -> int:
        return max(self.beta)

    @property
    def S_partition(self) -> dict[int, tuple]:
        """j -> S_j = {s : beta(s) = m_beta - j} for j in [0, 2 m_beta]."""
        m = self.m_beta
        return {j: tuple(s for s, b in zip(self.gens, self.beta) if b == m - j) for j in range(2 * m + 1)}

    def scaled(self, c: int) -> "VoltageDatum":
        return VoltageDatum(self.group, self.gens, tuple(c * b for b in self.beta), self.ell)


@dataclass(frozen=True)
class ValidationReport:
    antisymmetric: bool
    integer_valued: bool
    generates_Zl: bool
    walk_condition: bool
    witness: tuple | None  # a tuple (h_1, ..., h_m) whose beta-sum differs mod l from beta of the product
    shortcut: tuple | None  # (h, order of h) when the coprime-order criterion applies
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _walk_witness(d: VoltageDatum):
    """Search reachable (g, t) in G x Z/l, t the running beta-sum mod l, for a
    state with g in S and t != beta(g) mod l; return the generator word."""
    G, ell = d.group, d.ell
    bmap = d.beta_map
    start = (G.identity, 0)
    parent = {start: None}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        g, t = state
        for h, b in zip(d.gens, d.beta):
            nxt = (G.add(g, h), (t + b) % ell)
            if nxt in parent:
                continue
            parent[nxt] = (state, h)
            s, ts = nxt
            if s in bmap and ts != bmap[s] % ell:
                word = []
                cur = nxt
                while parent[cur] is not None:
                    cur, h_step = parent[cur]
                    word.append(h_step)
                return tuple(reversed(word))
            queue.append(nxt)
    return None


def validate_voltage(d: VoltageDatum, strict: bool = True) -> ValidationReport:
    bmap = d.beta_map
    G, ell = d.group, d.ell
    failures = []
    antisym = all(G.neg(s) in bmap and bmap[G.neg(s)] == -b for s, b in bmap.items())
    if not antisym:
        failures.append("antisymmetry fails: beta(-s) != -beta(s)")
    integer_valued = all(isinstance(b, int) for b in d.beta)
    generates = any(b % ell for b in d.beta)
    if not generates:
        failures.append("surjectivity fails: every beta value is divisible by l")
    witness = _walk_witness(d)
    if witness is None:
        failures.append("walk condition fails: every walk ending in S has beta-sum equal to beta of its endpoint mod l")
    shortcut = None
    for h in d.gens:
        M = G.element_order(h)
        if M > 1 and gcd(M, ell) == 1 and bmap[h] % ell:
            shortcut = (h, M)
            break
    report = ValidationReport(antisym, integer_valued, generates, witness is not None, witness, shortcut, failures)
    if strict:
        if not antisym:
            raise AntisymmetryViolated(failures[0])
        if witness is None:
            raise WalkConditionFails("walk condition fails: no walk witnesses a connected tower")
    return report


def edge_voltages(X: Multigraph, d: VoltageDatum) -> tuple[int, ...]:
    """alpha on every directed edge of a Cayley graph built from d.group."""
    bmap = d.beta_map
    G = d.group
    labels = X.labels
    return tuple(bmap[G.sub(labels[o], labels[t])] for o, t in X.edges)


def derived_graph(X: Multigraph, d: VoltageDatum, n: int, alpha=None) -> Multigraph:
    """Cover with vertices V x Z/l^n; edge (e, s) runs from (o(e), s) to (t(e), s + alpha(e))."""
    if n < 0:
        raise ValueError("level must be nonnegative")
    alpha = edge_voltages(X, d) if alpha is None else alpha
    q = d.ell ** n
    edges, inv = [], []
    for e, (o, t) in enumerate(X.edges):
        a = alpha[e]
        ie = X.inversion[e]
        for s in range(q):
            edges.append((o * q + s, t * q + (s + a) % q))
            inv.append(ie * q + (s + a) % q)
    labels = tuple((v, s) for v in range(X.vertex_count) for s in range(q))
    return Multigraph(X.vertex_count * q, tuple(edges), tuple(inv), labels)


def cycle_voltages(X: Multigraph, alpha) -> list[int]:
    _, cycles = spanning_structure(X)
    return [sum(alpha[e] for e in c) for c in cycles]


def tower_connected(X: Multigraph, d: VoltageDatum) -> bool:
    """The image of pi_1 under alpha is generated by the fundamental-cycle
    voltages; it is all of Z_l iff one of them is an l-adic unit."""
    alpha = edge_voltages(X, d)
    return any(v % d.ell for v in cycle_voltages(X, alpha))
