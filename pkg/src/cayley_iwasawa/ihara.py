"""Artin-Ihara L-functions through the three-term determinant

    h_X(u, psi) = det(I - A_psi u + (D - I) u^2),

the Ihara zeta function, and the identities tying special values at u = 1
to complexities of covers and to the Iwasawa polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexity import complexity_det
from .cyclotomic import CycInt
from .errors import AssumptionViolated, NonRationalProduct, TowerDisconnected
from .iwasawa import voltage_matrix
from .laurent import LaurentPoly, bareiss_det, det_laurent, poly_matrix_det
from .multigraph import Multigraph, matrices, validate_base
from .voltage import VoltageDatum, derived_graph, edge_voltages, tower_connected


@dataclass(frozen=True)
class TwistedAdjacency:
    """A_psi = sum_sigma psi(sigma) A(sigma) for psi(1) = zeta_{l^n}^k on Z/l^n."""

    n: int
    k: int
    modulus: int  # l^n
    counts: tuple  # counts[sigma][i][j] = A(sigma)_{ij}
    matrix: tuple  # CycInt entries in Z[zeta_{l^n}]


def twisted_adjacency(X: Multigraph, d: VoltageDatum, n: int, k: int = 1, basepoints=None) -> TwistedAdjacency:
    """Assemble A(sigma) from the edges of X_n leaving the fibre basepoints.

    ``basepoints[i]`` is the fibre coordinate of w_i (default 0 for all i).
    """
    if n < 1:
        raise ValueError("level must be at least 1")
    if not tower_connected(X, d):
        raise TowerDisconnected("the voltage assignment does not surject onto Z_l")
    q = d.ell ** n
    g = X.vertex_count
    base = [0] * g if basepoints is None else [b % q for b in basepoints]
    alpha = edge_voltages(X, d)
    counts = [[[0] * g for _ in range(g)] for _ in range(q)]
    # the edge (e, base[o]) of X_n runs from w_o to (t, base[o] + alpha) = w_t^sigma
    for e, (o, t) in enumerate(X.edges):
        sigma = (base[o] + alpha[e] - base[t]) % q
        counts[sigma][o][t] += 1
    matrix = tuple(
        tuple(CycInt.from_exponents(q, [(k * s, counts[s][i][j]) for s in range(q) if counts[s][i][j]]) for j in range(g))
        for i in range(g)
    )
    return TwistedAdjacency(n, k % q, q, tuple(tuple(map(tuple, c)) for c in counts), matrix)


def h_poly(X: Multigraph, A) -> list:
    """Ascending u-coefficients of det(I - A u + (D - I) u^2).

    ``A`` is an integer matrix, a TwistedAdjacency, or a matrix of CycInt.
    """
    entries = A.matrix if isinstance(A, TwistedAdjacency) else A
    g = X.vertex_count
    degs = X.degrees
    rows = []
    for i in range(g):
        row = []
        for j in range(g):
            a = entries[i][j]
            a = int(a) if not isinstance(a, CycInt) else a
            p = [1 if i == j else 0, -a, (degs[i] - 1) if i == j else 0]
            while p and p[-1] == 0:
                p.pop()
            row.append(p)
        rows.append(row)
    out = poly_matrix_det(rows)
    return out


def zeta_inverse(X: Multigraph) -> tuple[int, list[int]]:
    """(-chi, h) with zeta_X(u)^-1 = (1 - u^2)^(-chi) h(u)."""
    report = validate_base(X)
    if not report.assumption_ok:
        raise AssumptionViolated("; ".join(report.failures()))
    A, _, _ = matrices(X)
    return -report.euler_characteristic, h_poly(X, A.tolist())


def zeta_inverse_poly(X: Multigraph) -> list[int]:
    """Expanded coefficients of (1 - u^2)^(-chi) h(u)."""
    k, h = zeta_inverse(X)
    out = list(h)
    for _ in range(k):
        nxt = out + [0, 0]
        for i, c in enumerate(out):
            nxt[i + 2] -= c
        out = nxt
    while out and out[-1] == 0:
        out.pop()
    return out


def class_number_check(X: Multigraph) -> bool:
    """h_X'(1) == -2 chi(X) kappa(X)."""
    _, h = zeta_inverse(X)
    deriv = LaurentPoly.make(0, h).derivative()
    chi = validate_base(X).euler_characteristic
    return deriv.evaluate_at(1) == -2 * chi * complexity_det(X)


def h_at_one(X: Multigraph, A: TwistedAdjacency) -> CycInt:
    """h_X(1, psi) = det(D - A_psi)."""
    degs = X.degrees
    q = A.modulus
    g = X.vertex_count
    M = [[(CycInt.const(q, degs[i]) if i == j else CycInt.const(q, 0)) - A.matrix[i][j] for j in range(g)] for i in range(g)]
    return bareiss_det(M, one=CycInt.const(q, 1), zero=CycInt.const(q, 0))


def artin_check(X: Multigraph, d: VoltageDatum, n: int) -> bool:
    """l^n kappa(X_n) == kappa(X) prod over nontrivial psi of h_X(1, psi)."""
    kX = complexity_det(X)
    if n == 0:
        return kX == kX
    q = d.ell ** n
    prod = CycInt.const(q, 1)
    for k in range(1, q):
        prod = prod * h_at_one(X, twisted_adjacency(X, d, n, k))
    if not prod.is_rational():
        raise NonRationalProduct("product of h_X(1, psi) over psi != 1 is irrational")
    kY = complexity_det(derived_graph(X, d, n))
    return q * kY == kX * prod.to_integer()


def special_value_check(X: Multigraph, d: VoltageDatum, n: int, literal: bool = False) -> bool:
    """x^shift det M(x) at x = zeta_{l^n} equals zeta^shift h_X(1, psi_n).

    With A_psi = sum zeta^alpha(e), h_X(1, psi_n) = det M(zeta), i.e. the
    Iwasawa series at T = zeta - 1. ``literal=True`` evaluates at x = 2 - zeta
    (T = 1 - zeta) instead, which does not hold in general.
    """
    if n < 1:
        raise ValueError("level must be at least 1")
    q = d.ell ** n
    zeta = CycInt.zeta(q, 1)
    x = 2 - zeta if literal else zeta
    det = det_laurent(voltage_matrix(X, d))
    shift = -det.low
    D = det.shift(shift)
    lhs = CycInt.const(q, 0)
    for c in reversed(D.coeffs):
        lhs = lhs * x + c
    rhs = x ** shift * h_at_one(X, twisted_adjacency(X, d, n, 1))
    return lhs == rhs
