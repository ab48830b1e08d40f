"""Slow reference computations that share no code with the package.

Each oracle takes plain data (edge lists, integer tuples) and answers with
sympy or brute force, so agreement with the package is evidence rather
than a tautology.
"""

from __future__ import annotations

from itertools import combinations
from math import gcd

import sympy as sp

x, u = sp.symbols("x u")


def spanning_tree_count(n: int, undirected_edges) -> int:
    """Count spanning trees by trying every (n-1)-subset of edges."""
    count = 0
    for subset in combinations(undirected_edges, n - 1):
        parent = list(range(n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        ok = True
        for a, b in subset:
            ra, rb = find(a), find(b)
            if ra == rb:
                ok = False
                break
            parent[ra] = rb
        count += ok
    return count


def laplacian_cofactor(n: int, undirected_edges) -> int:
    Q = sp.zeros(n, n)
    for a, b in undirected_edges:
        if a == b:
            continue
        Q[a, a] += 1
        Q[b, b] += 1
        Q[a, b] -= 1
        Q[b, a] -= 1
    return int(Q[1:, 1:].det())


def cayley_voltage_det(order: int, gens, beta) -> sp.Expr:
    """det(D - sum x^beta(g_i - g_j)) for a cyclic group Z/order, via sympy."""
    bmap = dict(zip([g % order for g in gens], beta))
    r = len(gens)
    M = sp.zeros(order, order)
    for i in range(order):
        for j in range(order):
            s = (i - j) % order
            M[i, j] = (r if i == j else 0) - (x ** bmap[s] if s in bmap else 0)
    return sp.factor(sp.together(M.det(method="berkowitz")))


def laurent_coeffs(expr) -> tuple[int, list[int]]:
    """(low, ascending integer coefficients) of a Laurent polynomial in x."""
    expr = sp.expand(expr)
    num, den = sp.fraction(sp.together(expr))
    shift = sp.degree(den, x)
    lead = sp.Poly(den, x).LC()
    p = sp.Poly(sp.expand(num / lead), x)
    coeffs = [int(c) for c in reversed(p.all_coeffs())]
    low = -shift
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
        low += 1
    return low, coeffs


def ihara_h(n: int, undirected_edges) -> list[int]:
    """Ascending u-coefficients of det(I - A u + (D - I) u^2)."""
    A = sp.zeros(n, n)
    for a, b in undirected_edges:
        A[a, b] += 1
        A[b, a] += 1
    D = sp.diag(*[sum(A[i, j] for j in range(n)) for i in range(n)])
    M = sp.eye(n) - A * u + (D - sp.eye(n)) * u**2
    p = sp.Poly(sp.expand(M.det(method="berkowitz")), u)
    return [int(c) for c in reversed(p.all_coeffs())]


def cyclotomic_norm(coeffs, N: int) -> int:
    """Norm from Q(zeta_N) to Q of sum coeffs[k] zeta^k, by resultant."""
    a = sp.Poly(list(reversed([int(c) for c in coeffs])) or [0], x)
    phi = sp.Poly(sp.cyclotomic_poly(N, x), x)
    return int(sp.resultant(phi, a))


def inert_valuation(coeffs, N: int, ell: int) -> int | None:
    """Normalized valuation (v(l) = e) of an element of Z[zeta_N] when l has a
    single prime above it in Q(zeta_N); the norm then carries it exactly."""
    nrm = cyclotomic_norm(coeffs, N)
    if nrm == 0:
        return None
    m = N
    while m % ell == 0:
        m //= ell
    f = sp.n_order(ell, m) if m > 1 else 1
    v = 0
    while nrm % ell == 0:
        nrm //= ell
        v += 1
    assert v % f == 0
    return v // f


def single_prime_above(N: int, ell: int) -> bool:
    m = N
    while m % ell == 0:
        m //= ell
    if m == 1:
        return True
    return sp.n_order(ell, m) == sp.totient(m)


def coprime_residues(N: int) -> list[int]:
    return [c for c in range(1, N + 1) if gcd(c, N) == 1]
