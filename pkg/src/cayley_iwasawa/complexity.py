"""Picard group, complexity (number of spanning trees), and l-parts of it."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .abelian import require_prime
from .errors import Disconnected
from .laurent import bareiss_det
from .multigraph import Multigraph, matrices

START_DIGITS = 64
MAX_DIGITS = 1 << 16


@dataclass(frozen=True)
class PicardData:
    invariant_factors: tuple[int, ...]  # d_1 | d_2 | ..., units dropped
    kappa: int


def smith_diagonal(matrix) -> list[int]:
    """Diagonal of the Smith normal form (nonnegative, divisibility chain,
    trailing zeros for the rank defect)."""
    A = [list(map(int, row)) for row in matrix]
    m = len(A)
    n = len(A[0]) if m else 0
    diag = []
    for t in range(min(m, n)):
        # smallest-magnitude nonzero entry of the trailing submatrix
        best = None
        for i in range(t, m):
            for j in range(t, n):
                a = A[i][j]
                if a and (best is None or abs(a) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        _move_to(A, t, *best)
        while True:
            p = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // p
                    row_t, row_i = A[t], A[i]
                    for j in range(t, n):
                        row_i[j] -= q * row_t[j]
                    dirty = dirty or A[i][t] != 0
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // p
                    for i in range(t, m):
                        A[i][j] -= q * A[i][t]
                    dirty = dirty or A[t][j] != 0
            if dirty:
                cands = [(i, t) for i in range(t + 1, m) if A[i][t]] + [(t, j) for j in range(t + 1, n) if A[t][j]]
                i, j = min(cands, key=lambda ij: abs(A[ij[0]][ij[1]]))
                _move_to(A, t, i, j)
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p), None)
            if bad is None:
                break
            i = bad[0]
            A[t] = [x + y for x, y in zip(A[t], A[i])]
        diag.append(abs(A[t][t]))
    return diag + [0] * (min(m, n) - len(diag))


def _move_to(A, t, i, j):
    A[t], A[i] = A[i], A[t]
    for row in A:
        row[t], row[j] = row[j], row[t]


def _require_connected(X: Multigraph):
    if not X.is_connected():
        raise Disconnected("graph is disconnected")


def picard(X: Multigraph) -> PicardData:
    _require_connected(X)
    _, _, Q = matrices(X)
    diag = smith_diagonal(Q.tolist())
    assert diag.count(0) == 1, "a connected graph has a rank-one Laplacian kernel"
    factors = tuple(d for d in diag if d not in (0, 1))
    kappa = 1
    for d in factors:
        kappa *= d
    return PicardData(factors, kappa)


def reduced_laplacian(X: Multigraph, root: int = 0) -> list[list[int]]:
    _, _, Q = matrices(X)
    keep = [i for i in range(X.vertex_count) if i != root]
    return [[int(Q[i, j]) for j in keep] for i in keep]


def complexity_det(X: Multigraph) -> int:
    """Matrix-tree route: determinant of the Laplacian with the root row and column deleted."""
    _require_connected(X)
    return bareiss_det(reduced_laplacian(X))


def ell_part(n: int, ell: int) -> tuple[int, int]:
    require_prime(ell)
    if n < 1:
        raise ValueError("n must be a positive integer")
    e = 0
    while n % ell == 0:
        n //= ell
        e += 1
    return e, n


def det_ell_valuation(matrix, ell: int, digits: int) -> int | None:
    """v_l(det) by elimination over Z/l^digits, or None if the precision is too low.

    Unit pivots keep every entry exact modulo the working modulus; when the
    whole trailing block is divisible by l it is divided out (one digit lost).
    """
    mod = ell ** digits
    A = np.array(matrix, dtype=object) % mod
    n = A.shape[0]
    val = 0
    for k in range(n):
        while True:
            col = A[k:, k] % ell
            hits = np.flatnonzero(col != 0)
            if hits.size:
                i, j = k + int(hits[0]), k
                break
            block = A[k:, k:]
            nz = np.argwhere(block % ell != 0)
            if nz.size:
                i, j = k + int(nz[0][0]), k + int(nz[0][1])
                break
            if not block.any():
                return None
            digits -= 1
            if digits == 0:
                return None
            mod //= ell
            A[k:, k:] = (block // ell) % mod
            val += n - k
        if i != k:
            A[[k, i], :] = A[[i, k], :]
        if j != k:
            A[:, [k, j]] = A[:, [j, k]]
        if k + 1 < n:
            inv = pow(int(A[k, k]), -1, mod)
            factors = (A[k + 1:, k] * inv) % mod
            A[k + 1:, k + 1:] = (A[k + 1:, k + 1:] - np.outer(factors, A[k, k + 1:])) % mod
    return val


def kappa_ell_exponent(X: Multigraph, ell: int, start_digits: int = START_DIGITS) -> int:
    """e with l^e exactly dividing the complexity of X."""
    require_prime(ell)
    _require_connected(X)
    M = reduced_laplacian(X)
    if not M:
        return 0
    digits = start_digits
    while digits <= MAX_DIGITS:
        v = det_ell_valuation(M, ell, digits)
        if v is not None:
            return v
        digits *= 2
    raise ArithmeticError("l-adic precision escalation exhausted")
