"""Exact arithmetic in the cyclotomic integers Z[zeta_N].

Elements are coefficient vectors of length phi(N) in the power basis
1, zeta, ..., zeta^(phi(N)-1), i.e. residues modulo the N-th cyclotomic
polynomial. No floating point is used anywhere.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd

from .errors import BadGaloisIndex, IncompatibleShapes


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    """Exact quotient of integer polynomials (ascending), den monic."""
    num = list(num)
    dq = len(num) - len(den)
    if dq < 0:
        return [0]
    q = [0] * (dq + 1)
    lead = den[-1]
    for i in range(dq, -1, -1):
        coef, rem = divmod(num[i + len(den) - 1], lead)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        q[i] = coef
        if coef:
            for j, d in enumerate(den):
                num[i + j] -= coef * d
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return q


@lru_cache(maxsize=None)
def cyclotomic_poly(N: int) -> tuple[int, ...]:
    """Coefficients (ascending) of Phi_N, by dividing x^N - 1 by Phi_d for d | N, d < N."""
    if N < 1:
        raise ValueError("N must be positive")
    num = [-1] + [0] * (N - 1) + [1]
    for d in range(1, N):
        if N % d == 0:
            num = _poly_divexact(num, list(cyclotomic_poly(d)))
    return tuple(num)


def euler_phi(N: int) -> int:
    return len(cyclotomic_poly(N)) - 1


@lru_cache(maxsize=None)
def _power_table(N: int) -> tuple[tuple[int, ...], ...]:
    """zeta^k in the power basis for k = 0 .. max(N, 2 phi(N)) - 1."""
    phi = cyclotomic_poly(N)
    d = len(phi) - 1
    rows = []
    cur = [1] + [0] * (d - 1)
    for _ in range(max(N, 2 * d)):
        rows.append(tuple(cur))
        # multiply by x and reduce by the monic Phi_N
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [a - top * p for a, p in zip(cur, phi)]
    return tuple(rows)


def _reduce(N: int, coeffs: list[int]) -> tuple[int, ...]:
    d = euler_phi(N)
    if len(coeffs) <= d:
        return tuple(coeffs) + (0,) * (d - len(coeffs))
    table = _power_table(N)
    out = list(coeffs[:d])
    for k in range(d, len(coeffs)):
        a = coeffs[k]
        if a:
            row = table[k] if k < len(table) else table[k % N]
            for i, r in enumerate(row):
                if r:
                    out[i] += a * r
    return tuple(out)


class CycInt:
    """An element of Z[zeta_N]."""

    __slots__ = ("N", "c")

    def __init__(self, N: int, coeffs=()):
        self.N = N
        self.c = _reduce(N, [int(a) for a in coeffs])

    @classmethod
    def _raw(cls, N: int, c: tuple[int, ...]) -> "CycInt":
        z = object.__new__(cls)
        z.N = N
        z.c = c
        return z

    @classmethod
    def zeta(cls, N: int, k: int = 1) -> "CycInt":
        return cls._raw(N, _power_table(N)[k % N])

    @classmethod
    def const(cls, N: int, a: int) -> "CycInt":
        return cls._raw(N, (int(a),) + (0,) * (euler_phi(N) - 1))

    @classmethod
    def from_exponents(cls, N: int, terms) -> "CycInt":
        """Sum of coef * zeta^k for (k, coef) pairs."""
        out = [0] * euler_phi(N)
        table = _power_table(N)
        for k, coef in terms:
            for i, r in enumerate(table[k % N]):
                if r:
                    out[i] += coef * r
        return cls._raw(N, tuple(out))

    def _coerce(self, other):
        if isinstance(other, CycInt):
            if other.N != self.N:
                raise IncompatibleShapes(f"Z[zeta_{self.N}] vs Z[zeta_{other.N}]")
            return other
        if isinstance(other, int):
            return CycInt.const(self.N, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycInt._raw(self.N, tuple(a + b for a, b in zip(self.c, other.c)))

    __radd__ = __add__

    def __neg__(self):
        return CycInt._raw(self.N, tuple(-a for a in self.c))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycInt._raw(self.N, tuple(a - b for a, b in zip(self.c, other.c)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt._raw(self.N, tuple(a * other for a in self.c))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.c, other.c
        if not any(a[1:]):
            return CycInt._raw(self.N, tuple(a[0] * y for y in b))
        if not any(b[1:]):
            return CycInt._raw(self.N, tuple(b[0] * x for x in a))
        prod = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CycInt._raw(self.N, _reduce(self.N, prod))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not cyclotomic integers in general")
        out = CycInt.const(self.N, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            return self.c[0] == other and not any(self.c[1:])
        if isinstance(other, CycInt):
            return self.N == other.N and self.c == other.c
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.c[0])
        return hash((self.N, self.c))

    def __bool__(self):
        return any(self.c)

    def __repr__(self):
        terms = []
        for k, a in enumerate(self.c):
            if a:
                terms.append(f"{a}" if k == 0 else f"{a}*z^{k}")
        return f"CycInt[{self.N}](" + (" + ".join(terms) or "0") + ")"

    def is_rational(self) -> bool:
        return not any(self.c[1:])

    def to_integer(self) -> int:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not a rational integer")
        return self.c[0]

    def conjugate(self, c: int) -> "CycInt":
        """Image under the Galois automorphism zeta_N -> zeta_N^c."""
        if gcd(c, self.N) != 1:
            raise BadGaloisIndex(f"gcd({c}, {self.N}) != 1")
        return CycInt.from_exponents(self.N, ((c * k, a) for k, a in enumerate(self.c) if a))

    def complex_conjugate(self) -> "CycInt":
        return self.conjugate(-1)

    def norm(self) -> int:
        out = CycInt.const(self.N, 1)
        for c in range(1, self.N + 1):
            if gcd(c, self.N) == 1:
                out = out * self.conjugate(c)
        return out.to_integer()

    def exact_div(self, other) -> "CycInt":
        """self / other, which must lie in Z[zeta_N]."""
        if isinstance(other, CycInt) and other.is_rational():
            other = other.c[0]
        if isinstance(other, int):
            if other == 0:
                raise ZeroDivisionError("division by zero in Z[zeta_N]")
            out = []
            for a in self.c:
                q, r = divmod(a, other)
                if r:
                    raise ArithmeticError(f"{self!r} not divisible by {other}")
                out.append(q)
            return CycInt._raw(self.N, tuple(out))
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero in Z[zeta_N]")
        cofactor = CycInt.const(self.N, 1)
        for c in range(2, self.N + 1):
            if gcd(c, self.N) == 1:
                cofactor = cofactor * other.conjugate(c)
        norm = (other * cofactor).to_integer()
        return (self * cofactor).exact_div(norm)


def ring_exact_div(a, b):
    """Exact division for either rational integers or CycInt values."""
    if isinstance(a, CycInt):
        return a.exact_div(b)
    if isinstance(b, CycInt):
        return CycInt.const(b.N, a).exact_div(b)
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError(f"{a} not divisible by {b}")
    return q
