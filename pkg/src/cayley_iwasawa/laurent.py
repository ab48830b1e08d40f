"""Exact Laurent polynomials over Z or Z[zeta_N] and fraction-free determinants.

Coefficients are either Python ints or :class:`CycInt` values; both support
``+ - *`` and comparison with 0, and :func:`ring_exact_div` handles the exact
quotients needed by Bareiss elimination.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import CycInt, ring_exact_div


def _trim(coeffs: list) -> tuple[int, list]:
    """Strip zero fringes; return (number stripped from the bottom, remaining)."""
    lo = 0
    while lo < len(coeffs) and coeffs[lo] == 0:
        lo += 1
    hi = len(coeffs)
    while hi > lo and coeffs[hi - 1] == 0:
        hi -= 1
    return lo, coeffs[lo:hi]


@dataclass(frozen=True)
class LaurentPoly:
    """sum_k coeffs[k] x^(low + k), canonical: no zero fringes; zero has low = 0."""

    low: int
    coeffs: tuple

    @classmethod
    def make(cls, low: int, coeffs) -> "LaurentPoly":
        lo, rest = _trim(list(coeffs))
        if not rest:
            return cls(0, ())
        return cls(low + lo, tuple(rest))

    @classmethod
    def monomial(cls, k: int, coef=1) -> "LaurentPoly":
        return cls.make(k, [coef])

    @classmethod
    def const(cls, c) -> "LaurentPoly":
        return cls.make(0, [c])

    @classmethod
    def from_terms(cls, terms: dict) -> "LaurentPoly":
        if not terms:
            return cls(0, ())
        lo, hi = min(terms), max(terms)
        coeffs = [0] * (hi - lo + 1)
        for k, c in terms.items():
            coeffs[k - lo] = coeffs[k - lo] + c
        return cls.make(lo, coeffs)

    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def terms(self) -> dict:
        return {self.low + k: c for k, c in enumerate(self.coeffs) if c != 0}

    def coeff(self, k: int):
        i = k - self.low
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other):
        other = _lift(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.low, other.low)
        hi = max(self.high, other.high)
        return LaurentPoly.make(lo, [self.coeff(k) + other.coeff(k) for k in range(lo, hi + 1)])

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.low, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        if self.is_zero() or other.is_zero():
            return LaurentPoly(0, ())
        return LaurentPoly.make(self.low + other.low, poly_mul(list(self.coeffs), list(other.coeffs)))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = LaurentPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by x^k."""
        return self if self.is_zero() else LaurentPoly(self.low + k, self.coeffs)

    def map(self, fn) -> "LaurentPoly":
        return LaurentPoly.make(self.low, [fn(c) for c in self.coeffs])

    def derivative(self) -> "LaurentPoly":
        return LaurentPoly.from_terms({k - 1: k * c for k, c in self.terms().items() if k != 0})

    def evaluate_at(self, point):
        """Exact value at a point of the coefficient ring (negative powers need
        the point to be invertible, which holds for roots of unity and +-1)."""
        if self.is_zero():
            return 0
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * point + c
        if self.low >= 0:
            return acc * _ring_pow(point, self.low) if self.low else acc
        return ring_exact_div(acc, _ring_pow(point, -self.low))

    def is_rational(self) -> bool:
        return all(not isinstance(c, CycInt) or c.is_rational() for c in self.coeffs)

    def to_integer_poly(self) -> "LaurentPoly":
        return self.map(lambda c: c.to_integer() if isinstance(c, CycInt) else c)

    def __str__(self):
        parts = []
        for k, c in sorted(self.terms().items(), reverse=True):
            parts.append(f"({c})*x^{k}")
        return " + ".join(parts) or "0"


def _lift(p) -> LaurentPoly:
    return p if isinstance(p, LaurentPoly) else LaurentPoly.const(p)


def _ring_pow(a, k: int):
    out = 1
    for _ in range(k):
        out = out * a
    return out


def poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    if all(isinstance(x, int) for x in a) and all(isinstance(y, int) for y in b):
        return _int_poly_mul(a, b)
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y == 0:
                continue
            out[i + j] = out[i + j] + x * y
    return out


def _int_poly_mul(a: list[int], b: list[int]) -> list[int]:
    """Integer polynomial product by Kronecker substitution."""
    if len(a) < 8 or len(b) < 8:
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return out
    bound = max(abs(x) for x in a) * max(abs(y) for y in b) * min(len(a), len(b))
    shift = bound.bit_length() + 2
    ea = sum(x << (shift * i) for i, x in enumerate(a))
    eb = sum(y << (shift * i) for i, y in enumerate(b))
    prod = ea * eb
    out = []
    mask = (1 << shift) - 1
    half = 1 << (shift - 1)
    for _ in range(len(a) + len(b) - 1):
        digit = prod & mask
        if digit >= half:
            digit -= 1 << shift
        out.append(digit)
        prod = (prod - digit) >> shift
    return out


def poly_divexact(num: list, den: list) -> list:
    """Exact quotient num / den of polynomials over the coefficient ring."""
    num = list(num)
    while num and num[-1] == 0:
        num.pop()
    if not num:
        return []
    dq = len(num) - len(den)
    if dq < 0:
        raise ArithmeticError("inexact polynomial division")
    lead = den[-1]
    q = [0] * (dq + 1)
    for i in range(dq, -1, -1):
        top = num[i + len(den) - 1]
        if top == 0:
            continue
        coef = ring_exact_div(top, lead)
        q[i] = coef
        for j, d in enumerate(den):
            if d != 0:
                num[i + j] = num[i + j] - coef * d
    if any(c != 0 for c in num):
        raise ArithmeticError("inexact polynomial division")
    return q


def _psub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return out


def bareiss_det(matrix, *, sub=None, mul=None, div=None, is_zero=None, one=1, zero=0):
    """Fraction-free determinant of a square matrix over an integral domain.

    The arithmetic callbacks default to Python operators and exact division,
    which covers ints and CycInt; polynomial entries pass their own callbacks.
    """
    sub = sub or (lambda a, b: a - b)
    mul = mul or (lambda a, b: a * b)
    div = div or ring_exact_div
    is_zero = is_zero or (lambda a: a == 0)
    M = [list(row) for row in matrix]
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("matrix must be square")
    if n == 0:
        return one
    negate = False
    prev = None
    for k in range(n - 1):
        if is_zero(M[k][k]):
            for i in range(k + 1, n):
                if not is_zero(M[i][k]):
                    M[k], M[i] = M[i], M[k]
                    negate = not negate
                    break
            else:
                return zero
        pivot = M[k][k]
        row_k = M[k]
        for i in range(k + 1, n):
            row_i = M[i]
            mik = row_i[k]
            for j in range(k + 1, n):
                val = mul(row_i[j], pivot)
                if not is_zero(mik) and not is_zero(row_k[j]):
                    val = sub(val, mul(mik, row_k[j]))
                row_i[j] = val if prev is None or is_zero(val) else div(val, prev)
            row_i[k] = zero
        prev = pivot
    det = M[n - 1][n - 1]
    return sub(zero, det) if negate else det


def poly_matrix_det(rows: list[list[list]]) -> list:
    """Determinant of a matrix of ordinary polynomials (ascending coefficient lists)."""
    return bareiss_det(
        rows,
        sub=_psub,
        mul=poly_mul,
        div=lambda a, b: poly_divexact(a, b) if a else [],
        is_zero=lambda a: not a,
        one=[1],
        zero=[],
    )


def det_laurent(M) -> LaurentPoly:
    """Exact determinant of a square matrix of Laurent polynomials."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("matrix must be square")
    total_shift = 0
    rows = []
    for row in M:
        row = [_lift(p) for p in row]
        nonzero = [p for p in row if not p.is_zero()]
        if not nonzero:
            return LaurentPoly(0, ())
        lo = min(p.low for p in nonzero)
        total_shift += lo
        prow = []
        for p in row:
            if p.is_zero():
                prow.append([])
            else:
                prow.append([0] * (p.low - lo) + list(p.coeffs))
        rows.append(prow)
    D = poly_matrix_det(rows)
    return LaurentPoly.make(total_shift, D)


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial, ascending coefficients, no trailing zeros."""

    coeffs: tuple[int, ...]

    @classmethod
    def make(cls, coeffs) -> "IntPoly":
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        return cls(tuple(int(x) for x in c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def divide_by_T(self) -> "IntPoly":
        if self.coeffs and self.coeffs[0] != 0:
            raise ArithmeticError("polynomial is not divisible by T")
        return IntPoly.make(self.coeffs[1:])

    def to_laurent(self) -> LaurentPoly:
        return LaurentPoly.make(0, self.coeffs)


def shift_to_T(p: LaurentPoly) -> tuple[IntPoly, int]:
    """(F, shift) with F(T) = x^shift p(x) at x = 1 + T, shift = -low."""
    shift = -p.low
    F = []
    for c in reversed(p.coeffs):
        # F <- F * (1 + T) + c
        nxt = [0] * (len(F) + 1)
        for i, a in enumerate(F):
            nxt[i] += a
            nxt[i + 1] += a
        nxt[0] += c
        F = nxt
    return IntPoly.make(F), shift


def binomial_to_T(coeffs_in_x: list) -> list:
    """Given sum_j a_j x^j (ascending), return the T-basis coefficients of
    sum_j a_j (1 + T)^j over the same ring."""
    F = []
    for c in reversed(coeffs_in_x):
        nxt = [0] * (len(F) + 1)
        for i, a in enumerate(F):
            nxt[i] = nxt[i] + a
            nxt[i + 1] = nxt[i + 1] + a
        nxt[0] = nxt[0] + c
        F = nxt
    while F and F[-1] == 0:
        F.pop()
    return F
