"""Finite-precision model of the local field L = Q_l(zeta_N).

Write N = l^a * m with l not dividing m. The ring of integers of L is

    Z_l[u, pi] / (g(u), E(pi))

where g is an irreducible factor of Phi_m lifted from F_l to Z/l^prec
(unramified part, degree f) and E(pi) = Phi_{l^a}(1 + pi) is Eisenstein of
degree e = phi(l^a) (totally ramified part). The uniformizer is pi when
a >= 1 and l otherwise. zeta_N is embedded as u * (1 + pi).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import comb

from sympy.polys.domains import ZZ
from sympy.polys.galoistools import (
    gf_factor_sqf,
    gf_from_int_poly,
    gf_mul,
    gf_quo,
    gf_rem,
    gf_sub,
    gf_gcdex,
)

from .abelian import _split_ell, multiplicative_order, require_prime
from .cyclotomic import CycInt, cyclotomic_poly, euler_phi
from .errors import IncompatibleShapes, PrecisionTooLow

DEFAULT_PRECISION = 32
GUARD_DIGITS = 4
MAX_PRECISION = 512


@dataclass(frozen=True)
class AtLeast:
    """A valuation known only to be >= bound (precision ran out)."""

    bound: int

    def __str__(self):
        return f">={self.bound}"


def _desc(asc):
    out = list(reversed(asc))
    while out and out[0] == 0:
        out.pop(0)
    return out


def _asc(desc, length=None):
    out = list(reversed(desc))
    if length is not None:
        out += [0] * (length - len(out))
    return out


def _canonical_factor(m: int, ell: int) -> list[int]:
    """Monic irreducible factor of Phi_m over F_l with lexicographically smallest
    coefficient sequence (constant term first), as an ascending list."""
    phi = gf_from_int_poly(_desc(cyclotomic_poly(m)), ell)
    _, factors = gf_factor_sqf(phi, ell, ZZ)
    return min(([int(c) for c in _asc(fac)] for fac in factors), key=tuple)


def _hensel_lift(m: int, ell: int, g1: list[int], precision: int) -> list[int]:
    """Lift the monic factor g1 of Phi_m mod l to a factor mod l**precision."""
    phi = list(cyclotomic_poly(m))
    phi_mod = gf_from_int_poly(_desc(phi), ell)
    g_mod = _desc(g1)
    h_mod = gf_quo(phi_mod, g_mod, ell, ZZ)
    s, t, one = gf_gcdex(g_mod, h_mod, ell, ZZ)
    assert one == [1], "Phi_m must be separable mod l"
    G = list(g1)
    H = _asc(h_mod)
    q = ell
    for _ in range(1, precision):
        prod = [0] * (len(G) + len(H) - 1)
        for i, x in enumerate(G):
            for j, y in enumerate(H):
                prod[i + j] += x * y
        err = [(a - b) for a, b in zip(phi + [0] * (len(prod) - len(phi)), prod)]
        assert all(c % q == 0 for c in err)
        e_mod = gf_from_int_poly(_desc([c // q for c in err]), ell)
        a_mod = gf_rem(gf_mul(t, e_mod, ell, ZZ), g_mod, ell, ZZ)
        b_mod = gf_quo(gf_sub(e_mod, gf_mul(a_mod, h_mod, ell, ZZ), ell, ZZ), g_mod, ell, ZZ)
        q_next = q * ell
        G = [(x + q * y) % q_next for x, y in zip(G, _asc(a_mod, len(G)))]
        H = [(x + q * y) % q_next for x, y in zip(H, _asc(b_mod, len(H)))]
        q = q_next
    return [int(c) for c in G]


def _taylor_shift_one(poly) -> list[int]:
    """Coefficients of p(1 + y) given those of p(x), ascending."""
    n = len(poly)
    return [sum(poly[k] * comb(k, j) for k in range(j, n)) for j in range(n)]


@dataclass(frozen=True)
class LocalField:
    ell: int
    N: int
    precision: int
    a: int = field(init=False)
    m_prime: int = field(init=False)
    f: int = field(init=False)
    e: int = field(init=False)
    unramified_minpoly: tuple[int, ...] = field(init=False)  # ascending, monic, degree f
    eisenstein: tuple[int, ...] = field(init=False)  # ascending, monic, degree e

    def __post_init__(self):
        a, m = _split_ell(self.N, self.ell)
        f = multiplicative_order(self.ell, m)
        g1 = _canonical_factor(m, self.ell)
        assert len(g1) - 1 == f
        g = _hensel_lift(m, self.ell, g1, self.precision)
        E = _taylor_shift_one(list(cyclotomic_poly(self.ell ** a)))
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "m_prime", m)
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "e", len(E) - 1)
        object.__setattr__(self, "unramified_minpoly", tuple(g))
        object.__setattr__(self, "eisenstein", tuple(E))

    @property
    def degree(self) -> int:
        return self.e * self.f

    @property
    def modulus(self) -> int:
        return self.ell ** self.precision

    def with_precision(self, precision: int) -> "LocalField":
        return build_local_field(self.ell, self.N, precision)

    def elem(self, coeffs) -> "LocalElem":
        q = self.modulus
        return LocalElem(self, tuple(int(c) % q for c in coeffs))

    def from_int(self, a: int) -> "LocalElem":
        return self.elem([a] + [0] * (self.degree - 1))

    @cached_property
    def u(self) -> "LocalElem":
        c = [0] * self.degree
        if self.f > 1:
            c[1] = 1
        else:
            c[0] = -self.unramified_minpoly[0]
        return self.elem(c)

    @cached_property
    def pi(self) -> "LocalElem":
        c = [0] * self.degree
        if self.e > 1:
            c[self.f] = 1
        else:
            c[0] = -self.eisenstein[0]
        return self.elem(c)

    @cached_property
    def zeta_embedding(self) -> "LocalElem":
        return self.u * (self.pi + 1)

    @cached_property
    def _zeta_powers(self) -> tuple:
        out = [self.from_int(1)]
        for _ in range(1, euler_phi(self.N)):
            out.append(out[-1] * self.zeta_embedding)
        return tuple(out)

    @property
    def uniformizer(self) -> "LocalElem":
        return self.pi if self.a >= 1 else self.from_int(self.ell)


@lru_cache(maxsize=64)
def build_local_field(ell: int, N: int, precision: int = DEFAULT_PRECISION) -> LocalField:
    require_prime(ell)
    if precision < 8:
        raise PrecisionTooLow(f"precision {precision} < 8")
    if N < 1:
        raise ValueError("N must be positive")
    return LocalField(ell, N, precision)


class LocalElem:
    """sum c[j*f + i] u^i pi^j with coefficients mod l**precision."""

    __slots__ = ("field", "c")

    def __init__(self, field: LocalField, c: tuple[int, ...]):
        self.field = field
        self.c = c

    def _other(self, other):
        if isinstance(other, LocalElem):
            if other.field is not self.field and other.field != self.field:
                raise IncompatibleShapes("elements of different local fields")
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        q = self.field.modulus
        return LocalElem(self.field, tuple((x + y) % q for x, y in zip(self.c, other.c)))

    __radd__ = __add__

    def __neg__(self):
        q = self.field.modulus
        return LocalElem(self.field, tuple((-x) % q for x in self.c))

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        L = self.field
        e, f, q = L.e, L.f, L.modulus
        g = L.unramified_minpoly
        # blocks[j] is the (unreduced) u-polynomial multiplying pi^j
        blocks = [[0] * (2 * f - 1) for _ in range(2 * e - 1)]
        for j1 in range(e):
            a = self.c[j1 * f:(j1 + 1) * f]
            if not any(a):
                continue
            for j2 in range(e):
                b = other.c[j2 * f:(j2 + 1) * f]
                if not any(b):
                    continue
                blk = blocks[j1 + j2]
                for i1, x in enumerate(a):
                    if x:
                        for i2, y in enumerate(b):
                            blk[i1 + i2] += x * y
        for blk in blocks:
            for k in range(2 * f - 2, f - 1, -1):
                t = blk[k] % q
                if t:
                    for i in range(f):
                        blk[k - f + i] -= t * g[i]
                blk[k] = 0
            for k in range(f):
                blk[k] %= q
        E = L.eisenstein
        for j in range(2 * e - 2, e - 1, -1):
            blk = blocks[j]
            if any(blk[:f]):
                for k in range(e):
                    if E[k]:
                        tgt = blocks[j - e + k]
                        for i in range(f):
                            tgt[i] = (tgt[i] - E[k] * blk[i]) % q
        return LocalElem(L, tuple(x for j in range(e) for x in blocks[j][:f]))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = self.field.from_int(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return f"LocalElem(l={self.field.ell}, N={self.field.N}, {self.c})"

    def is_zero(self) -> bool:
        return not any(self.c)


def _vl(x: int, ell: int, cap: int) -> int:
    if x == 0:
        return cap
    v = 0
    while x % ell == 0:
        x //= ell
        v += 1
    return v


def embed(z: CycInt | int, L: LocalField) -> LocalElem:
    if isinstance(z, int):
        return L.from_int(z)
    if z.N != L.N:
        raise IncompatibleShapes(f"Z[zeta_{z.N}] cannot be embedded in Q_l(zeta_{L.N})")
    acc = [0] * L.degree
    for coef, power in zip(z.c, L._zeta_powers):
        if coef:
            for i, x in enumerate(power.c):
                acc[i] += coef * x
    return L.elem(acc)


def valuation(z: LocalElem, guard: int = GUARD_DIGITS) -> int | AtLeast:
    """Normalized pi-adic valuation, v(l) = e."""
    L = z.field
    e, f, prec, ell = L.e, L.f, L.precision, L.ell
    best = None
    for j in range(e):
        blk = z.c[j * f:(j + 1) * f]
        if any(blk):
            v = e * min(_vl(x, ell, prec) for x in blk) + j
            best = v if best is None else min(best, v)
    if best is None:
        return AtLeast(e * prec)
    if best >= e * (prec - guard):
        return AtLeast(e * (prec - guard))
    return best


def residue(z: LocalElem) -> tuple[int, ...]:
    """Image in the residue field F_l[u]/(g mod l), as coefficients of 1, u, ..."""
    L = z.field
    return tuple(x % L.ell for x in z.c[:L.f])


def residue_field_modulus(L: LocalField) -> tuple[int, ...]:
    return tuple(x % L.ell for x in L.unramified_minpoly)
