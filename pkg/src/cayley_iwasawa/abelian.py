"""Finite abelian groups as products of cyclic factors, their characters,
and Galois orbits of characters under an l-adic decomposition group."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from math import gcd, lcm, prod

from sympy import factorint, isprime

from .errors import IncompatibleShapes, NotPrime

Element = tuple  # exponent vector, one residue per cyclic factor


def require_prime(ell: int) -> None:
    if not isinstance(ell, int) or not isprime(ell):
        raise NotPrime(f"{ell!r} is not a prime")


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Z/n_1 x ... x Z/n_k written additively; elements are exponent tuples."""

    factor_orders: tuple[int, ...]

    def __post_init__(self):
        orders = tuple(int(n) for n in self.factor_orders)
        if not orders or any(n < 2 for n in orders):
            raise ValueError(f"factor orders must be integers >= 2, got {self.factor_orders!r}")
        object.__setattr__(self, "factor_orders", orders)

    @classmethod
    def cyclic(cls, n: int) -> "FiniteAbelianGroup":
        return cls((n,))

    @property
    def order(self) -> int:
        return prod(self.factor_orders)

    @property
    def exponent(self) -> int:
        return lcm(*self.factor_orders)

    @property
    def rank(self) -> int:
        return len(self.factor_orders)

    @cached_property
    def elements(self) -> tuple[Element, ...]:
        """All elements in lexicographic exponent order (identity first)."""
        return tuple(itertools.product(*(range(n) for n in self.factor_orders)))

    @cached_property
    def _index(self) -> dict:
        return {g: i for i, g in enumerate(self.elements)}

    @property
    def identity(self) -> Element:
        return (0,) * self.rank

    def element(self, g) -> Element:
        """Normalize an int (cyclic groups only) or a sequence to a reduced tuple."""
        if isinstance(g, int):
            if self.rank != 1:
                raise IncompatibleShapes(f"integer element {g} given for a group of rank {self.rank}")
            g = (g,)
        g = tuple(g)
        if len(g) != self.rank:
            raise IncompatibleShapes(f"element {g} does not match factor orders {self.factor_orders}")
        return tuple(int(a) % n for a, n in zip(g, self.factor_orders))

    def index(self, g) -> int:
        return self._index[self.element(g)]

    def add(self, g, h) -> Element:
        return tuple((a + b) % n for a, b, n in zip(g, h, self.factor_orders))

    def sub(self, g, h) -> Element:
        return tuple((a - b) % n for a, b, n in zip(g, h, self.factor_orders))

    def neg(self, g) -> Element:
        return tuple((-a) % n for a, n in zip(g, self.factor_orders))

    def scale(self, k: int, g) -> Element:
        return tuple((k * a) % n for a, n in zip(g, self.factor_orders))

    def element_order(self, g) -> int:
        return lcm(*(n // gcd(a, n) for a, n in zip(g, self.factor_orders)))

    def generated_subgroup(self, gens) -> frozenset:
        seen = {self.identity}
        frontier = [self.identity]
        gens = [self.element(s) for s in gens]
        while frontier:
            g = frontier.pop()
            for s in gens:
                h = self.add(g, s)
                if h not in seen:
                    seen.add(h)
                    frontier.append(h)
        return frozenset(seen)

    def generates(self, gens) -> bool:
        return len(self.generated_subgroup(gens)) == self.order

    def __str__(self):
        return " x ".join(f"Z/{n}" for n in self.factor_orders)


@dataclass(frozen=True)
class Character:
    """psi(g) = zeta_N ** pairing(psi, g), N the exponent of the group."""

    group: FiniteAbelianGroup
    exponents: tuple[int, ...]

    @property
    def N(self) -> int:
        return self.group.exponent

    def __call__(self, g) -> int:
        """Exponent k with psi(g) = zeta_N**k."""
        return char_pairing(self, g)

    @property
    def is_trivial(self) -> bool:
        return not any(self.exponents)

    def power(self, c: int) -> "Character":
        return Character(self.group, self.group.scale(c, self.exponents))

    def order(self) -> int:
        return self.group.element_order(self.exponents)


def characters(G: FiniteAbelianGroup) -> list[Character]:
    """All |G| characters in lexicographic exponent order; index 0 is trivial."""
    return [Character(G, e) for e in G.elements]


def char_pairing(psi: Character, g) -> int:
    G = psi.group
    g = G.element(g)
    if len(psi.exponents) != G.rank:
        raise IncompatibleShapes("character and element shapes differ")
    N = G.exponent
    return sum(p * a * (N // n) for p, a, n in zip(psi.exponents, g, G.factor_orders)) % N


def _split_ell(N: int, ell: int) -> tuple[int, int]:
    a = 0
    while N % ell == 0:
        N //= ell
        a += 1
    return a, N


def multiplicative_order(x: int, m: int) -> int:
    if m == 1:
        return 1
    x %= m
    k, y = 1, x
    while y != 1:
        y = y * x % m
        k += 1
    return k


def decomposition_group(N: int, ell: int) -> tuple[int, ...]:
    """Residues c mod N, gcd(c, N) = 1, whose prime-to-ell component lies in <ell>."""
    require_prime(ell)
    if N < 1:
        raise ValueError("N must be positive")
    _, m = _split_ell(N, ell)
    powers = {1 % m}
    y = 1 % m
    while True:
        y = y * ell % m
        if y in powers:
            break
        powers.add(y)
    return tuple(c for c in range(N) if gcd(c, N) == 1 and c % m in powers) if N > 1 else (0,)


@dataclass(frozen=True)
class GaloisOrbitPartition:
    N: int
    decomposition_subgroup: tuple[int, ...]
    orbits: tuple[tuple[Character, ...], ...]


def galois_orbits(G: FiniteAbelianGroup, ell: int) -> GaloisOrbitPartition:
    N = G.exponent
    D = decomposition_group(N, ell)
    chars = characters(G)
    placed = set()
    orbits = []
    for psi in chars:
        if psi.exponents in placed:
            continue
        orbit = []
        for c in D:
            phi = psi.power(c)
            if phi.exponents not in placed:
                placed.add(phi.exponents)
                orbit.append(phi)
        orbit.sort(key=lambda ch: ch.exponents)
        orbits.append(tuple(orbit))
    return GaloisOrbitPartition(N, D, tuple(orbits))


def _partitions(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def abelian_groups_of_order(n: int) -> list[FiniteAbelianGroup]:
    """Every abelian group of order n (n >= 2), in invariant-factor form d_1 | d_2 | ..."""
    per_prime = []
    for p, k in sorted(factorint(n).items()):
        per_prime.append([tuple(p ** e for e in part) for part in _partitions(k)])
    groups = []
    for choice in itertools.product(*per_prime):
        width = max(len(c) for c in choice)
        factors = [1] * width
        for c in choice:
            # largest prime powers go into the last invariant factor
            for i, q in enumerate(c):
                factors[width - 1 - i] *= q
        groups.append(FiniteAbelianGroup(tuple(factors)))
    return groups


def all_abelian_groups(max_order: int) -> list[FiniteAbelianGroup]:
    return [G for n in range(2, max_order + 1) for G in abelian_groups_of_order(n)]
