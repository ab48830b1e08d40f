"""Iwasawa polynomials of Z_l-towers over abelian Cayley graphs.

The global invariants come from the integer Laurent polynomial det M(x);
the per-character factors P_psi live over Z[zeta_N] and are measured in the
local field Q_l(zeta_N). Every identity relating the two is exposed as a
check function returning a boolean (or a small report).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_from_int_poly, gf_gcdex

from .abelian import Character, FiniteAbelianGroup, GaloisOrbitPartition, char_pairing, characters, galois_orbits
from .complexity import kappa_ell_exponent
from .cyclotomic import CycInt
from .errors import (
    AssumptionViolated,
    DepthTooSmall,
    HypothesisNotMet,
    IwasawaError,
    NonRationalProduct,
    PrecisionExhausted,
    TowerDisconnected,
)
from .laurent import IntPoly, LaurentPoly, binomial_to_T, det_laurent, poly_mul, shift_to_T
from .localfield import MAX_PRECISION, AtLeast, LocalField, build_local_field, embed, residue, valuation
from .multigraph import Multigraph, build_cayley, validate_base
from .voltage import VoltageDatum, derived_graph, edge_voltages, tower_connected, validate_voltage


class TheoremViolation(IwasawaError):
    """A computed value contradicts a proven statement (implementation bug)."""


def vl(n: int, ell: int) -> int | None:
    if n == 0:
        return None
    v = 0
    while n % ell == 0:
        n //= ell
        v += 1
    return v


def int_mu_lambda(coeffs, ell: int) -> tuple[int, int]:
    """(mu, lambda) of a nonzero integer polynomial viewed in Z_l[[T]]."""
    vals = [vl(c, ell) for c in coeffs]
    finite = [v for v in vals if v is not None]
    if not finite:
        raise ValueError("the zero polynomial has no Iwasawa invariants")
    mu = min(finite)
    return mu, vals.index(mu)


def weierstrass_preparation(coeffs, ell: int, precision: int = 32) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
    """Factor g = l^mu * P * V over Z_l, P distinguished of degree lambda and
    V(0) a unit, with P and V returned modulo l**precision (ascending)."""
    mu, lam = int_mu_lambda(coeffs, ell)
    q_final = ell ** precision
    h = [c // ell ** mu for c in coeffs]
    hbar = [c % ell for c in h]
    ubar = hbar[lam:]
    while ubar and ubar[-1] == 0:
        ubar.pop()
    if lam == 0:
        return mu, (1,), tuple(c % q_final for c in h)
    Tl = [1] + [0] * lam  # descending T^lambda
    u_desc = gf_from_int_poly(list(reversed(ubar)), ell)
    s, t, one = gf_gcdex(Tl, u_desc, ell, ZZ)
    assert one == [1]
    t_asc = [int(c) for c in reversed(t)]
    P = [0] * lam + [1]
    V = list(ubar)
    q = ell
    for _ in range(1, precision):
        PV = poly_mul(P, V)
        n = max(len(h), len(PV))
        err = [((h[i] if i < len(h) else 0) - (PV[i] if i < len(PV) else 0)) for i in range(n)]
        assert all(c % q == 0 for c in err)
        err = [(c // q) % ell for c in err]
        et = poly_mul(err, t_asc) if any(err) else []
        a = [c % ell for c in et[:lam]] + [0] * max(0, lam - len(et))
        rest = [x - y for x, y in zip(err + [0] * len(P), (poly_mul(a, ubar) if any(a) else []) + [0] * (len(err) + len(P)))]
        assert all(c % ell == 0 for c in rest[:lam])
        b = [c % ell for c in rest[lam:]]
        while b and b[-1] == 0:
            b.pop()
        q_next = q * ell
        P = [(P[i] + q * (a[i] if i < lam else 0)) % q_next for i in range(lam + 1)]
        V = V + [0] * max(0, len(b) - len(V))
        V = [(V[i] + q * (b[i] if i < len(b) else 0)) % q_next for i in range(len(V))]
        q = q_next
    while V and V[-1] == 0:
        V.pop()
    return mu, tuple(P), tuple(V)


@dataclass
class IwasawaResult:
    det: LaurentPoly  # det M(x)
    F: IntPoly  # x^shift det M(x) at x = 1 + T
    shift: int
    mu: int
    lam: int
    distinguished: IntPoly  # Weierstrass polynomial of F/T, coefficients mod l^32
    nu: int | None = None
    n0: int | None = None


@dataclass
class CharFactor:
    psi: Character
    a: tuple  # a_j, coefficient of x^j = (1+T)^j, j in [0, 2 m_beta]
    P: tuple  # coefficients in powers of T
    mu_psi: int | None = None
    lambda_psi: int | None = None

    @property
    def P_x(self) -> LaurentPoly:
        return LaurentPoly.make(0, self.a)


def voltage_matrix(X: Multigraph, d: VoltageDatum) -> list[list[LaurentPoly]]:
    """M(x) = D - (sum over edges v_i -> v_j of x^alpha(e))."""
    alpha = edge_voltages(X, d)
    n = X.vertex_count
    terms = [[{} for _ in range(n)] for _ in range(n)]
    for e, (o, t) in enumerate(X.edges):
        cell = terms[o][t]
        cell[alpha[e]] = cell.get(alpha[e], 0) - 1
    for v in range(n):
        terms[v][v][0] = terms[v][v].get(0, 0) + X.degree(v)
    return [[LaurentPoly.from_terms(c) for c in row] for row in terms]


def _require_base(X: Multigraph, d: VoltageDatum):
    report = validate_base(X)
    if not report.assumption_ok:
        raise AssumptionViolated("; ".join(report.failures()))
    if not tower_connected(X, d):
        raise TowerDisconnected("the voltage assignment does not surject onto Z_l")


def iwasawa_series(X: Multigraph, d: VoltageDatum, precision: int = 32) -> IwasawaResult:
    _require_base(X, d)
    det = det_laurent(voltage_matrix(X, d))
    F, shift = shift_to_T(det)
    if F(0) != 0:
        raise TheoremViolation("det M(1+T) is not divisible by T")
    g = F.divide_by_T()
    mu, lam = int_mu_lambda(g.coeffs, d.ell)
    _, P, _ = weierstrass_preparation(g.coeffs, d.ell, precision)
    return IwasawaResult(det, F, shift, mu, lam, IntPoly.make(P))


def char_factor(d: VoltageDatum, psi: Character) -> CharFactor:
    N = d.group.exponent
    m = d.m_beta
    a = [CycInt.const(N, 0) for _ in range(2 * m + 1)]
    for s, b in zip(d.gens, d.beta):
        a[m - b] = a[m - b] - CycInt.zeta(N, char_pairing(psi, s))
    a[m] = a[m] + d.r
    P = binomial_to_T(a)
    return CharFactor(psi, tuple(a), tuple(P))


def char_invariants(cf: CharFactor, L: LocalField) -> tuple[int, int]:
    """(mu_psi, lambda_psi): least valuation of a T-coefficient and where it first occurs."""
    while True:
        vals = []
        exhausted = False
        for c in cf.P:
            if c == 0:
                vals.append(None)
                continue
            v = valuation(embed(c, L))
            if isinstance(v, AtLeast):
                exhausted = True
                break
            vals.append(v)
        if not exhausted:
            break
        if L.precision * 2 > MAX_PRECISION:
            raise PrecisionExhausted(f"valuation not resolved at {L.precision} digits")
        L = L.with_precision(L.precision * 2)
    finite = [v for v in vals if v is not None]
    mu = min(finite)
    cf.mu_psi, cf.lambda_psi = mu, vals.index(mu)
    return cf.mu_psi, cf.lambda_psi


def all_char_factors(d: VoltageDatum, L: LocalField) -> list[CharFactor]:
    out = []
    for psi in characters(d.group):
        cf = char_factor(d, psi)
        char_invariants(cf, L)
        out.append(cf)
    return out


def _cyc_poly_product(polys, N: int) -> list:
    acc = [CycInt.const(N, 1)]
    for p in polys:
        acc = poly_mul(acc, list(p))
    return acc


def _rational_ints(coeffs) -> list[int] | None:
    out = []
    for c in coeffs:
        if isinstance(c, CycInt):
            if not c.is_rational():
                return None
            out.append(c.to_integer())
        else:
            out.append(c)
    return out


def factorization_check(X: Multigraph, d: VoltageDatum, det: LaurentPoly | None = None) -> bool:
    """x^(m_beta |G|) det M(x) == prod_psi P_psi(x), exactly."""
    det = det_laurent(voltage_matrix(X, d)) if det is None else det
    N = d.group.exponent
    prod = _cyc_poly_product((char_factor(d, psi).a for psi in characters(d.group)), N)
    ints = _rational_ints(prod)
    if ints is None:
        raise NonRationalProduct("product of all P_psi has irrational coefficients")
    return LaurentPoly.make(0, ints) == det.shift(d.m_beta * d.group.order)


def aggregate_check(glob: IwasawaResult, per_char: list[CharFactor], e: int) -> bool:
    mu_sum = sum(cf.mu_psi for cf in per_char)
    lam_sum = sum(cf.lambda_psi for cf in per_char)
    return e * glob.mu == mu_sum and glob.lam == lam_sum - 1


@dataclass
class OrbitReport:
    decomposition_orbits: list = field(default_factory=list)  # dicts per orbit
    galois_products: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(o["ok"] for o in self.decomposition_orbits if o["rational"]) and all(
            o["ok"] for o in self.galois_products
        )


def orbit_cross_check(d: VoltageDatum, orbits: GaloisOrbitPartition, per_char: list[CharFactor], e: int) -> OrbitReport:
    """Compare per-character local invariants against rational orbit products."""
    ell, N = d.ell, d.group.exponent
    by_exp = {cf.psi.exponents: cf for cf in per_char}
    report = OrbitReport()
    for orbit in orbits.orbits:
        cfs = [by_exp[psi.exponents] for psi in orbit]
        prod = _cyc_poly_product((cf.P for cf in cfs), N)
        ints = _rational_ints(prod)
        entry = {"orbit": [list(psi.exponents) for psi in orbit], "rational": ints is not None}
        same = len({(cf.mu_psi, cf.lambda_psi) for cf in cfs}) == 1
        if ints is not None:
            mu_z, lam_z = int_mu_lambda(ints, ell)
            entry.update(mu=mu_z, **{"lambda": lam_z})
            entry["ok"] = (
                same
                and e * mu_z == sum(cf.mu_psi for cf in cfs)
                and lam_z == sum(cf.lambda_psi for cf in cfs)
            )
        else:
            entry["ok"] = same
        report.decomposition_orbits.append(entry)
    units = [c for c in range(1, N + 1) if gcd(c, N) == 1]
    seen = set()
    for cf in per_char:
        members = tuple(sorted(cf.psi.power(c).exponents for c in units))
        if members in seen:
            continue
        seen.add(members)
        conj = [by_exp[x] for x in members]
        prod = _cyc_poly_product((c.P for c in conj), N)
        ints = _rational_ints(prod)
        if ints is None:
            raise NonRationalProduct(f"Galois product for {cf.psi.exponents} is irrational")
        mu_z, lam_z = int_mu_lambda(ints, ell)
        report.galois_products.append({
            "character": list(cf.psi.exponents),
            "mu": mu_z,
            "lambda": lam_z,
            "ok": e * mu_z == sum(c.mu_psi for c in conj) and lam_z == sum(c.lambda_psi for c in conj),
        })
    return report


@dataclass
class QuickCriteria:
    unit_constant: dict  # nontrivial psi exponents -> residue(P_psi(0)) != 0
    trivial_square_sum_unit: bool  # sum beta(s)^2 / 2, the T^2 coefficient of P_1 up to sign, is a unit
    singleton_index: int | None  # some j != m_beta with |S_j| = 1
    literal_singleton_index: int | None  # same with the j != 0 reading
    mu_zero_predicted: bool
    literal_square_sum_unit: bool = False  # sum beta(s)^2 itself a unit; never true for l = 2

    @property
    def readings_disagree(self) -> bool:
        return (self.singleton_index is None) != (self.literal_singleton_index is None)


def quick_criteria(d: VoltageDatum, L: LocalField) -> QuickCriteria:
    unit = {}
    for psi in characters(d.group):
        if psi.is_trivial:
            continue
        const = CycInt.const(L.N, d.r)
        for s in d.gens:
            const = const - CycInt.zeta(L.N, char_pairing(psi, s))
        unit[psi.exponents] = any(residue(embed(const, L)))
    squares = sum(b * b for b in d.beta)  # even, since beta(-s) = -beta(s) and beta vanishes on involutions
    square_sum = (squares // 2) % d.ell != 0
    parts = d.S_partition
    amended = next((j for j, S in parts.items() if len(S) == 1 and j != d.m_beta), None)
    literal = next((j for j, S in parts.items() if len(S) == 1 and j != 0), None)
    return QuickCriteria(unit, square_sum, amended, literal, amended is not None, squares % d.ell != 0)


def criteria_checks(glob: IwasawaResult, per_char: list[CharFactor], qc: QuickCriteria, d: VoltageDatum) -> dict[str, bool]:
    """Residue-field predictions against the local-field computation."""
    trivial = next(cf for cf in per_char if cf.psi.is_trivial)
    unit_ok = all(
        qc.unit_constant[cf.psi.exponents] == ((cf.mu_psi, cf.lambda_psi) == (0, 0))
        for cf in per_char
        if not cf.psi.is_trivial
    )
    p1_deriv = trivial.P[1] if len(trivial.P) > 1 else 0
    trivial_ok = (
        trivial.lambda_psi >= 2
        and p1_deriv == 0
        and trivial.P[0] == 0
        and qc.trivial_square_sum_unit == ((trivial.mu_psi, trivial.lambda_psi) == (0, 2))
    )
    singleton_ok = not qc.mu_zero_predicted or (glob.mu == 0 and all(cf.mu_psi == 0 for cf in per_char))
    return {"unit_constant": unit_ok, "trivial_character": trivial_ok, "singleton": singleton_ok}


@dataclass
class CompleteGraphResult:
    n: int
    ell: int
    beta: tuple[int, ...]
    hypothesis_met: bool  # l does not divide n and sum beta^2 / 2 is a unit
    mu: int
    lam: int
    literal_hypothesis: bool = False  # same with sum beta^2 in place of its half

    @property
    def predicted(self) -> tuple[int, int] | None:
        return (0, 1) if self.hypothesis_met else None


def complete_graph_invariants(n: int, beta, ell: int, strict: bool = False) -> CompleteGraphResult:
    """K_n = Cay(Z/n, Z/n minus 0) with beta listed for s = 1 .. n-1."""
    if n < 4:
        raise AssumptionViolated("K_n needs n >= 4 (n = 3 is a cycle graph)")
    G = FiniteAbelianGroup.cyclic(n)
    gens = list(range(1, n))
    d = VoltageDatum(G, tuple(gens), tuple(beta), ell)
    validate_voltage(d)
    X = build_cayley(G, gens)
    res = iwasawa_series(X, d)
    squares = sum(b * b for b in d.beta)
    hyp = n % ell != 0 and (squares // 2) % ell != 0
    literal = n % ell != 0 and squares % ell != 0
    if hyp and (res.mu, res.lam) != (0, 1):
        raise TheoremViolation(f"K_{n}, l={ell}, beta={beta}: got ({res.mu}, {res.lam}) instead of (0, 1)")
    if strict and not hyp:
        raise HypothesisNotMet(f"K_{n} with l={ell}: need l not dividing n and sum beta^2 / 2 nonzero mod l")
    return CompleteGraphResult(n, ell, d.beta, hyp, res.mu, res.lam, literal)


@dataclass
class TowerRow:
    n: int
    vertices: int
    e_n: int
    nu_n: int


@dataclass
class TowerReport:
    rows: list[TowerRow]
    mu: int
    lam: int
    nu: int | None
    n0: int | None


def fit_nu(rows: list[TowerRow]) -> tuple[int | None, int | None]:
    """(nu, n0): the final nu_n value once it holds for at least two consecutive levels."""
    if len(rows) < 2 or rows[-1].nu_n != rows[-2].nu_n:
        return None, None
    nu = rows[-1].nu_n
    k = len(rows) - 1
    while k > 0 and rows[k - 1].nu_n == nu:
        k -= 1
    return nu, rows[k].n


def tower_report(X: Multigraph, d: VoltageDatum, depth: int, result: IwasawaResult | None = None) -> TowerReport:
    if depth < 2:
        raise DepthTooSmall("tower depth must be at least 2")
    if not tower_connected(X, d):
        raise TowerDisconnected("the voltage assignment does not surject onto Z_l")
    result = iwasawa_series(X, d) if result is None else result
    alpha = edge_voltages(X, d)
    rows = []
    for n in range(depth + 1):
        Xn = derived_graph(X, d, n, alpha)
        e_n = kappa_ell_exponent(Xn, d.ell)
        nu_n = e_n - result.mu * d.ell ** n - result.lam * n
        rows.append(TowerRow(n, Xn.vertex_count, e_n, nu_n))
    nu, n0 = fit_nu(rows)
    result.nu, result.n0 = nu, n0
    return TowerReport(rows, result.mu, result.lam, nu, n0)


def local_field_for(d: VoltageDatum, precision: int = 32) -> LocalField:
    return build_local_field(d.ell, d.group.exponent, precision)


def galois_orbits_for(d: VoltageDatum) -> GaloisOrbitPartition:
    return galois_orbits(d.group, d.ell)
