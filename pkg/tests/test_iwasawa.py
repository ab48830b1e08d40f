import pytest
import sympy as sp

from cayley_iwasawa.abelian import FiniteAbelianGroup, characters
from cayley_iwasawa.errors import AssumptionViolated, DepthTooSmall, HypothesisNotMet, TowerDisconnected
from cayley_iwasawa.iwasawa import (
    aggregate_check,
    all_char_factors,
    char_factor,
    complete_graph_invariants,
    criteria_checks,
    factorization_check,
    fit_nu,
    galois_orbits_for,
    int_mu_lambda,
    iwasawa_series,
    local_field_for,
    orbit_cross_check,
    quick_criteria,
    tower_report,
    voltage_matrix,
    weierstrass_preparation,
    TowerRow,
)
from cayley_iwasawa.laurent import LaurentPoly, poly_mul
from cayley_iwasawa.multigraph import build_cayley
from cayley_iwasawa.voltage import VoltageDatum

from oracles import cayley_voltage_det, inert_valuation, laurent_coeffs, single_prime_above


def setup(n, gens, beta, ell):
    d = VoltageDatum(FiniteAbelianGroup.cyclic(n), tuple(gens), tuple(beta), ell)
    return build_cayley(d.group, d.gens), d


K4 = setup(4, [1, 2, 3], [1, 0, -1], 3)
K6 = setup(6, [1, 2, 3, 4, 5], [1, 1, 0, -1, -1], 2)


def test_voltage_matrix_specialises_to_laplacian():
    X, d = K6
    M = voltage_matrix(X, d)
    for row in M:
        assert sum(p.evaluate_at(1) for p in row) == 0


@pytest.mark.parametrize("case", [K4, K6], ids=["z4", "z6"])
def test_determinant_matches_sympy(case):
    X, d = case
    res = iwasawa_series(X, d)
    low, coeffs = laurent_coeffs(cayley_voltage_det(d.group.order, [g[0] for g in d.gens], d.beta))
    assert res.det == LaurentPoly.make(low, coeffs)


def test_first_example_invariants():
    X, d = K4
    res = iwasawa_series(X, d)
    assert (res.mu, res.lam) == (0, 1)
    assert res.shift == 4
    assert res.distinguished.coeffs == (0, 1)


def test_second_example_invariants():
    X, d = K6
    res = iwasawa_series(X, d)
    assert (res.mu, res.lam) == (2, 9)
    P = res.distinguished.coeffs
    assert len(P) == 10 and P[-1] == 1 and all(c % 2 == 0 for c in P[:-1])


def test_weierstrass_factorisation_reproduces_input():
    coeffs = [6, -3, 9, 1, 4, 2]  # mu = 0, lambda = 3 at l = 3
    mu, P, V = weierstrass_preparation(coeffs, 3, precision=12)
    assert mu == 0 and len(P) == 4 and P[-1] == 1
    assert all(c % 3 == 0 for c in P[:-1])
    assert V[0] % 3 != 0
    q = 3 ** 12
    prod = poly_mul(list(P), list(V))
    prod += [0] * (len(coeffs) - len(prod))
    assert [(a - b) % q for a, b in zip(coeffs, prod)] == [0] * len(coeffs)
    assert all(c % q == 0 for c in prod[len(coeffs):])


def test_weierstrass_with_content():
    mu, P, _ = weierstrass_preparation([12, 4, 8], 2, precision=10)
    assert (mu, P) == (2, (1,))
    assert int_mu_lambda([0, 8, 4], 2) == (2, 2)


def test_character_factor_of_trivial_character():
    X, d = K4
    cf = char_factor(d, characters(d.group)[0])
    T = sp.Symbol("T")
    expected = sp.Poly(sp.expand(3 * (1 + T) - (1 + T) ** 0 - (1 + T) - (1 + T) ** 2), T)
    assert [c.to_integer() for c in cf.P] == [int(c) for c in reversed(expected.all_coeffs())]


@pytest.mark.parametrize(
    "case, table",
    [
        (K4, [(0, 2), (0, 0), (0, 0), (0, 0)]),
        (K6, [(1, 2), (0, 2), (0, 2), (1, 0), (0, 2), (0, 2)]),
    ],
    ids=["z4", "z6"],
)
def test_character_table(case, table):
    X, d = case
    L = local_field_for(d)
    cfs = all_char_factors(d, L)
    assert [(cf.mu_psi, cf.lambda_psi) for cf in cfs] == table


@pytest.mark.parametrize("case", [K4, K6], ids=["z4", "z6"])
def test_character_valuations_against_norms(case):
    X, d = case
    N = d.group.exponent
    assert single_prime_above(N, d.ell)
    L = local_field_for(d)
    for cf in all_char_factors(d, L):
        vals = [inert_valuation(c.c, N, d.ell) if c != 0 else None for c in cf.P]
        finite = [v for v in vals if v is not None]
        assert cf.mu_psi == min(finite)
        assert cf.lambda_psi == vals.index(min(finite))


@pytest.mark.parametrize("case", [K4, K6], ids=["z4", "z6"])
def test_all_identities(case):
    X, d = case
    res = iwasawa_series(X, d)
    L = local_field_for(d)
    cfs = all_char_factors(d, L)
    assert factorization_check(X, d, res.det)
    assert aggregate_check(res, cfs, L.e)
    assert orbit_cross_check(d, galois_orbits_for(d), cfs, L.e).ok
    assert all(criteria_checks(res, cfs, quick_criteria(d, L), d).values())


def test_non_cyclic_group():
    d = VoltageDatum(FiniteAbelianGroup((2, 4)), ((0, 1), (0, 3), (1, 0), (1, 2)), (1, -1, 0, 0), 3)
    X = build_cayley(d.group, d.gens)
    res = iwasawa_series(X, d)
    L = local_field_for(d)
    cfs = all_char_factors(d, L)
    assert factorization_check(X, d, res.det)
    assert aggregate_check(res, cfs, L.e)


def test_singleton_readings():
    _, d = K6
    qc = quick_criteria(d, local_field_for(d))
    assert qc.singleton_index is None
    assert qc.literal_singleton_index == 1
    assert qc.readings_disagree and not qc.mu_zero_predicted
    _, d = K4
    qc = quick_criteria(d, local_field_for(d))
    assert qc.singleton_index == 0 and qc.mu_zero_predicted


def test_literal_square_sum_criterion_fails_at_two():
    # sum beta^2 is always even; the T^2 coefficient of P_1 is half of it
    X, d = setup(5, [1, 2, 3, 4], [1, 0, 0, -1], 2)
    L = local_field_for(d)
    cfs = all_char_factors(d, L)
    trivial = next(cf for cf in cfs if cf.psi.is_trivial)
    qc = quick_criteria(d, L)
    assert (trivial.mu_psi, trivial.lambda_psi) == (0, 2)
    assert qc.trivial_square_sum_unit
    assert not qc.literal_square_sum_unit


def test_complete_graphs():
    r = complete_graph_invariants(5, (1, 2, -2, -1), 3)
    assert r.hypothesis_met and (r.mu, r.lam) == (0, 1) and r.predicted == (0, 1)
    r = complete_graph_invariants(6, (1, 1, 0, -1, -1), 2)
    assert not r.hypothesis_met and r.predicted is None and (r.mu, r.lam) == (2, 9)
    with pytest.raises(HypothesisNotMet):
        complete_graph_invariants(6, (1, 1, 0, -1, -1), 2, strict=True)
    with pytest.raises(AssumptionViolated):
        complete_graph_invariants(3, (1, -1), 2)


def test_tower_first_example():
    X, d = K4
    rep = tower_report(X, d, 3)
    assert [r.e_n for r in rep.rows] == [0, 1, 2, 3]
    assert (rep.nu, rep.n0) == (0, 0)


def test_tower_errors():
    X, d = K4
    with pytest.raises(DepthTooSmall):
        tower_report(X, d, 1)
    flat = VoltageDatum(d.group, d.gens, (3, 0, -3), 3)
    with pytest.raises(TowerDisconnected):
        tower_report(X, flat, 2)
    with pytest.raises(TowerDisconnected):
        iwasawa_series(X, flat)


def test_nu_fit():
    rows = [TowerRow(n, 0, 0, v) for n, v in enumerate([2, -2, 4, 4, 4])]
    assert fit_nu(rows) == (4, 2)
    assert fit_nu(rows[:3]) == (None, None)
