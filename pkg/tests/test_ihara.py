import pytest

from cayley_iwasawa.abelian import FiniteAbelianGroup
from cayley_iwasawa.cyclotomic import CycInt
from cayley_iwasawa.errors import AssumptionViolated
from cayley_iwasawa.ihara import (
    artin_check,
    class_number_check,
    h_at_one,
    h_poly,
    special_value_check,
    twisted_adjacency,
    zeta_inverse,
    zeta_inverse_poly,
)
from cayley_iwasawa.laurent import LaurentPoly
from cayley_iwasawa.multigraph import build_cayley, matrices
from cayley_iwasawa.voltage import VoltageDatum

from oracles import ihara_h


def setup(n, gens, beta, ell):
    d = VoltageDatum(FiniteAbelianGroup.cyclic(n), tuple(gens), tuple(beta), ell)
    return build_cayley(d.group, d.gens), d


K4 = setup(4, [1, 2, 3], [1, 0, -1], 3)
K6 = setup(6, [1, 2, 3, 4, 5], [1, 1, 0, -1, -1], 2)


def _pairs(X):
    return [X.edges[e] for e in X.undirected_representatives]


@pytest.mark.parametrize("case", [K4, K6], ids=["k4", "k6"])
def test_h_matches_sympy(case):
    X, _ = case
    chi_exp, h = zeta_inverse(X)
    assert h == ihara_h(X.vertex_count, _pairs(X))
    assert h[0] == 1


def test_class_number_formula_values():
    for X, expected in ((K4[0], 64), (K6[0], 23328)):
        _, h = zeta_inverse(X)
        assert LaurentPoly.make(0, h).derivative().evaluate_at(1) == expected
        assert LaurentPoly.make(0, h).evaluate_at(1) == 0
        assert class_number_check(X)


def test_zeta_normalisation():
    X, _ = K4
    k, _ = zeta_inverse(X)
    assert k == 2
    assert zeta_inverse_poly(X)[0] == 1


def test_cycle_graph_rejected():
    X = build_cayley(FiniteAbelianGroup.cyclic(6), [1, 5])
    with pytest.raises(AssumptionViolated):
        zeta_inverse(X)


def test_trivial_twist_is_plain_adjacency():
    X, d = K6
    A = twisted_adjacency(X, d, 1, 0)
    plain, _, _ = matrices(X)
    assert [[z.to_integer() for z in row] for row in A.matrix] == plain.tolist()
    total = [[sum(A.counts[s][i][j] for s in range(A.modulus)) for j in range(6)] for i in range(6)]
    assert total == plain.tolist()


def test_conjugate_character_conjugates_matrix():
    X, d = K4
    A = twisted_adjacency(X, d, 1, 1)
    B = twisted_adjacency(X, d, 1, 2)
    for ra, rb in zip(A.matrix, B.matrix):
        for a, b in zip(ra, rb):
            assert a.complex_conjugate() == b


def test_basepoint_choice_does_not_change_h():
    X, d = K4
    h0 = h_poly(X, twisted_adjacency(X, d, 2, 1))
    h1 = h_poly(X, twisted_adjacency(X, d, 2, 1, basepoints=[0, 4, 7, 2]))
    assert h0 == h1


def test_twisted_h_entries_live_in_the_right_ring():
    X, d = K4
    A = twisted_adjacency(X, d, 1, 1)
    assert all(isinstance(z, CycInt) and z.N == 3 for row in A.matrix for z in row)
    assert h_at_one(X, A) != 0


@pytest.mark.parametrize("case", [K4, K6], ids=["z4", "z6"])
@pytest.mark.parametrize("n", [0, 1, 2])
def test_artin_formalism(case, n):
    X, d = case
    assert artin_check(X, d, n)


@pytest.mark.parametrize("case", [K4, K6], ids=["z4", "z6"])
@pytest.mark.parametrize("n", [1, 2])
def test_special_values(case, n):
    X, d = case
    assert special_value_check(X, d, n)


@pytest.mark.parametrize("case", [K4, K6], ids=["z4", "z6"])
def test_special_value_at_one_minus_zeta_does_not_hold(case):
    X, d = case
    assert not special_value_check(X, d, 1, literal=True)
