import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cayley_iwasawa.cyclotomic import CycInt, euler_phi
from cayley_iwasawa.errors import IncompatibleShapes, PrecisionTooLow
from cayley_iwasawa.localfield import AtLeast, build_local_field, embed, residue, residue_field_modulus, valuation

from oracles import inert_valuation, single_prime_above


@pytest.mark.parametrize(
    "ell, N, f, e",
    [(3, 4, 2, 1), (2, 6, 2, 1), (3, 9, 1, 6), (2, 12, 2, 2), (2, 8, 1, 4), (5, 4, 1, 1), (7, 1, 1, 1), (2, 5, 4, 1)],
)
def test_degrees(ell, N, f, e):
    L = build_local_field(ell, N)
    assert (L.f, L.e) == (f, e)
    assert L.zeta_embedding ** N == 1
    if N > 1:
        assert all(L.zeta_embedding ** k != 1 for k in range(1, N))


def test_split_case_square_root_of_minus_one():
    L = build_local_field(5, 4)
    i = embed(CycInt.zeta(4), L)
    assert i * i == -1
    assert i.c[0] % 5 in (2, 3)


def test_valuation_of_integers():
    L = build_local_field(2, 12)
    assert valuation(L.from_int(2)) == L.e
    assert valuation(L.from_int(6)) == L.e
    assert valuation(L.from_int(48)) == 4 * L.e
    assert valuation(embed(6, build_local_field(2, 6))) == 1


def test_uniformizer_valuation():
    L = build_local_field(3, 9)
    one_minus_zeta = embed(1 - CycInt.zeta(9), L)
    assert valuation(one_minus_zeta) == 1
    assert valuation(L.uniformizer) == 1


def test_zero_and_deep_values_report_lower_bounds():
    L = build_local_field(3, 4, 16)
    assert valuation(L.from_int(0)) == AtLeast(16)
    assert isinstance(valuation(L.from_int(3**14)), AtLeast)
    assert valuation(L.from_int(3**11)) == 11


def test_precision_floor():
    with pytest.raises(PrecisionTooLow):
        build_local_field(3, 4, 4)


def test_foreign_level_rejected():
    with pytest.raises(IncompatibleShapes):
        embed(CycInt.zeta(3), build_local_field(2, 6))


def test_residue_field_modulus_is_irreducible_factor():
    L = build_local_field(2, 7)
    assert L.f == 3
    assert len(residue_field_modulus(L)) == 4
    z = embed(CycInt.zeta(7), L)
    assert residue(z) == (0, 1, 0)


cases = st.sampled_from([(2, 6), (3, 4), (2, 12), (3, 9), (5, 4), (2, 8), (3, 12), (5, 10)])


def _cyc(N):
    return st.lists(st.integers(-50, 50), min_size=euler_phi(N), max_size=euler_phi(N)).map(lambda c: CycInt(N, c))


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_embedding_is_a_ring_homomorphism(data):
    ell, N = data.draw(cases)
    L = build_local_field(ell, N)
    a, b = data.draw(_cyc(N)), data.draw(_cyc(N))
    assert embed(a + b, L) == embed(a, L) + embed(b, L)
    assert embed(a * b, L) == embed(a, L) * embed(b, L)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_valuation_agrees_with_norm_when_l_is_inert(data):
    ell, N = data.draw(st.sampled_from([(2, 6), (3, 4), (2, 12), (3, 9), (2, 8), (5, 10), (2, 5)]))
    assert single_prime_above(N, ell)
    L = build_local_field(ell, N)
    a = data.draw(_cyc(N))
    if not a:
        return
    assert valuation(embed(a, L)) == inert_valuation(a.c, N, ell)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_valuation_is_additive(data):
    ell, N = data.draw(cases)
    L = build_local_field(ell, N)
    a, b = data.draw(_cyc(N)), data.draw(_cyc(N))
    if not a or not b:
        return
    va, vb = valuation(embed(a, L)), valuation(embed(b, L))
    assert valuation(embed(a * b, L)) == va + vb
