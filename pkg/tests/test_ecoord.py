from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hurwitz_amf.ecoord import (
    F3_Y,
    F6M_Y,
    delta_eps_apply,
    delta_eps_matrix,
    dim_EH_formula,
    e_to_y,
    ebasis,
    ecoord_basis,
    ecoord_dimension,
    ecoord_to_x,
    ecoord_to_y,
    signature,
    weighted_monomials,
)
from hurwitz_amf.harmonic_basis import basis, expected_dimension, verify_membership
from hurwitz_amf.polyring import Frame, HomogeneousPoly, change_frame_xy, laplacian_y, mul, parse_poly

EPS = [(0, 0), (0, 1), (1, 0), (1, 1)]


@st.composite
def weighted_polys(draw, max_m=16):
    m = 2 * draw(st.integers(0, max_m // 2))
    mons = weighted_monomials(m)
    chosen = draw(st.lists(st.sampled_from(mons), min_size=1, max_size=len(mons), unique=True))
    coeffs = draw(st.lists(st.integers(-9, 9), min_size=len(chosen), max_size=len(chosen)))
    return HomogeneousPoly(m, dict(zip(chosen, coeffs)), Frame.E)


def test_weighted_monomials_order_and_count():
    assert weighted_monomials(0) == ((0, 0, 0),)
    assert weighted_monomials(6) == ((3, 0, 0), (1, 1, 0), (0, 0, 1))
    assert len(weighted_monomials(12)) == 7
    with pytest.raises(ValueError):
        weighted_monomials(5)


def test_known_kernel_element():
    F = HomogeneousPoly(4, {(2, 0, 0): 1, (0, 1, 0): -5}, Frame.E)
    assert delta_eps_apply(0, 0, F).is_zero()


@given(weighted_polys(), st.sampled_from(EPS))
@settings(max_examples=60, deadline=None)
def test_operator_is_the_transported_laplacian(F, eps):
    e1, e2 = eps
    assert laplacian_y(ecoord_to_y(e1, e2, F)) == ecoord_to_y(e1, e2, delta_eps_apply(e1, e2, F))


@given(weighted_polys(), st.sampled_from(EPS))
@settings(max_examples=40, deadline=None)
def test_matrix_matches_operator(F, eps):
    if F.degree < 2:
        return
    M = delta_eps_matrix(F.degree, *eps)
    vec = M.apply([F.coeff(t) for t in weighted_monomials(F.degree)])
    G = delta_eps_apply(*eps, F)
    assert vec == [G.coeff(t) for t in weighted_monomials(F.degree - 2)]


def test_divisors_in_y():
    assert F3_Y == parse_poly("-y1*y2*y3", "y")
    diffs = [parse_poly(t, "y") for t in ("y1^2 - y2^2", "y1^2 - y3^2", "y2^2 - y3^2")]
    assert F6M_Y * 64 == mul(mul(diffs[0], diffs[1]), diffs[2])
    assert F6M_Y.coeff((4, 2, 0)) == Fraction(1, 64)


def test_divisors_match_table(table_a):
    assert change_frame_xy(F3_Y) == table_a["f_3+"]
    assert change_frame_xy(F6M_Y) == table_a["f_6-"]


@pytest.mark.parametrize("m", range(0, 62, 2))
@pytest.mark.parametrize("eps", EPS)
def test_kernel_dimension_formula(m, eps):
    assert len(ebasis(m, *eps)) == dim_EH_formula(m)


def test_one_dimensional_kernels_are_normalized():
    for m in (4, 6, 8, 10):
        for eps in EPS:
            (F,) = ebasis(m, *eps)
            assert F.coeff((m // 2, 0, 0)) == 1


def test_listed_kernels_match(kernels_b):
    for name, F in kernels_b.items():
        m = F.degree
        eps = tuple(int(c) for c in name.split("_")[2][:2])
        assert delta_eps_apply(*eps, F).is_zero()
        if len(ebasis(m, *eps)) == 1:
            assert ebasis(m, *eps)[0] == F


def test_signature():
    assert signature(12, "minus") == (6, 0, 1)
    assert signature(9, "minus") == (0, 1, 1)
    assert signature(7, "plus") == (4, 1, 0)
    assert signature(5, "minus") is None
    with pytest.raises(ValueError):
        signature(4, "gamma")


@pytest.mark.parametrize("l", range(0, 25))
@pytest.mark.parametrize("variant", ["plus", "minus", "gamma"])
def test_matches_main_algorithm(l, variant):
    e = ecoord_basis(l, variant)
    m = basis(l, variant)
    assert (e.basis, e.scales) == (m.basis, m.scales)
    assert ecoord_dimension(l, variant) == expected_dimension(l, variant)


def test_conversion_rejects_non_kernel_input():
    F = HomogeneousPoly(4, {(2, 0, 0): 1}, Frame.E)
    with pytest.raises(ValueError):
        ecoord_to_x(0, 0, F)


@pytest.mark.parametrize("m", [0, 4, 6, 12])
@pytest.mark.parametrize("eps", EPS)
def test_converted_kernels_are_members(m, eps):
    variant = "minus" if eps[1] else "plus"
    for F in ebasis(m, *eps):
        f = ecoord_to_x(*eps, F)
        assert f.degree == m + 3 * eps[0] + 6 * eps[1]
        assert verify_membership(f, variant).ok
        assert e_to_y(F).frame is Frame.Y
