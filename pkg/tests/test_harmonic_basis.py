from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings

from conftest import polys
from hurwitz_amf.exact_linalg import row_space_rref
from hurwitz_amf.harmonic_basis import (
    Variant,
    average_matrix_int,
    basis,
    expected_dimension,
    group_order,
    in_span,
    t2_sign,
    verify_membership,
)
from hurwitz_amf.hecke_spectral import apply_T2, is_gamma_invariant
from hurwitz_amf.polyring import HomogeneousPoly, act, dim_forms, primitive_normalize
from hurwitz_amf.quaternion import gamma_list

VARIANTS = list(Variant)


@pytest.mark.parametrize("l", range(0, 21))
@pytest.mark.parametrize("variant", VARIANTS)
def test_dimension_matches_closed_form(l, variant):
    assert len(basis(l, variant)) == expected_dimension(l, variant)


@pytest.mark.parametrize("l", range(0, 13))
@pytest.mark.parametrize("variant", VARIANTS)
def test_exact_and_modular_pipelines_agree(l, variant):
    exact, modular = basis(l, variant, method="exact"), basis(l, variant, method="modular")
    assert (exact.basis, exact.scales) == (modular.basis, modular.scales)


@pytest.mark.parametrize("l", range(0, 17))
@pytest.mark.parametrize("variant", VARIANTS)
def test_every_element_is_a_member(l, variant):
    res = basis(l, variant)
    for f, s in zip(res.basis, res.scales):
        assert verify_membership(f, variant).ok
        assert primitive_normalize(f) == (f, Fraction(1))
        assert (f * s).leading()[1] == 1


@pytest.mark.parametrize("l", range(0, 17))
def test_plus_and_minus_split_the_full_space(l):
    full = basis(l, "gamma")
    signed = basis(l, "plus").basis + basis(l, "minus").basis
    assert row_space_rref([f.to_vector() for f in signed]) == row_space_rref([f.to_vector() for f in full.basis])
    for f in basis(l, "plus").basis:
        assert apply_T2(f) == f * t2_sign(l, "plus")


@pytest.mark.parametrize("l", range(0, 7))
@pytest.mark.parametrize("variant", VARIANTS)
def test_average_matrix_is_a_scaled_projector(l, variant):
    A = average_matrix_int(l, variant).astype(object)
    n = group_order(variant)
    assert (A.dot(A) == n * A).all()
    assert np.trace(A) % n == 0


def test_echelon_shape_in_degree_twelve(table_a):
    f1, f2 = basis(12, "plus").basis
    assert f1.coeff((12, 0, 0)) != 0 and f1.coeff((9, 3, 0)) == 0
    assert f2.coeff((12, 0, 0)) == 0
    assert {f1, f2} == {primitive_normalize(table_a["f_12+(1)"])[0], primitive_normalize(table_a["f_12+(2)"])[0]}


@pytest.mark.parametrize(
    "name,variant,scale",
    [
        ("f_3+", "plus", 1),
        ("f_4+", "plus", Fraction(1, 3)),
        ("f_6+", "plus", 1),
        ("f_6-", "minus", -1),
        ("f_7+", "plus", Fraction(1, 3)),
        ("f_10+", "plus", Fraction(1, 3)),
        ("f_10-", "minus", Fraction(-1, 3)),
        ("f_9-", "minus", -1),
        ("f_12+(2)", "plus", 1),
        ("f_12-", "minus", -1),
    ],
)
def test_listed_entries_are_rational_multiples_of_the_basis(table_a, name, variant, scale):
    f = table_a[name]
    prim, s = primitive_normalize(f)
    res = basis(f.degree, variant)
    assert in_span(res, f)
    assert prim in res.basis
    assert f == prim * s
    assert s == scale


@given(polys(max_degree=6))
@settings(max_examples=40, deadline=None)
def test_averaging_produces_invariants(f):
    avg = HomogeneousPoly.zero(f.degree)
    for g in gamma_list():
        avg = avg + act(g, f)
    assert is_gamma_invariant(avg)


@given(polys(min_degree=3, max_degree=8))
@settings(max_examples=30, deadline=None)
def test_random_forms_are_rarely_members(f):
    rep = verify_membership(f)
    if rep.ok:
        assert in_span(basis(f.degree, "gamma"), f)


def test_membership_rejects_non_harmonic_invariant():
    from hurwitz_amf.polyring import mul, norm_form

    f = mul(norm_form(), basis(4, "plus").basis[0])
    rep = verify_membership(f, "plus")
    assert rep.invariant and not rep.harmonic and not rep.ok


def test_variant_aliases_and_errors():
    assert basis(6, "+") == basis(6, Variant.PLUS)
    with pytest.raises(ValueError):
        basis(-1)
    with pytest.raises(ValueError):
        basis(4, "sideways")
    with pytest.raises(ValueError):
        basis(4, method="guess")


def test_low_degrees():
    assert basis(0, "gamma").basis == (HomogeneousPoly.constant(1),)
    assert len(basis(1, "gamma")) == len(basis(2, "gamma")) == 0
    assert dim_forms(12) == 91
