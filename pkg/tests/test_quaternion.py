from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hurwitz_amf.exact_linalg import RationalMatrix
from hurwitz_amf.polyring import Frame
from hurwitz_amf.quaternion import (
    GAMMA1,
    GAMMA2,
    GEN_I,
    GEN_J,
    GEN_W,
    IDENTITY,
    HurwitzQuaternion,
    RotationMatrix,
    conjugacy_classes,
    gamma_gamma2_list,
    gamma_list,
    hecke_coset_reps,
    hecke_cosets,
    hecke_matrices,
    norm_elements,
    quat_conj,
    quat_mul,
    quat_norm,
    quat_trace,
    rho,
    unit_group,
)

# the twelve rotations of Gamma and the coset Gamma*gamma2, as printed tables
GAMMA_TABLE = [
    [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
    [[0, 0, 1], [1, 0, 0], [0, 1, 0]],
    [[0, 1, 0], [0, 0, 1], [1, 0, 0]],
    [[-1, -1, -1], [0, 0, 1], [0, 1, 0]],
    [[-1, -1, -1], [0, 1, 0], [1, 0, 0]],
    [[-1, -1, -1], [1, 0, 0], [0, 0, 1]],
    [[0, 0, 1], [-1, -1, -1], [1, 0, 0]],
    [[0, 1, 0], [-1, -1, -1], [0, 0, 1]],
    [[1, 0, 0], [-1, -1, -1], [0, 1, 0]],
    [[0, 1, 0], [1, 0, 0], [-1, -1, -1]],
    [[1, 0, 0], [0, 0, 1], [-1, -1, -1]],
    [[0, 0, 1], [0, 1, 0], [-1, -1, -1]],
]
GAMMA_GAMMA2_TABLE = [
    [[0, -1, 0], [-1, 0, 0], [0, 0, -1]],
    [[0, 0, -1], [0, -1, 0], [-1, 0, 0]],
    [[-1, 0, 0], [0, 0, -1], [0, -1, 0]],
    [[1, 1, 1], [0, 0, -1], [-1, 0, 0]],
    [[1, 1, 1], [-1, 0, 0], [0, -1, 0]],
    [[1, 1, 1], [0, -1, 0], [0, 0, -1]],
    [[0, 0, -1], [1, 1, 1], [0, -1, 0]],
    [[-1, 0, 0], [1, 1, 1], [0, 0, -1]],
    [[0, -1, 0], [1, 1, 1], [-1, 0, 0]],
    [[-1, 0, 0], [0, -1, 0], [1, 1, 1]],
    [[0, -1, 0], [0, 0, -1], [1, 1, 1]],
    [[0, 0, -1], [-1, 0, 0], [1, 1, 1]],
]


def _rot(rows):
    return RotationMatrix(RationalMatrix(rows))


units = st.sampled_from(unit_group())
# doubled coordinates all of one parity
hurwitz = st.tuples(st.integers(0, 1), st.tuples(*[st.integers(-3, 3)] * 4)).map(
    lambda bc: HurwitzQuaternion(tuple(2 * x + bc[0] for x in bc[1]))
)


def test_generators_match_printed():
    assert GEN_I == _rot([[-1, -1, -1], [0, 0, 1], [0, 1, 0]])
    assert GEN_J == _rot([[0, 0, 1], [-1, -1, -1], [1, 0, 0]])
    assert GEN_W == _rot([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    assert GAMMA2 == _rot(GAMMA_GAMMA2_TABLE[0])


def test_gamma_tables_match_as_sets():
    assert set(gamma_list()) == {_rot(m) for m in GAMMA_TABLE}
    assert set(gamma_gamma2_list()) == {_rot(m) for m in GAMMA_GAMMA2_TABLE}
    assert len(gamma_list()) == len(gamma_gamma2_list()) == 12


def test_gamma_list_is_sorted_and_closed():
    G = gamma_list()
    assert list(G) == sorted(G, key=lambda g: g.key)
    assert {g @ h for g in G for h in G} == set(G)


def test_coset_is_gamma_times_gamma2_on_both_sides():
    G = gamma_list()
    assert {g @ GAMMA2 for g in G} == set(gamma_gamma2_list())
    assert {GAMMA2 @ g for g in G} == set(gamma_gamma2_list())
    assert {g @ GAMMA1 for g in G} == set(gamma_gamma2_list())


def test_element_orders_of_a4():
    orders = sorted(g.order() for g in gamma_list())
    assert orders == [1, 2, 2, 2] + [3] * 8


def test_unit_group():
    U = unit_group()
    assert len(U) == 24 and all(quat_norm(u) == 1 for u in U)
    w = HurwitzQuaternion((1, 1, 1, 1))
    assert quat_mul(quat_mul(w, w), w) == HurwitzQuaternion((-2, 0, 0, 0))


def test_rotations_preserve_form_and_have_det_one():
    for g in gamma_list() + gamma_gamma2_list():
        assert g.det() == 1 and g.preserves_form()
        y = g.to_frame(Frame.Y)
        assert y.matrix @ y.matrix.transpose() == RationalMatrix.identity(3)


@given(hurwitz, hurwitz)
@settings(max_examples=80, deadline=None)
def test_norm_is_multiplicative_and_trace_additive(a, b):
    assert quat_norm(quat_mul(a, b)) == quat_norm(a) * quat_norm(b)
    assert quat_trace(a + b) == quat_trace(a) + quat_trace(b)
    assert quat_conj(quat_mul(a, b)) == quat_mul(quat_conj(b), quat_conj(a))


@given(hurwitz.filter(lambda q: quat_norm(q) > 0), hurwitz.filter(lambda q: quat_norm(q) > 0))
@settings(max_examples=60, deadline=None)
def test_rho_is_multiplicative(a, b):
    assert rho(quat_mul(a, b)) == rho(a) @ rho(b)


@given(units)
@settings(max_examples=24, deadline=None)
def test_rho_of_units_lands_in_gamma_and_kills_sign(u):
    assert rho(u) in set(gamma_list())
    assert rho(-u) == rho(u)


def test_identity_and_inverse():
    for g in gamma_gamma2_list():
        assert g @ g.inverse() == IDENTITY


@pytest.mark.parametrize("n,count", [(1, 24), (2, 24), (3, 96), (5, 144), (7, 192)])
def test_norm_element_counts(n, count):
    # 24 times the sum of divisors for odd n
    assert len(norm_elements(n)) == count


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_hecke_coset_counts(p):
    cosets = hecke_cosets(p)
    assert len(cosets) == (1 if p == 2 else p + 1)
    assert sum(len(c) for c in cosets) == len(hecke_matrices(p))
    reps = hecke_coset_reps(p)
    assert all(r == min(c, key=lambda g: g.key) for r, c in zip(reps, cosets))


def test_two_conjugacy_classes_at_two():
    classes = conjugacy_classes(2)
    assert sorted(len(c) for c in classes) == [6, 6]
    assert {GAMMA1, GAMMA2} <= {c[0] for c in classes} | {g for c in classes for g in c}
    assert not any(GAMMA1 in c and GAMMA2 in c for c in classes)


def test_hecke_matrices_have_rational_entries_of_norm_denominator():
    for g in hecke_matrices(3):
        assert g.det() == 1
        assert all((x * 3).denominator == 1 for r in g.rows() for x in r)


def test_bad_parity_is_rejected():
    with pytest.raises(ValueError):
        HurwitzQuaternion((1, 0, 0, 0))
    assert HurwitzQuaternion.from_integral(1, 0, 0, 0) == HurwitzQuaternion((2, 0, 0, 0))
    assert rho(HurwitzQuaternion.from_integral(1, 1, 0, 0)) == GAMMA1
    assert GAMMA1.det() == Fraction(1)
