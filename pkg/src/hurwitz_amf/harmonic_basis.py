"""Bases of Gamma-invariant harmonic polynomials.

The image of the averaging map on degree-``l`` forms is spanned by selected
columns ``B`` of its matrix ``A``; harmonic invariants are ``B v`` with
``D B v = 0`` where ``D`` is the Laplacian matrix. The signed variants average
over the 24-element group generated by ``Gamma`` and ``gamma2`` with the sign
``+-(-1)^l`` on the coset.

Two interchangeable methods are provided:

``"exact"``
    the literal pipeline with rational reduced row echelon forms throughout;
``"modular"`` (default)
    pivot columns and the relevant rows of ``D B`` are *selected* modulo a
    large prime, and every selection is then certified in exact arithmetic
    (rank of ``A`` equals ``trace(A)/|G|`` because ``A/|G|`` is a projector,
    and each kernel vector is checked against the full ``D B``).

Both methods return the same canonical basis: the reduced echelon basis of the
space taken in descending monomial order, each element made primitive.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Sequence

import numpy as np

from .exact_linalg import (
    DEFAULT_PRIME,
    RationalMatrix,
    column_image_basis,
    kernel_basis,
    kernel_basis_int,
    pivot_columns_mod_p,
    row_space_rref,
)
from .hecke_spectral import apply_T2, dim_formula, is_gamma_invariant
from .polyring import (
    Frame,
    HomogeneousPoly,
    act,
    dim_forms,
    laplacian,
    index_of,
    primitive_normalize,
    substitution_matrix_int,
    twice_laplacian_rows,
)
from .quaternion import gamma_gamma2_list, gamma_list


class Variant(str, enum.Enum):
    GAMMA = "gamma"
    PLUS = "plus"
    MINUS = "minus"


def _variant(v) -> Variant:
    if isinstance(v, Variant):
        return v
    aliases = {"g": Variant.GAMMA, "Γ": Variant.GAMMA, "+": Variant.PLUS, "-": Variant.MINUS}
    return aliases.get(v) or Variant(str(v).lower())


def t2_sign(l: int, variant) -> int | None:
    """Eigenvalue of ``T_2`` on the variant in degree ``l`` (``None`` for the full space)."""
    v = _variant(variant)
    if v is Variant.GAMMA:
        return None
    s = (-1) ** l
    return s if v is Variant.PLUS else -s


def group_order(variant) -> int:
    return 12 if _variant(variant) is Variant.GAMMA else 24


# ---------------------------------------------------------------------------
# averaging matrices
# ---------------------------------------------------------------------------


def _int_matrix(g) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(x) for x in r) for r in g.rows())


def average_matrix_int(l: int, variant=Variant.GAMMA) -> np.ndarray:
    """Integer ``d_l x d_l`` matrix of the averaging map (column ``m`` = image of monomial ``m``)."""
    v = _variant(variant)
    headroom = 32
    parts = [(g, 1) for g in gamma_list()]
    if v is not Variant.GAMMA:
        sign = t2_sign(l, v)
        parts += [(g, sign) for g in gamma_gamma2_list()]
    total = None
    for g, s in parts:
        S = substitution_matrix_int(_int_matrix(g), l, headroom=headroom)
        if total is None:
            total = s * S
        else:
            if total.dtype != S.dtype:
                total, S = total.astype(object), S.astype(object)
            total = total + s * S
    return total


def average_matrix(l: int, variant=Variant.GAMMA) -> RationalMatrix:
    """The averaging map as an exact rational matrix."""
    A = average_matrix_int(l, variant)
    return RationalMatrix(([int(x) for x in row] for row in A), ncols=dim_forms(l))


# ---------------------------------------------------------------------------
# result type
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BasisResult:
    """A basis of invariant harmonics of degree ``l``.

    ``basis`` holds primitive integer polynomials; ``scales[i] * basis[i]`` is
    the ``i``-th element of the reduced echelon basis (leading coefficient 1).
    """

    l: int
    variant: Variant
    basis: tuple[HomogeneousPoly, ...]
    scales: tuple[Fraction, ...]
    method: str = "modular"
    pivots: tuple[int, ...] = field(default=(), compare=False)

    def __len__(self) -> int:
        return len(self.basis)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def echelon(self) -> list[HomogeneousPoly]:
        return [b * s for b, s in zip(self.basis, self.scales)]


def canonical_basis(polys: Sequence[HomogeneousPoly], l: int, frame: Frame = Frame.X) -> tuple[tuple[HomogeneousPoly, ...], tuple[Fraction, ...]]:
    """Primitive forms of the reduced echelon basis of ``span(polys)``, leading monomial ``x1^l`` side first."""
    if not polys:
        return (), ()
    # reverse coordinates so that rref pivots follow the descending monomial order
    vecs = [list(reversed(p.with_frame(frame).to_vector())) for p in polys]
    rows = row_space_rref(vecs)
    prims, scales = [], []
    for r in rows:
        f = HomogeneousPoly.from_vector(l, list(reversed(r)), frame)
        prim, _ = primitive_normalize(f)
        prims.append(prim)
        scales.append(1 / prim.leading()[1])
    return tuple(prims), tuple(scales)


# ---------------------------------------------------------------------------
# the two pipelines
# ---------------------------------------------------------------------------


def _polys_from_columns(B_cols: list[list[int]], kernel: list[list[Fraction]], l: int) -> list[HomogeneousPoly]:
    out = []
    for v in kernel:
        vec = [sum((Fraction(col[m]) * c for col, c in zip(B_cols, v) if c), Fraction(0)) for m in range(dim_forms(l))]
        out.append(HomogeneousPoly.from_vector(l, vec, Frame.X))
    return out


def _basis_exact(l: int, v: Variant) -> list[HomogeneousPoly]:
    A = average_matrix(l, v)
    pivots, cols = column_image_basis(A)
    if not pivots:
        return []
    B = RationalMatrix.from_columns(cols)
    if l < 2:
        kern = [[Fraction(int(i == k)) for i in range(len(pivots))] for k in range(len(pivots))]
    else:
        D = RationalMatrix(twice_laplacian_rows(l), ncols=dim_forms(l))
        kern = kernel_basis(D @ B)
    return _polys_from_columns([list(c) for c in cols], kern, l)


_PRIMES = (DEFAULT_PRIME, 2147483587, 2147483579)


def _certified_column_basis(A: np.ndarray, order: int) -> list[int]:
    tr = sum(int(A[i, i]) for i in range(A.shape[0]))
    if tr % order:
        raise ArithmeticError("averaging matrix trace is not divisible by the group order")
    rank = tr // order
    for p in _PRIMES:
        piv = pivot_columns_mod_p(A, p)
        if len(piv) == rank:
            return piv
    raise ArithmeticError("could not certify a column basis modulo the trial primes")


def _apply_twice_laplacian(l: int, B: np.ndarray) -> np.ndarray:
    """``2 D B`` computed sparsely from the Laplacian's action on monomials."""
    rows = twice_laplacian_rows(l)
    D = np.array(rows, dtype=object)
    return D.dot(B.astype(object))


def _kernel_holds(DB: np.ndarray, kern: list[list[Fraction]]) -> bool:
    for vec in kern:
        den = lcm(*(x.denominator for x in vec))
        iv = np.array([int(x * den) for x in vec], dtype=object)
        if any(DB.dot(iv)):
            return False
    return True


def _certified_kernel(DB: np.ndarray, ncols: int) -> list[list[Fraction]]:
    """Kernel of ``DB`` from a row subset chosen modulo ``p``, checked against every row."""
    for p in _PRIMES:
        rows = pivot_columns_mod_p(DB.T, p)
        kern = kernel_basis_int([[int(x) for x in DB[i]] for i in rows], ncols)
        # the subset's kernel contains the full kernel, so passing the check means equality
        if _kernel_holds(DB, kern):
            return kern
    raise ArithmeticError("could not certify the kernel modulo the trial primes")


def _basis_modular(l: int, v: Variant) -> list[HomogeneousPoly]:
    A = average_matrix_int(l, v)
    pivots = _certified_column_basis(A, group_order(v))
    if not pivots:
        return []
    B = A[:, pivots].astype(object)
    c = len(pivots)
    if l < 2:
        kern = [[Fraction(int(i == k)) for i in range(c)] for k in range(c)]
    else:
        DB = _apply_twice_laplacian(l, B)
        kern = _certified_kernel(DB, c)
    cols = [[int(x) for x in B[:, k]] for k in range(c)]
    return _polys_from_columns(cols, kern, l)


@lru_cache(maxsize=None)
def _basis_cached(l: int, v: Variant, method: str) -> BasisResult:
    if method == "exact":
        polys = _basis_exact(l, v)
    elif method == "modular":
        polys = _basis_modular(l, v)
    else:
        raise ValueError(f"unknown method {method!r}")
    prims, scales = canonical_basis(polys, l)
    pivots = tuple(_lead_index(p) for p in prims)
    return BasisResult(l, v, prims, scales, method, pivots)


def _lead_index(p: HomogeneousPoly) -> int:
    return index_of(p.degree, p.leading()[0])


def basis(l: int, variant=Variant.GAMMA, method: str = "modular") -> BasisResult:
    """Canonical basis of the Gamma-invariant harmonics (``gamma``) or a ``T_2`` eigenspace (``plus``/``minus``)."""
    if l < 0:
        raise ValueError("degree must be non-negative")
    return _basis_cached(l, _variant(variant), method)


# ---------------------------------------------------------------------------
# membership
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MembershipReport:
    harmonic: bool
    invariant: bool
    t2_eigen: bool

    @property
    def ok(self) -> bool:
        return self.harmonic and self.invariant and self.t2_eigen


def verify_membership(f: HomogeneousPoly, variant=Variant.GAMMA) -> MembershipReport:
    """Check harmonicity, invariance under all twelve rotations, and the ``T_2`` eigenvalue."""
    if f.frame is not Frame.X:
        raise ValueError("membership is checked on X-frame polynomials")
    harmonic = laplacian(f).is_zero()
    invariant = all(act(g, f) == f for g in gamma_list())
    sign = t2_sign(f.degree, variant)
    if sign is None:
        eigen = True
    else:
        eigen = invariant and apply_T2(f) == f * sign
    return MembershipReport(harmonic, invariant, eigen)


def in_span(result: BasisResult, f: HomogeneousPoly) -> bool:
    from .hecke_spectral import OutsideSpanError, coordinates

    try:
        coordinates(list(result.basis), f)
    except OutsideSpanError:
        return False
    return True


def expected_dimension(l: int, variant) -> int:
    g, p, m = dim_formula(l)
    return {Variant.GAMMA: g, Variant.PLUS: p, Variant.MINUS: m}[_variant(variant)]


__all__ = [
    "BasisResult",
    "MembershipReport",
    "Variant",
    "average_matrix",
    "average_matrix_int",
    "basis",
    "canonical_basis",
    "expected_dimension",
    "group_order",
    "in_span",
    "is_gamma_invariant",
    "t2_sign",
    "verify_membership",
]
