"""Invariant harmonics through the symmetric functions of ``y1^2, y2^2, y3^2``.

In the Y frame every plus/minus invariant harmonic of degree ``l`` factors as

    f3^eps1 * f6m^eps2 * F(e1, e2, e3),
    e1 = y1^2 + y2^2 + y3^2,  e2 = y1^2 y2^2 + y1^2 y3^2 + y2^2 y3^2,  e3 = y1^2 y2^2 y3^2,

with ``eps1 = l mod 2``, ``eps2 = 1`` exactly for the minus space, and ``F`` a
weighted-homogeneous polynomial of weighted degree ``m = l - 3 eps1 - 6 eps2``
killed by the operator ``Delta_{eps1, eps2}`` below. Solving for ``F`` needs
matrices of size ``|M_m| ~ m^2/48`` instead of ``d_l ~ l^2/2``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .exact_linalg import RationalMatrix, kernel_basis, row_space_rref
from .harmonic_basis import BasisResult, Variant, _variant, canonical_basis
from .polyring import Frame, HomogeneousPoly, change_frame_xy, mul, power

WeightedPoly = HomogeneousPoly  # frame E, weights (2, 4, 6)


# ---------------------------------------------------------------------------
# the two fixed divisors in the Y frame
# ---------------------------------------------------------------------------

F3_Y = HomogeneousPoly(3, {(1, 1, 1): -1}, Frame.Y)


def _square_diff(a: int, b: int) -> HomogeneousPoly:
    ea = [0, 0, 0]
    eb = [0, 0, 0]
    ea[a] = 2
    eb[b] = 2
    return HomogeneousPoly(2, {tuple(ea): 1, tuple(eb): -1}, Frame.Y)


F6M_Y = mul(mul(_square_diff(0, 1), _square_diff(0, 2)), _square_diff(1, 2)) * Fraction(1, 64)

# linear factors y_i - y_j and y_i + y_j, whose product is 64 * F6M_Y
F6M_LINEAR_FACTORS = tuple(
    (a, b, s) for a, b in ((0, 1), (0, 2), (1, 2)) for s in (-1, 1)
)


# ---------------------------------------------------------------------------
# weighted monomials and the operators
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def weighted_monomials(m: int) -> tuple[tuple[int, int, int], ...]:
    """Exponents ``(j1, j2, j3)`` with ``2 j1 + 4 j2 + 6 j3 = m``, ascending in ``j3`` then ``j2``."""
    if m < 0 or m % 2:
        raise ValueError("weighted degree must be a non-negative even integer")
    out = []
    for j3 in range(m // 6 + 1):
        for j2 in range((m - 6 * j3) // 4 + 1):
            out.append(((m - 6 * j3 - 4 * j2) // 2, j2, j3))
    return tuple(out)


def _check_eps(e1: int, e2: int) -> None:
    if e1 not in (0, 1) or e2 not in (0, 1):
        raise ValueError("eps1 and eps2 must be 0 or 1")


def _apply_to_monomial(e1: int, e2: int, t: tuple[int, int, int]) -> Iterable[tuple[tuple[int, int, int], Fraction]]:
    """Terms of ``Delta_{eps1,eps2}`` applied to ``e1^a e2^b e3^c``."""
    a, b, c = t
    w = 1 + 2 * e1
    contributions = (
        # 4 e1 d11 + 16 e2 d12 + 24 e3 d13 + first-order d1
        ((a - 1, b, c), 4 * a * (a - 1) + 16 * a * b + 24 * a * c + (6 * w + 24 * e2) * a),
        # 4 e1 e2 d22 + 16 e1 e3 d23 + first-order e1 d2
        ((a + 1, b - 1, c), 4 * b * (b - 1) + 16 * b * c + (4 * w + 8 * e2) * b),
        # 12 e3 d22
        ((a, b - 2, c + 1), 12 * b * (b - 1)),
        # 4 e2 e3 d33 + first-order e2 d3
        ((a, b + 1, c - 1), 4 * c * (c - 1) + 2 * w * c),
    )
    return ((u, Fraction(k)) for u, k in contributions if k)


def delta_eps_apply(e1: int, e2: int, F: WeightedPoly) -> WeightedPoly:
    """Apply ``Delta_E + (1+2 eps1)(6 d1 + 4 e1 d2 + 2 e2 d3) + eps2 (24 d1 + 8 e1 d2)``.

    ``Delta_E = 4 e1 d11 + 4 (e1 e2 + 3 e3) d22 + 4 e2 e3 d33 + 16 e2 d12 + 24 e3 d13 + 16 e1 e3 d23``.
    """
    _check_eps(e1, e2)
    if F.frame is not Frame.E:
        raise ValueError("expected an E-frame polynomial")
    if F.degree < 2:
        return HomogeneousPoly.zero(0, Frame.E)
    acc: dict[tuple[int, int, int], Fraction] = {}
    for t, c in F.items():
        for u, k in _apply_to_monomial(e1, e2, t):
            acc[u] = acc.get(u, 0) + c * k
    return HomogeneousPoly(F.degree - 2, acc, Frame.E)


def delta_eps_matrix(m: int, e1: int, e2: int) -> RationalMatrix:
    """Matrix of ``Delta_{eps1,eps2}`` from ``M_m`` to ``M_{m-2}`` (rows = targets)."""
    _check_eps(e1, e2)
    src = weighted_monomials(m)
    if m < 2:
        return RationalMatrix.zeros(0, len(src))
    tgt = {t: i for i, t in enumerate(weighted_monomials(m - 2))}
    rows = [[Fraction(0)] * len(src) for _ in tgt]
    for j, t in enumerate(src):
        for u, k in _apply_to_monomial(e1, e2, t):
            rows[tgt[u]][j] += k
    return RationalMatrix(rows, ncols=len(src))


def _from_coords(m: int, vec) -> WeightedPoly:
    return HomogeneousPoly(m, ((t, c) for t, c in zip(weighted_monomials(m), vec) if c), Frame.E)


@lru_cache(maxsize=None)
def ebasis(m: int, e1: int, e2: int) -> tuple[WeightedPoly, ...]:
    """Reduced echelon basis (over the ordered monomials ``M_m``) of the kernel of ``Delta_{eps1,eps2}``.

    In dimension one this is the kernel element whose ``e1^(m/2)`` coefficient is 1.
    """
    _check_eps(e1, e2)
    kern = kernel_basis(delta_eps_matrix(m, e1, e2))
    return tuple(_from_coords(m, r) for r in row_space_rref(kern))


def dim_EH_formula(m: int) -> int:
    """``k + 1`` when ``m - 12k`` lies in ``{0, 4, 6, 8, 10, 14}`` for some ``k >= 0``, else 0."""
    if m < 0 or m % 2:
        raise ValueError("weighted degree must be a non-negative even integer")
    for r in (0, 4, 6, 8, 10, 14):
        if m >= r and (m - r) % 12 == 0:
            return (m - r) // 12 + 1
    return 0


# ---------------------------------------------------------------------------
# back to the Y and X frames
# ---------------------------------------------------------------------------

E1_Y = HomogeneousPoly(2, {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1}, Frame.Y)
E2_Y = HomogeneousPoly(4, {(2, 2, 0): 1, (2, 0, 2): 1, (0, 2, 2): 1}, Frame.Y)
E3_Y = HomogeneousPoly(6, {(2, 2, 2): 1}, Frame.Y)


def e_to_y(F: WeightedPoly) -> HomogeneousPoly:
    """Substitute the symmetric functions of the squares for ``e1, e2, e3``."""
    if F.frame is not Frame.E:
        raise ValueError("expected an E-frame polynomial")
    gens = (E1_Y, E2_Y, E3_Y)
    pows: list[dict[int, HomogeneousPoly]] = [{}, {}, {}]

    def pw(i: int, k: int) -> HomogeneousPoly:
        if k not in pows[i]:
            pows[i][k] = power(gens[i], k)
        return pows[i][k]

    out = HomogeneousPoly.zero(F.degree, Frame.Y)
    for t, c in F.items():
        term = mul(mul(pw(0, t[0]), pw(1, t[1])), pw(2, t[2]))
        out = out + term * c
    return out


def prefactor_y(e1: int, e2: int) -> HomogeneousPoly:
    """``f3^eps1 * f6m^eps2`` in the Y frame."""
    _check_eps(e1, e2)
    return mul(power(F3_Y, e1), power(F6M_Y, e2))


def ecoord_to_y(e1: int, e2: int, F: WeightedPoly) -> HomogeneousPoly:
    return mul(prefactor_y(e1, e2), e_to_y(F))


def ecoord_to_x(e1: int, e2: int, F: WeightedPoly, check: bool = True) -> HomogeneousPoly:
    """The X-frame harmonic ``f3^eps1 f6m^eps2 F(e(y))`` expressed in ``x``."""
    if check and not delta_eps_apply(e1, e2, F).is_zero():
        raise ValueError("F is not in the kernel of the corresponding operator")
    return change_frame_xy(ecoord_to_y(e1, e2, F))


def signature(l: int, variant) -> tuple[int, int, int] | None:
    """``(m, eps1, eps2)`` for degree ``l`` and a signed variant, or ``None`` if ``m < 0``."""
    v = _variant(variant)
    if v is Variant.GAMMA:
        raise ValueError("signature is defined for the plus and minus variants")
    e1 = l % 2
    e2 = 1 if v is Variant.MINUS else 0
    m = l - 3 * e1 - 6 * e2
    if m < 0:
        return None
    return m, e1, e2


def ecoord_dimension(l: int, variant) -> int:
    v = _variant(variant)
    if v is Variant.GAMMA:
        return ecoord_dimension(l, Variant.PLUS) + ecoord_dimension(l, Variant.MINUS)
    sig = signature(l, v)
    if sig is None:
        return 0
    return len(ebasis(*sig))


@lru_cache(maxsize=None)
def ecoord_basis(l: int, variant=Variant.PLUS) -> BasisResult:
    """Canonical X-frame basis computed through the e-coordinates."""
    v = _variant(variant)
    if v is Variant.GAMMA:
        polys = list(ecoord_basis(l, Variant.PLUS).basis) + list(ecoord_basis(l, Variant.MINUS).basis)
    else:
        sig = signature(l, v)
        polys = [] if sig is None else [ecoord_to_x(sig[1], sig[2], F, check=False) for F in ebasis(*sig)]
    prims, scales = canonical_basis(polys, l)
    return BasisResult(l, v, prims, scales, "ecoord")


__all__ = [
    "E1_Y",
    "E2_Y",
    "E3_Y",
    "F3_Y",
    "F6M_Y",
    "F6M_LINEAR_FACTORS",
    "WeightedPoly",
    "delta_eps_apply",
    "delta_eps_matrix",
    "dim_EH_formula",
    "e_to_y",
    "ebasis",
    "ecoord_basis",
    "ecoord_dimension",
    "ecoord_to_x",
    "ecoord_to_y",
    "prefactor_y",
    "signature",
    "weighted_monomials",
]
