"""Hecke operators, characters, dimension formulas and zonal kernels.

Everything is exact. Characters of the rotation representation on harmonic
polynomials of degree ``l`` depend on a rotation only through its trace
``1 + 2 cos(theta)``, so they are computed by a Chebyshev recursion in the
trace with no trigonometry involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Sequence

from .exact_linalg import RationalMatrix, solve_in_span
from .polyring import (
    Frame,
    HomogeneousPoly,
    act,
    laplacian,
    mul,
    norm_form,
    power,
)
from .quaternion import (
    GAMMA2,
    GEN_I,
    GEN_W,
    Q_MATRIX,
    RotationMatrix,
    gamma_list,
    hecke_coset_reps,
)


class NotInvariantError(ValueError):
    """A Hecke operator was applied to a polynomial that is not Gamma-invariant."""


class OutsideSpanError(ArithmeticError):
    """A Hecke image could not be written in the given basis."""


# ---------------------------------------------------------------------------
# Hecke operators
# ---------------------------------------------------------------------------


def is_gamma_invariant(f: HomogeneousPoly) -> bool:
    # the unit group image is generated by the rotations of i and w
    return act(GEN_I, f) == f and act(GEN_W, f) == f


def apply_T_p(p: int, f: HomogeneousPoly, check: bool = True) -> HomogeneousPoly:
    """``(T_p f)(x) = sum over cosets Gamma g of f(x g^{-1})``."""
    if f.frame is not Frame.X:
        raise ValueError("Hecke operators act on X-frame polynomials")
    if check and not is_gamma_invariant(f):
        raise NotInvariantError("T_p is only well defined on Gamma-invariant polynomials")
    out = HomogeneousPoly.zero(f.degree, Frame.X)
    for g in hecke_coset_reps(p):
        out = out + act(g.inverse(), f)
    return out


def apply_T2(f: HomogeneousPoly) -> HomogeneousPoly:
    """``T_2`` on Gamma-invariant forms; it equals the action of the involution ``gamma2``."""
    return act(GAMMA2, f)


def _echelon_pivots(basis: Sequence[HomogeneousPoly]):
    """Leading monomials if every element vanishes at the others' leading monomials."""
    leads = [b.leading()[0] for b in basis]
    if len(set(leads)) != len(leads):
        return None
    for i, b in enumerate(basis):
        for j, t in enumerate(leads):
            if i != j and b.coeff(t):
                return None
    return leads


def coordinates(basis: Sequence[HomogeneousPoly], g: HomogeneousPoly) -> list[Fraction]:
    """Exact coordinates of ``g`` in ``basis``; raises :class:`OutsideSpanError` otherwise."""
    if not basis:
        if g.is_zero():
            return []
        raise OutsideSpanError("nonzero polynomial and empty basis")
    leads = _echelon_pivots(basis)
    if leads is not None:
        c = [g.coeff(t) / b.coeff(t) for b, t in zip(basis, leads)]
        recon = HomogeneousPoly.zero(g.degree, g.frame)
        for ci, b in zip(c, basis):
            if ci:
                recon = recon + b * ci
        if recon == g:
            return c
        raise OutsideSpanError("image is not in the span of the basis")
    sol = solve_in_span([b.to_vector() for b in basis], g.to_vector())
    if sol is None:
        raise OutsideSpanError("image is not in the span of the basis")
    return sol


def faddeev_leverrier(M: RationalMatrix) -> list[Fraction]:
    """Characteristic polynomial ``det(tI - M)`` as coefficients from ``t^n`` down to ``t^0``."""
    n = M.nrows
    coeffs = [Fraction(1)]
    Mk = RationalMatrix.zeros(n, n)
    ident = RationalMatrix.identity(n)
    for k in range(1, n + 1):
        Mk = M @ Mk + ident.scale(coeffs[-1])
        coeffs.append(-(M @ Mk).trace() / k)
    return coeffs


@dataclass(frozen=True)
class HeckeMatrix:
    """Matrix of ``T_p`` in a basis: column ``j`` holds the coordinates of ``T_p f_j``."""

    p: int
    l: int
    variant: str
    matrix: RationalMatrix

    def charpoly(self) -> list[Fraction]:
        return faddeev_leverrier(self.matrix)

    def __matmul__(self, other: "HeckeMatrix") -> RationalMatrix:
        return self.matrix @ other.matrix


def hecke_matrix(p: int, basis_result) -> HeckeMatrix:
    """Matrix of ``T_p`` on the span of ``basis_result.basis``."""
    basis = list(basis_result.basis)
    if not basis:
        raise ValueError("empty basis")
    cols = [coordinates(basis, apply_T_p(p, f, check=False)) for f in basis]
    mat = RationalMatrix.from_columns(cols)
    return HeckeMatrix(p, basis_result.l, str(getattr(basis_result.variant, "value", basis_result.variant)), mat)


# ---------------------------------------------------------------------------
# characters and dimensions
# ---------------------------------------------------------------------------


def theta_character(l: int, trace) -> Fraction:
    """Character of degree-``l`` harmonics at a rotation of the given trace.

    ``t_0 = 2, t_1 = trace - 1, t_k = t_1 t_{k-1} - t_{k-2}`` (so ``t_k = 2 cos k theta``)
    and the character is ``1 + t_1 + ... + t_l``.
    """
    t1 = Fraction(trace) - 1
    total = Fraction(1)
    prev, cur = Fraction(2), t1
    for _ in range(l):
        total += cur
        prev, cur = cur, t1 * cur - prev
    return total


def _mod3_term(l: int) -> int:
    return (1, 0, -1)[l % 3]


def dim_formula(l: int) -> tuple[int, int, int]:
    """Closed-form ``(dim_Gamma, dim_plus, dim_minus)`` in degree ``l``."""
    if l < 0:
        raise ValueError("degree must be non-negative")
    base = Fraction(2 * l + 1, 24) + Fraction((-1) ** l, 8) + Fraction(_mod3_term(l), 3)
    half = Fraction(1, 2) if l % 4 in (0, 3) else Fraction(0)
    plus, minus = base + half, base - half
    assert plus.denominator == 1 and minus.denominator == 1
    return int(plus + minus), int(plus), int(minus)


def dim_via_trace_formula(l: int) -> int:
    """Average of the character over Gamma, grouped by the classes of sizes 1, 3, 4, 4."""
    val = theta_character(l, 3) / 12 + theta_character(l, -1) / 4 + 2 * theta_character(l, 0) / 3
    if val.denominator != 1:
        raise ArithmeticError("trace formula produced a non-integer")
    return int(val)


def dim_via_group_average(l: int) -> int:
    """The same average, summed over the twelve matrices one by one."""
    val = sum((theta_character(l, g.trace()) for g in gamma_list()), Fraction(0)) / 12
    return int(val)


def trace_T2_formula(l: int) -> int:
    """Trace of ``T_2`` on Gamma-invariant harmonics: the average over the coset ``Gamma gamma2``."""
    # the coset contains six rotations by pi/2 (trace 1) and six by pi (trace -1)
    val = theta_character(l, 1) / 2 + theta_character(l, -1) / 2
    return int(val)


def _count_reps(n: int, a: int, b: int) -> int:
    """Number of ``(u, v) >= 0`` with ``a u + b v = n``."""
    if n < 0:
        return 0
    return sum(1 for u in range(n // a + 1) if (n - a * u) % b == 0)


SERIES = ("gamma-even", "gamma-odd", "plus", "minus")


def generating_series_coeff(series: str, l: int) -> int:
    """Coefficient of ``t^l`` in one of the dimension generating series.

    ``plus``: ``1/((1-t^3)(1-t^4))``; ``minus``: ``t^6`` times that;
    ``gamma-even``: ``(1+t^6)/((1-t^4)(1-t^6))``; ``gamma-odd``: ``t^3`` times that.
    """
    if series == "plus":
        return _count_reps(l, 3, 4)
    if series == "minus":
        return _count_reps(l - 6, 3, 4)
    if series == "gamma-even":
        return _count_reps(l, 4, 6) + _count_reps(l - 6, 4, 6)
    if series == "gamma-odd":
        return _count_reps(l - 3, 4, 6) + _count_reps(l - 9, 4, 6)
    raise ValueError(f"unknown series {series!r}; expected one of {SERIES}")


def dims_via_series(l: int) -> tuple[int, int, int]:
    gam = generating_series_coeff("gamma-even" if l % 2 == 0 else "gamma-odd", l)
    return gam, generating_series_coeff("plus", l), generating_series_coeff("minus", l)


# ---------------------------------------------------------------------------
# Legendre polynomials and zonal kernels
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def legendre(l: int) -> tuple[Fraction, ...]:
    """Coefficients ``(c_0, ..., c_l)`` of ``L_l(t) = sum c_k t^k``."""
    if l < 0:
        raise ValueError("degree must be non-negative")
    if l == 0:
        return (Fraction(1),)
    if l == 1:
        return (Fraction(0), Fraction(1))
    a, b = legendre(l - 1), legendre(l - 2)
    out = [Fraction(0)] * (l + 1)
    for k, c in enumerate(a):
        out[k + 1] += Fraction(2 * l - 1, l) * c
    for k, c in enumerate(b):
        out[k] -= Fraction(l - 1, l) * c
    return tuple(out)


def _bilinear(y: Sequence) -> HomogeneousPoly:
    """The linear form ``x -> x Q y^T``."""
    y = [Fraction(v) for v in y]
    coeffs = [sum(Q_MATRIX[i, k] * y[k] for k in range(3)) for i in range(3)]
    return HomogeneousPoly(1, {(1, 0, 0): coeffs[0], (0, 1, 0): coeffs[1], (0, 0, 1): coeffs[2]}, Frame.X)


def norm_ternary_value(y: Sequence) -> Fraction:
    y = [Fraction(v) for v in y]
    return sum(y[i] * Q_MATRIX[i, k] * y[k] for i in range(3) for k in range(3))


def zonal_kernel(l: int, y: Sequence) -> HomogeneousPoly:
    """``K_l(x, y) = sum_j c_j (x Q y^T)^j (Nm(x) Nm(y))^{(l-j)/2}`` as a polynomial in ``x``.

    ``c_j`` are the Legendre coefficients; only ``j = l mod 2`` occur, so the
    half-integer powers cancel.
    """
    c = legendre(l)
    lin = _bilinear(y)
    ny = norm_ternary_value(y)
    nx = norm_form(Frame.X)
    out = HomogeneousPoly.zero(l, Frame.X)
    for j in range(l % 2, l + 1, 2):
        if c[j]:
            k = (l - j) // 2
            out = out + mul(power(lin, j), power(nx, k)) * (c[j] * ny**k)
    return out


def gamma_kernel(l: int, y: Sequence) -> HomogeneousPoly:
    """``K_l^Gamma(x, y) = (1/12) sum_gamma K_l(x gamma, y)``."""
    k = zonal_kernel(l, y)
    out = HomogeneousPoly.zero(l, Frame.X)
    for g in gamma_list():
        out = out + act(g, k)
    return out / 12


REFERENCE_POINT = (Fraction(1, 2), Fraction(1, 2), Fraction(0))


def reproducing_kernel_value(l: int, x: Sequence, y: Sequence) -> Fraction:
    """``(2l+1) K_l(x, y)``: the reproducing kernel for the normalized sphere measure."""
    return (2 * l + 1) * zonal_kernel(l, y)(x)


def kernel_character_identity_check(l: int, gamma: RotationMatrix, delta: RotationMatrix, a: Sequence = REFERENCE_POINT) -> bool:
    """Compare the reproducing kernel at ``(a gamma^{-1}, a delta^{-1})`` with the character at ``gamma delta^{-1}``.

    The pointwise identity holds on the diagonal but not for general pairs; the
    true relation integrates over the sphere, see :func:`integrated_character_identity`.
    """
    if norm_ternary_value(a) != 1:
        raise ValueError("reference point must have norm one")
    av = RationalMatrix([list(a)])
    x = (av @ gamma.inverse().matrix).row(0)
    y = (av @ delta.inverse().matrix).row(0)
    lhs = reproducing_kernel_value(l, x, y)
    rhs = theta_character(l, (gamma @ delta.inverse()).trace())
    return lhs == rhs


def _double_factorial(n: int) -> int:
    return prod(range(n, 0, -2)) if n > 0 else 1


def sphere_average(f: HomogeneousPoly) -> Fraction:
    """Exact mean of a Y-frame polynomial over the unit sphere.

    Uses ``E[y1^(2a) y2^(2b) y3^(2c)] = (2a-1)!!(2b-1)!!(2c-1)!! / (2n+1)!!`` with ``n = a+b+c``.
    """
    if f.frame is not Frame.Y:
        raise ValueError("sphere averages are taken in the Y frame")
    total = Fraction(0)
    for t, c in f.items():
        if any(e % 2 for e in t):
            continue
        n = sum(t) // 2
        num = prod(_double_factorial(e - 1) for e in t)
        total += c * Fraction(num, _double_factorial(2 * n + 1))
    return total


def integrated_character_identity(l: int, g: RotationMatrix) -> bool:
    """``mean over x in the sphere of (2l+1) K_l(x g, x) == Theta_l(g)`` exactly."""
    c = legendre(l)
    gy = g.to_frame(Frame.Y).matrix
    # t(y) = (y g) . y and Nm(y) = y . y in the Y frame
    terms = {}
    for i in range(3):
        for k in range(3):
            e = [0, 0, 0]
            e[i] += 1
            e[k] += 1
            terms[tuple(e)] = terms.get(tuple(e), 0) + gy[i, k]
    t = HomogeneousPoly(2, terms, Frame.Y)
    nm = norm_form(Frame.Y)
    total = HomogeneousPoly.zero(2 * l, Frame.Y)
    for j in range(l % 2, l + 1, 2):
        if c[j]:
            total = total + mul(power(t, j), power(nm, l - j)) * c[j]
    lhs = (2 * l + 1) * sphere_average(total)
    return lhs == theta_character(l, g.trace())


def kernel_is_harmonic(l: int, y: Sequence) -> bool:
    return laplacian(zonal_kernel(l, y)).is_zero()


__all__ = [
    "HeckeMatrix",
    "NotInvariantError",
    "OutsideSpanError",
    "apply_T2",
    "apply_T_p",
    "coordinates",
    "dim_formula",
    "dim_via_group_average",
    "dim_via_trace_formula",
    "dims_via_series",
    "faddeev_leverrier",
    "gamma_kernel",
    "generating_series_coeff",
    "hecke_matrix",
    "integrated_character_identity",
    "is_gamma_invariant",
    "kernel_character_identity_check",
    "kernel_is_harmonic",
    "legendre",
    "sphere_average",
    "theta_character",
    "trace_T2_formula",
    "zonal_kernel",
]
