"""Arithmetic applications: CM points, mod 2 congruences and the two universal divisors.

The ternary norm form on the lattice of pure Hurwitz quaternions is
``Nm(x) = x Q x^T = 3(x1^2+x2^2+x3^2) - 2(x1x2+x2x3+x3x1)``. A CM point of
discriminant ``D < 0`` is an integer point with ``Nm(a) = -D``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Sequence

from .harmonic_basis import Variant, basis
from .polyring import Frame, HomogeneousPoly, mul, norm_form, power, to_frame
from .ecoord import F3_Y, F6M_Y, F6M_LINEAR_FACTORS


# ---------------------------------------------------------------------------
# CM points
# ---------------------------------------------------------------------------


def norm_ternary(a: Sequence[int]) -> int:
    a1, a2, a3 = (int(x) for x in a)
    return 3 * (a1 * a1 + a2 * a2 + a3 * a3) - 2 * (a1 * a2 + a2 * a3 + a3 * a1)


@dataclass(frozen=True, order=True)
class CMPoint:
    a: tuple[int, int, int]
    discriminant: int

    def __post_init__(self):
        if norm_ternary(self.a) != -self.discriminant:
            raise ValueError(f"{self.a} does not have norm {-self.discriminant}")


def cm_bound(discriminant: int) -> int:
    """Bound on ``|a_i|`` for points of norm ``-D``.

    ``Q = 4I - J`` has eigenvalues 4, 4, 1, so ``|a|^2 <= Nm(a)`` and each
    ``|a_i| <= sqrt(-D)``.
    """
    if discriminant >= 0:
        raise ValueError("discriminant must be negative")
    return isqrt(-discriminant)


def cm_points(discriminant: int, bound: int | None = None) -> list[CMPoint]:
    """All integer solutions of ``Nm(a) = -D``, in lexicographic order.

    For each ``(a1, a2)`` in the box, ``a3`` solves
    ``3 a3^2 - 2 (a1 + a2) a3 + (3 a1^2 + 3 a2^2 - 2 a1 a2 + D) = 0``.
    """
    n = -discriminant
    r = cm_bound(discriminant) if bound is None else bound
    out = []
    for a1 in range(-r, r + 1):
        for a2 in range(-r, r + 1):
            s = a1 + a2
            c = 3 * a1 * a1 + 3 * a2 * a2 - 2 * a1 * a2 - n
            disc = s * s - 3 * c  # quarter discriminant
            if disc < 0:
                continue
            root = isqrt(disc)
            if root * root != disc:
                continue
            for num in sorted({s - root, s + root}):
                if num % 3 == 0 and -r <= num // 3 <= r:
                    out.append(CMPoint((a1, a2, num // 3), discriminant))
    return out


def parity_at_cm(f: HomogeneousPoly, discriminant: int) -> list[int]:
    """``f(a) mod 2`` at every CM point of discriminant ``D``."""
    f = to_frame(f, Frame.X)
    if not f.is_integral():
        raise ValueError("parity needs integer coefficients")
    # only odd coefficients and the parities of the coordinates matter
    odd = [t for t, c in f.items() if c.numerator % 2]
    out = []
    for p in cm_points(discriminant):
        bits = [x % 2 for x in p.a]
        out.append(sum(all(b or e == 0 for b, e in zip(bits, t)) for t in odd) % 2)
    return out


# ---------------------------------------------------------------------------
# congruence certificates
# ---------------------------------------------------------------------------


class NotFound(LookupError):
    """No certificate inside the configured search bounds."""

    def __init__(self, l: int, attempts: int):
        super().__init__(f"no congruence certificate for l={l} after {attempts} candidates")
        self.l = l
        self.attempts = attempts


@dataclass(frozen=True)
class CongruenceCertificate:
    """An integer member of the plus space congruent to ``Nm^(l/2)`` mod 2.

    ``combination[k]`` is the coefficient of the ``k``-th primitive element of
    ``basis(l, plus)``.
    """

    l: int
    kind: str
    label: str
    combination: tuple[Fraction, ...]
    polynomial: HomogeneousPoly
    attempts: int
    trace: tuple[str, ...] = field(default=(), compare=False)


def congruent_mod2(f: HomogeneousPoly, g: HomogeneousPoly) -> bool:
    """Coefficient-wise ``f = g mod 2`` for integer polynomials of the same degree."""
    if not (f.is_integral() and g.is_integral()):
        return False
    return all(c.numerator % 2 == 0 for _, c in (f - g).items())


def _candidates(n: int, multipliers: Sequence[int]):
    for k in range(n):
        for c in multipliers:
            comb = [Fraction(0)] * n
            comb[k] = Fraction(c)
            yield "single", f"{c}*f{k + 1}" if c != 1 else f"f{k + 1}", comb
    for i in range(n):
        for j in range(i + 1, n):
            for c in multipliers:
                for s, sym in ((-1, "-"), (1, "+")):
                    comb = [Fraction(0)] * n
                    comb[i] = Fraction(1, 2)
                    comb[j] = Fraction(s * c, 2)
                    cj = f"{c}*f{j + 1}" if c != 1 else f"f{j + 1}"
                    yield "pair", f"(f{i + 1} {sym} {cj})/2", comb


def congruence_certificate(l: int, multipliers: Sequence[int] = tuple(range(1, 16, 2)), keep_trace: bool = True) -> CongruenceCertificate:
    """Search for an integer ``f`` in the plus space with ``f = Nm^(l/2) mod 2``.

    Candidates are tried in order: odd multiples ``c f_k`` of single primitive
    basis elements, then halves ``(f_i -+ c f_j)/2`` over pairs ``i < j``.
    Raises :class:`NotFound` when the bounds are exhausted.
    """
    if l < 4 or l % 2:
        raise ValueError("congruence certificates are defined for even l >= 4")
    prims = basis(l, Variant.PLUS).basis
    target = power(norm_form(Frame.X), l // 2)
    attempts = 0
    trace: list[str] = []
    for kind, label, comb in _candidates(len(prims), multipliers):
        attempts += 1
        f = HomogeneousPoly.zero(l, Frame.X)
        for c, b in zip(comb, prims):
            if c:
                f = f + b * c
        if not f.is_integral():
            outcome = "non-integral"
        elif congruent_mod2(f, target):
            outcome = "ok"
        else:
            outcome = "not congruent"
        if keep_trace:
            trace.append(f"{label}: {outcome}")
        if outcome == "ok":
            return CongruenceCertificate(l, kind, label, tuple(comb), f, attempts, tuple(trace))
    raise NotFound(l, attempts)


# ---------------------------------------------------------------------------
# divisibility by f_{3,+} and f_{6,-}
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DivisionResult:
    """Outcome of an exact division; ``failing_factor`` names the first factor that does not divide."""

    divisor: HomogeneousPoly
    quotient: HomogeneousPoly | None
    failing_factor: str | None = None

    @property
    def ok(self) -> bool:
        return self.quotient is not None

    def __bool__(self) -> bool:
        return self.ok


def _factor_name(a: int, b: int, s: int) -> str:
    return f"y{a + 1} {'+' if s > 0 else '-'} y{b + 1}"


def _divide_linear(f: HomogeneousPoly, a: int, b: int, s: int) -> HomogeneousPoly | None:
    """Exact quotient of ``f`` by ``y_a + s y_b`` in the Y frame, or ``None``.

    Synthetic division in ``y_a`` by the root ``y_a = -s y_b``.
    """
    if f.is_zero():
        return HomogeneousPoly.zero(f.degree - 1, Frame.Y)
    # group coefficients by the power of y_a; the rest of the monomial is kept with y_a set to 0
    by_power: dict[int, dict[tuple[int, ...], Fraction]] = {}
    for t, c in f.items():
        rest = list(t)
        rest[a] = 0
        by_power.setdefault(t[a], {})[tuple(rest)] = c
    top = max(by_power)
    quotient: dict[tuple[int, ...], Fraction] = {}
    carry: dict[tuple[int, ...], Fraction] = {}
    for k in range(top, -1, -1):
        # q_{k-1} = c_k + r q_k with r = -s y_b; at k = 0 this is the remainder
        cur = dict(by_power.get(k, {}))
        for u, c in carry.items():
            cur[u] = cur.get(u, 0) + c
        cur = {u: c for u, c in cur.items() if c}
        if k == 0:
            if cur:
                return None
            break
        for u, c in cur.items():
            e = list(u)
            e[a] = k - 1
            quotient[tuple(e)] = c
        carry = {}
        for u, c in cur.items():
            e = list(u)
            e[b] += 1
            carry[tuple(e)] = -s * c
    return HomogeneousPoly(f.degree - 1, quotient, Frame.Y)


def divides_f3(f: HomogeneousPoly) -> DivisionResult:
    """Divide by ``f_{3,+} = -y1 y2 y3``; the quotient comes back in the frame of ``f``."""
    frame = f.frame
    g = to_frame(f, Frame.Y)
    divisor = to_frame(F3_Y, frame)
    if f.degree < 3:
        return DivisionResult(divisor, None, "degree")
    for i in range(3):
        if any(t[i] == 0 for t, _ in g.items()):
            return DivisionResult(divisor, None, f"y{i + 1}")
    q = HomogeneousPoly(f.degree - 3, {tuple(e - 1 for e in t): -c for t, c in g.items()}, Frame.Y)
    return DivisionResult(divisor, to_frame(q, frame))


def divides_f6minus(f: HomogeneousPoly) -> DivisionResult:
    """Divide by ``f_{6,-} = (1/64) prod (y_i - y_j)(y_i + y_j)`` factor by factor."""
    frame = f.frame
    g = to_frame(f, Frame.Y)
    divisor = to_frame(F6M_Y, frame)
    if f.degree < 6:
        return DivisionResult(divisor, None, "degree")
    for a, b, s in F6M_LINEAR_FACTORS:
        q = _divide_linear(g, a, b, s)
        if q is None:
            return DivisionResult(divisor, None, _factor_name(a, b, s))
        g = q
    return DivisionResult(divisor, to_frame(g * 64, frame))


def check_division(result: DivisionResult, f: HomogeneousPoly) -> bool:
    """``divisor * quotient == f`` exactly."""
    return result.ok and mul(result.divisor, result.quotient) == f


__all__ = [
    "CMPoint",
    "CongruenceCertificate",
    "DivisionResult",
    "NotFound",
    "check_division",
    "cm_bound",
    "cm_points",
    "congruence_certificate",
    "congruent_mod2",
    "divides_f3",
    "divides_f6minus",
    "norm_ternary",
    "parity_at_cm",
]
