"""Homogeneous polynomials in three variables.

Monomials of degree ``l`` are indexed by

    index_of(l, (l1, l2, l3)) = l1*(l+1) - l1*(l1-1)/2 + l2,

an order isomorphism onto ``0 .. d_l-1`` (``d_l = (l+1)(l+2)/2``), ordering
exponent triples lexicographically on ``(l1, l2)``. Polynomials are stored as
sparse maps and print in *descending* index order (``x1^l`` first). The dense
coefficient vector in index order is the exchange format with
:mod:`hurwitz_amf.exact_linalg`.

Three frames share the type: ``X`` (lattice coordinates, form ``Q``),
``Y`` (coordinates along ``i, j, ij``, Euclidean form) and ``E`` (weighted
polynomials in ``e1, e2, e3`` of weights 2, 4, 6).
"""

from __future__ import annotations

import enum
import re
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from .exact_linalg import RationalMatrix

Exponent = tuple[int, int, int]


class Frame(str, enum.Enum):
    X = "x"
    Y = "y"
    E = "e"


E_WEIGHTS = (2, 4, 6)


class FrameError(ValueError):
    """Operation applied to a polynomial in an incompatible frame."""


# ---------------------------------------------------------------------------
# monomial indexing
# ---------------------------------------------------------------------------


def dim_forms(l: int) -> int:
    """``d_l``, the number of degree-``l`` monomials in three variables."""
    if l < 0:
        return 0
    return (l + 1) * (l + 2) // 2


def index_of(l: int, t: Exponent) -> int:
    l1, l2, l3 = t
    if min(t) < 0 or l1 + l2 + l3 != l:
        raise ValueError(f"{t} is not an exponent triple of degree {l}")
    return l1 * (l + 1) - l1 * (l1 - 1) // 2 + l2


def monomial_of(l: int, m: int) -> Exponent:
    if not 0 <= m < dim_forms(l):
        raise ValueError(f"index {m} out of range for degree {l}")
    # largest l1 with l1*(l+1) - l1*(l1-1)/2 <= m
    l1 = 0
    while l1 < l and (l1 + 1) * (l + 1) - (l1 + 1) * l1 // 2 <= m:
        l1 += 1
    l2 = m - l1 * (l + 1) + l1 * (l1 - 1) // 2
    return (l1, l2, l - l1 - l2)


@lru_cache(maxsize=None)
def monomials(l: int) -> tuple[Exponent, ...]:
    """All degree-``l`` exponent triples in ascending index order."""
    return tuple((l1, l2, l - l1 - l2) for l1 in range(l + 1) for l2 in range(l - l1 + 1))


@lru_cache(maxsize=None)
def _index_table(l: int) -> dict[Exponent, int]:
    return {t: i for i, t in enumerate(monomials(l))}


def weighted_degree(t: Exponent) -> int:
    return sum(w * a for w, a in zip(E_WEIGHTS, t))


def _term_key(frame: Frame, t: Exponent):
    if frame is Frame.E:
        # ascending e3 power, then ascending e2 power (weighted enumeration order)
        return (t[2], t[1])
    return (-t[0], -t[1])


# ---------------------------------------------------------------------------
# polynomial type
# ---------------------------------------------------------------------------


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class HomogeneousPoly:
    """A homogeneous polynomial with exact rational coefficients.

    Coefficients equal to zero are never stored, so equality is structural.
    """

    __slots__ = ("degree", "frame", "_terms", "_hash")

    def __init__(self, degree: int, terms: Mapping[Exponent, object] | Iterable = (), frame: Frame | str = Frame.X):
        frame = Frame(frame)
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, Fraction] = {}
        for t, c in items:
            t = tuple(int(a) for a in t)
            if len(t) != 3 or min(t) < 0:
                raise ValueError(f"bad exponent {t}")
            deg = weighted_degree(t) if frame is Frame.E else sum(t)
            if deg != degree:
                raise ValueError(f"term {t} has degree {deg}, expected {degree}")
            acc[t] = acc.get(t, Fraction(0)) + _frac(c)
        ordered = sorted((t for t, c in acc.items() if c), key=lambda t: _term_key(frame, t))
        self.degree = degree
        self.frame = frame
        self._terms = {t: acc[t] for t in ordered}
        self._hash = None

    # constructors -------------------------------------------------------
    @classmethod
    def zero(cls, degree: int, frame: Frame | str = Frame.X) -> "HomogeneousPoly":
        return cls(degree, {}, frame)

    @classmethod
    def constant(cls, c, frame: Frame | str = Frame.X) -> "HomogeneousPoly":
        return cls(0, {(0, 0, 0): c}, frame)

    @classmethod
    def monomial(cls, t: Exponent, coeff=1, frame: Frame | str = Frame.X) -> "HomogeneousPoly":
        frame = Frame(frame)
        deg = weighted_degree(t) if frame is Frame.E else sum(t)
        return cls(deg, {tuple(t): coeff}, frame)

    @classmethod
    def variable(cls, i: int, frame: Frame | str = Frame.X) -> "HomogeneousPoly":
        t = [0, 0, 0]
        t[i] = 1
        return cls.monomial(tuple(t), 1, frame)

    @classmethod
    def from_vector(cls, l: int, vec: Sequence, frame: Frame | str = Frame.X) -> "HomogeneousPoly":
        """Inverse of :meth:`to_vector` (coordinates in ascending index order)."""
        mons = monomials(l)
        if len(vec) != len(mons):
            raise ValueError("vector length does not match degree")
        return cls(l, ((t, c) for t, c in zip(mons, vec) if c), frame)

    # access -------------------------------------------------------------
    @property
    def terms(self) -> dict[Exponent, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Exponent, Fraction]]:
        return iter(self._terms.items())

    def __iter__(self) -> Iterator[tuple[Exponent, Fraction]]:
        return self.items()

    def __len__(self) -> int:
        return len(self._terms)

    def coeff(self, t: Exponent) -> Fraction:
        return self._terms.get(tuple(t), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def leading(self) -> tuple[Exponent, Fraction]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        return next(iter(self._terms.items()))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    def to_vector(self) -> list[Fraction]:
        if self.frame is Frame.E:
            raise FrameError("dense vectors are defined for X/Y frames only")
        idx = _index_table(self.degree)
        v = [Fraction(0)] * dim_forms(self.degree)
        for t, c in self._terms.items():
            v[idx[t]] = c
        return v

    def with_frame(self, frame: Frame | str) -> "HomogeneousPoly":
        return HomogeneousPoly(self.degree, self._terms, frame)

    # comparisons --------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, HomogeneousPoly):
            if self.is_zero() and other.is_zero():
                return self.frame == other.frame
            return self.frame == other.frame and self.degree == other.degree and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return self.is_zero()
            return self.degree == 0 and self._terms == {(0, 0, 0): Fraction(other)}
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.frame, self.degree, tuple(self._terms.items())))
        return self._hash

    # arithmetic ---------------------------------------------------------
    def _check_same(self, other: "HomogeneousPoly") -> None:
        if self.frame != other.frame:
            raise FrameError(f"frame mismatch: {self.frame.value} vs {other.frame.value}")
        if self.degree != other.degree and not (self.is_zero() or other.is_zero()):
            raise ValueError("cannot add polynomials of different degrees")

    def __add__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        if not isinstance(other, HomogeneousPoly):
            return NotImplemented
        self._check_same(other)
        deg = self.degree if not self.is_zero() else other.degree
        acc = dict(self._terms)
        for t, c in other._terms.items():
            acc[t] = acc.get(t, Fraction(0)) + c
        return HomogeneousPoly(deg, acc, self.frame)

    def __neg__(self) -> "HomogeneousPoly":
        return HomogeneousPoly(self.degree, {t: -c for t, c in self._terms.items()}, self.frame)

    def __sub__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        if not isinstance(other, HomogeneousPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "HomogeneousPoly":
        if isinstance(other, HomogeneousPoly):
            return mul(self, other)
        c = _frac(other)
        return HomogeneousPoly(self.degree, {t: c * v for t, v in self._terms.items()}, self.frame)

    def __rmul__(self, other) -> "HomogeneousPoly":
        return self.__mul__(other)

    def __truediv__(self, other) -> "HomogeneousPoly":
        return self * (1 / _frac(other))

    def __call__(self, *point) -> Fraction:
        if len(point) == 1:
            point = tuple(point[0])
        return eval_poly(self, point)

    # text ---------------------------------------------------------------
    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"HomogeneousPoly({self.degree}, {render(self)!r}, frame={self.frame.value!r})"


# ---------------------------------------------------------------------------
# rendering and parsing
# ---------------------------------------------------------------------------


def _render_monomial(t: Exponent, var: str) -> str:
    parts = []
    for i, a in enumerate(t):
        if a == 1:
            parts.append(f"{var}{i + 1}")
        elif a > 1:
            parts.append(f"{var}{i + 1}^{a}")
    return "*".join(parts)


def render(f: HomogeneousPoly) -> str:
    """Canonical text: terms in canonical order, reduced-fraction coefficients."""
    if f.is_zero():
        return "0"
    var = f.frame.value
    out = []
    for k, (t, c) in enumerate(f.items()):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = _render_monomial(t, var)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if k == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


_TERM_RE = re.compile(r"([+-]?)\s*([^+-]+)")
_FACTOR_RE = re.compile(r"^([xyez])_?\{?([123])\}?(?:\^\{?(\d+)\}?)?")


def parse_poly(text: str, frame: Frame | str = Frame.X, degree: int | None = None) -> HomogeneousPoly:
    """Parse the output of :func:`render` (``*`` between factors is optional)."""
    frame = Frame(frame)
    src = text.replace("−", "-").replace(" ", "").replace("\n", "")
    if src in ("", "0"):
        return HomogeneousPoly.zero(degree or 0, frame)
    terms: dict[Exponent, Fraction] = {}
    pos = 0
    for m in _TERM_RE.finditer(src):
        if m.start() != pos:
            raise ValueError(f"cannot parse polynomial near {src[pos:]!r}")
        pos = m.end()
        sign = -1 if m.group(1) == "-" else 1
        body = m.group(2).strip("*")
        coeff = Fraction(1)
        num = re.match(r"^(\d+(?:/\d+)?)\*?", body)
        if num:
            coeff = Fraction(num.group(1))
            body = body[num.end():]
        exp = [0, 0, 0]
        while body:
            body = body.lstrip("*")
            fm = _FACTOR_RE.match(body)
            if not fm:
                raise ValueError(f"bad factor {body!r}")
            exp[int(fm.group(2)) - 1] += int(fm.group(3) or 1)
            body = body[fm.end():]
        t = tuple(exp)
        terms[t] = terms.get(t, Fraction(0)) + sign * coeff
    if pos != len(src):
        raise ValueError(f"trailing input {src[pos:]!r}")
    degs = {weighted_degree(t) if frame is Frame.E else sum(t) for t in terms}
    if len(degs) != 1:
        raise ValueError("polynomial is not homogeneous")
    deg = degs.pop()
    if degree is not None and deg != degree:
        raise ValueError(f"expected degree {degree}, got {deg}")
    return HomogeneousPoly(deg, terms, frame)


# ---------------------------------------------------------------------------
# basic operations
# ---------------------------------------------------------------------------


def mul(f: HomogeneousPoly, g: HomogeneousPoly) -> HomogeneousPoly:
    if f.frame != g.frame:
        raise FrameError(f"frame mismatch: {f.frame.value} vs {g.frame.value}")
    acc: dict[Exponent, Fraction] = {}
    for s, a in f.items():
        for t, b in g.items():
            u = (s[0] + t[0], s[1] + t[1], s[2] + t[2])
            acc[u] = acc.get(u, 0) + a * b
    return HomogeneousPoly(f.degree + g.degree, acc, f.frame)


def power(f: HomogeneousPoly, n: int) -> HomogeneousPoly:
    out = HomogeneousPoly.constant(1, f.frame)
    base = f
    while n:
        if n & 1:
            out = mul(out, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return out


def eval_poly(f: HomogeneousPoly, point: Sequence) -> Fraction:
    if len(point) != 3:
        raise ValueError("points have three coordinates")
    p = [_frac(x) for x in point]
    pw = [[Fraction(1)] for _ in range(3)]
    total = Fraction(0)
    for t, c in f.items():
        term = c
        for i in range(3):
            while len(pw[i]) <= t[i]:
                pw[i].append(pw[i][-1] * p[i])
            term *= pw[i][t[i]]
        total += term
    return total


def mod2_reduce(f: HomogeneousPoly) -> HomogeneousPoly:
    """The polynomial keeping exactly the monomials whose coefficient is odd."""
    if not f.is_integral():
        raise ValueError("mod 2 reduction needs integer coefficients")
    return HomogeneousPoly(f.degree, {t: 1 for t, c in f.items() if c.numerator % 2}, f.frame)


def primitive_normalize(f: HomogeneousPoly) -> tuple[HomogeneousPoly, Fraction]:
    """Split ``f = scale * prim`` with ``prim`` integral, content 1, leading coefficient > 0."""
    if f.is_zero():
        raise ValueError("cannot normalize the zero polynomial")
    den = lcm(*(c.denominator for _, c in f.items()))
    ints = {t: int(c * den) for t, c in f.items()}
    g = gcd(*ints.values())
    sign = 1 if f.leading()[1] > 0 else -1
    prim = HomogeneousPoly(f.degree, {t: sign * v // g for t, v in ints.items()}, f.frame)
    return prim, Fraction(sign * g, den)


def content_integral(f: HomogeneousPoly) -> HomogeneousPoly:
    """``f`` scaled to a primitive integer polynomial, keeping the sign of every coefficient."""
    prim, scale = primitive_normalize(f)
    return prim if scale > 0 else -prim


# ---------------------------------------------------------------------------
# Laplacians
# ---------------------------------------------------------------------------

_PAIRS = ((0, 1), (0, 2), (1, 2))


def _twice_laplacian_q_terms(t: Exponent):
    """Terms of ``2*Delta_Q x^t``: sum of all d_ii plus the three mixed d_ij."""
    for i in range(3):
        if t[i] >= 2:
            u = list(t)
            u[i] -= 2
            yield tuple(u), t[i] * (t[i] - 1)
    for i, j in _PAIRS:
        if t[i] and t[j]:
            u = list(t)
            u[i] -= 1
            u[j] -= 1
            yield tuple(u), t[i] * t[j]


def laplacian(f: HomogeneousPoly) -> HomogeneousPoly:
    """``Delta_Q f`` where ``2 Delta_Q = sum_i d_ii + sum_{i<j} d_ij``."""
    if f.frame is not Frame.X:
        raise FrameError("laplacian expects an X-frame polynomial (use laplacian_y)")
    if f.degree < 2:
        return HomogeneousPoly.zero(max(f.degree - 2, 0), Frame.X)
    acc: dict[Exponent, Fraction] = {}
    for t, c in f.items():
        for u, k in _twice_laplacian_q_terms(t):
            acc[u] = acc.get(u, 0) + c * k
    return HomogeneousPoly(f.degree - 2, {u: v / 2 for u, v in acc.items()}, Frame.X)


def laplacian_y(f: HomogeneousPoly) -> HomogeneousPoly:
    """Euclidean Laplacian ``d_11 + d_22 + d_33`` on a Y-frame polynomial."""
    if f.frame is not Frame.Y:
        raise FrameError("laplacian_y expects a Y-frame polynomial")
    if f.degree < 2:
        return HomogeneousPoly.zero(max(f.degree - 2, 0), Frame.Y)
    acc: dict[Exponent, Fraction] = {}
    for t, c in f.items():
        for i in range(3):
            if t[i] >= 2:
                u = list(t)
                u[i] -= 2
                u = tuple(u)
                acc[u] = acc.get(u, 0) + c * t[i] * (t[i] - 1)
    return HomogeneousPoly(f.degree - 2, acc, Frame.Y)


def twice_laplacian_rows(l: int) -> list[list[int]]:
    """Integer matrix of ``2 Delta_Q`` from degree ``l`` to ``l-2`` (rows = targets)."""
    rows = [[0] * dim_forms(l) for _ in range(dim_forms(l - 2))]
    if l < 2:
        return rows
    target = _index_table(l - 2)
    for m, t in enumerate(monomials(l)):
        for u, k in _twice_laplacian_q_terms(t):
            rows[target[u]][m] += k
    return rows


def laplacian_matrix(l: int) -> RationalMatrix:
    """The ``d_{l-2} x d_l`` matrix of ``Delta_Q`` in the monomial index basis."""
    rows = twice_laplacian_rows(l)
    return RationalMatrix(([Fraction(x, 2) for x in r] for r in rows), ncols=dim_forms(l))


# ---------------------------------------------------------------------------
# linear substitution  (g . f)(x) = f(x g)
# ---------------------------------------------------------------------------

_INT64_SAFE = 2**56


@lru_cache(maxsize=None)
def _shift_indices(l: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """For each variable i, index in degree ``l`` of ``x_i * u`` for each ``u`` of degree ``l-1``."""
    tab = _index_table(l)
    out = []
    for i in range(3):
        idx = []
        for u in monomials(l - 1):
            w = list(u)
            w[i] += 1
            idx.append(tab[tuple(w)])
        out.append(np.array(idx, dtype=np.intp))
    return tuple(out)


@lru_cache(maxsize=None)
def _parents(l: int) -> tuple[tuple[np.ndarray, np.ndarray], ...]:
    """Split degree-``l`` monomials by the last variable they contain, with parent indices."""
    prev = _index_table(l - 1)
    groups: list[tuple[list[int], list[int]]] = [([], []), ([], []), ([], [])]
    for m, t in enumerate(monomials(l)):
        v = 2 if t[2] else (1 if t[1] else 0)
        u = list(t)
        u[v] -= 1
        groups[v][0].append(m)
        groups[v][1].append(prev[tuple(u)])
    return tuple((np.array(a, dtype=np.intp), np.array(b, dtype=np.intp)) for a, b in groups)


def _integer_matrix(g) -> tuple[tuple[tuple[int, ...], ...], int]:
    """Write a rational 3x3 matrix as ``M / den`` with ``M`` integral."""
    rows = [[_frac(x) for x in r] for r in (g.rows() if isinstance(g, RationalMatrix) else g)]
    if len(rows) != 3 or any(len(r) != 3 for r in rows):
        raise ValueError("expected a 3x3 matrix")
    den = lcm(*(x.denominator for r in rows for x in r))
    return tuple(tuple(int(x * den) for x in r) for r in rows), den


def substitution_matrix_int(M: Sequence[Sequence[int]], l: int, headroom: int = 1) -> np.ndarray:
    """Integer ``d_l x d_l`` matrix whose column ``m`` holds ``x^{t_m}`` with ``x -> x M``.

    Uses ``int64`` when every entry (times ``headroom``) provably fits, Python
    integers otherwise.
    """
    M = tuple(tuple(int(x) for x in r) for r in M)
    colsum = max(sum(abs(M[i][k]) for i in range(3)) for k in range(3))
    dtype = np.int64 if (colsum**l) * headroom < _INT64_SAFE else object
    S = np.ones((1, 1), dtype=dtype)
    for k in range(1, l + 1):
        d = dim_forms(k)
        nxt = np.zeros((d, d), dtype=dtype)
        shifts = _shift_indices(k)
        for v, (cols, par) in enumerate(_parents(k)):
            if len(cols) == 0:
                continue
            block = S[:, par]
            for i in range(3):
                c = M[i][v]
                if c:
                    nxt[np.ix_(shifts[i], cols)] += c * block
        S = nxt
    return S


@lru_cache(maxsize=256)
def _cached_substitution(M: tuple[tuple[int, ...], ...], l: int) -> np.ndarray:
    return substitution_matrix_int(M, l)


def substitution_matrix(g, l: int) -> RationalMatrix:
    """Matrix of ``f -> g . f`` on degree-``l`` forms in the index basis."""
    M, den = _integer_matrix(_raw_matrix(g)[0])
    S = _cached_substitution(M, l)
    scale = Fraction(1, den**l)
    return RationalMatrix(([scale * int(x) for x in row] for row in S), ncols=dim_forms(l))


def _raw_matrix(g):
    from .quaternion import RotationMatrix  # local import: quaternion depends on this module

    if isinstance(g, RotationMatrix):
        return g.matrix, g.frame
    return g, None


def act(g, f: HomogeneousPoly) -> HomogeneousPoly:
    """``(g . f)(x) = f(x g)`` with ``x`` a row vector; a left action.

    ``g`` may be a :class:`~hurwitz_amf.quaternion.RotationMatrix` (frame checked
    against ``f``) or any 3x3 rational matrix.
    """
    if f.frame is Frame.E:
        raise FrameError("linear substitution is not defined on the E frame")
    mat, gframe = _raw_matrix(g)
    if gframe is not None and gframe != f.frame:
        raise FrameError(f"{gframe.value}-frame matrix cannot act on a {f.frame.value}-frame polynomial")
    if f.is_zero():
        return f
    M, den = _integer_matrix(mat)
    l = f.degree
    S = _cached_substitution(M, l)
    vec = f.to_vector()
    vden = lcm(*(c.denominator for c in vec if c))
    nz = [i for i, c in enumerate(vec) if c]
    V = np.array([int(vec[i] * vden) for i in nz], dtype=object)
    out = S[:, nz].astype(object).dot(V)
    scale = Fraction(1, vden * den**l)
    return HomogeneousPoly.from_vector(l, [scale * int(x) if x else 0 for x in out], f.frame)


# frame change x = y * GAMMA_Y, y = x * GAMMA_Y^{-1}
GAMMA_Y = RationalMatrix([[0, Fraction(1, 2), Fraction(1, 2)], [Fraction(1, 2), 0, Fraction(1, 2)], [Fraction(1, 2), Fraction(1, 2), 0]])
GAMMA_Y_INV = RationalMatrix([[-1, 1, 1], [1, -1, 1], [1, 1, -1]])


def change_frame_xy(f: HomogeneousPoly) -> HomogeneousPoly:
    """Rewrite an X-frame polynomial in Y coordinates or vice versa.

    ``y1 = -x1+x2+x3, y2 = x1-x2+x3, y3 = x1+x2-x3`` and
    ``x1 = (y2+y3)/2, x2 = (y1+y3)/2, x3 = (y1+y2)/2``.
    """
    if f.frame is Frame.X:
        return act(GAMMA_Y, f).with_frame(Frame.Y)
    if f.frame is Frame.Y:
        return act(GAMMA_Y_INV, f).with_frame(Frame.X)
    raise FrameError("E-frame polynomials have no direct x/y counterpart")


def to_frame(f: HomogeneousPoly, frame: Frame | str) -> HomogeneousPoly:
    frame = Frame(frame)
    return f if f.frame is frame else change_frame_xy(f)


def norm_form(frame: Frame | str = Frame.X) -> HomogeneousPoly:
    """The reduced norm on trace-zero quaternions in the given frame."""
    frame = Frame(frame)
    if frame is Frame.X:
        return HomogeneousPoly(
            2,
            {(2, 0, 0): 3, (0, 2, 0): 3, (0, 0, 2): 3, (1, 1, 0): -2, (1, 0, 1): -2, (0, 1, 1): -2},
            Frame.X,
        )
    if frame is Frame.Y:
        return HomogeneousPoly(2, {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1}, Frame.Y)
    raise FrameError("no norm form on the E frame")
