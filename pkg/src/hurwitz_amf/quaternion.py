"""Hurwitz quaternions and their conjugation action on the trace-zero lattice.

A Hurwitz quaternion ``(c0 + c1 i + c2 j + c3 ij)/2`` is stored through the
integer 4-tuple ``(c0, c1, c2, c3)``; the four entries share a parity.

The conjugation ``x -> q^{-1} x q`` on pure quaternions is written as a 3x3
matrix acting on row vectors, either in the lattice basis

    b1 = -i + j + ij,   b2 = i - j + ij,   b3 = i + j - ij

(frame ``X``, preserving the Gram matrix ``Q``) or in the orthonormal
coordinates along ``i, j, ij`` (frame ``Y``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Iterable

from .exact_linalg import RationalMatrix
from .polyring import GAMMA_Y, GAMMA_Y_INV, Frame

Q_MATRIX = RationalMatrix([[3, -1, -1], [-1, 3, -1], [-1, -1, 3]])
Q_INVERSE = RationalMatrix([[Fraction(1, 2), Fraction(1, 4), Fraction(1, 4)], [Fraction(1, 4), Fraction(1, 2), Fraction(1, 4)], [Fraction(1, 4), Fraction(1, 4), Fraction(1, 2)]])


# ---------------------------------------------------------------------------
# quaternions
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class HurwitzQuaternion:
    """Element ``(c0 + c1 i + c2 j + c3 ij)/2`` of the Hurwitz order."""

    c: tuple[int, int, int, int]

    def __post_init__(self):
        c = tuple(int(x) for x in self.c)
        if len(c) != 4:
            raise ValueError("a quaternion has four coordinates")
        if len({x % 2 for x in c}) != 1:
            raise ValueError(f"coordinates {c} do not share a parity")
        object.__setattr__(self, "c", c)

    @classmethod
    def from_integral(cls, a0: int, a1: int, a2: int, a3: int) -> "HurwitzQuaternion":
        """The Lipschitz quaternion ``a0 + a1 i + a2 j + a3 ij``."""
        return cls((2 * a0, 2 * a1, 2 * a2, 2 * a3))

    def __mul__(self, other: "HurwitzQuaternion") -> "HurwitzQuaternion":
        return quat_mul(self, other)

    def __neg__(self) -> "HurwitzQuaternion":
        return HurwitzQuaternion(tuple(-x for x in self.c))

    def __add__(self, other: "HurwitzQuaternion") -> "HurwitzQuaternion":
        return HurwitzQuaternion(tuple(a + b for a, b in zip(self.c, other.c)))

    def __sub__(self, other: "HurwitzQuaternion") -> "HurwitzQuaternion":
        return self + (-other)

    def coordinates(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        """Coefficients of ``1, i, j, ij``."""
        return tuple(Fraction(x, 2) for x in self.c)

    def is_pure(self) -> bool:
        return self.c[0] == 0

    def __str__(self) -> str:
        names = ("", "i", "j", "ij")
        parts = []
        for x, n in zip(self.coordinates(), names):
            if x:
                parts.append(f"{x}{'*' + n if n else ''}")
        return " + ".join(parts) if parts else "0"


def _hamilton(a, b):
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


def quat_mul(a: HurwitzQuaternion, b: HurwitzQuaternion) -> HurwitzQuaternion:
    prod = _hamilton(a.c, b.c)  # four times the product, doubled twice
    if any(x % 2 for x in prod):
        raise ArithmeticError("product left the Hurwitz order")
    return HurwitzQuaternion(tuple(x // 2 for x in prod))


def quat_conj(a: HurwitzQuaternion) -> HurwitzQuaternion:
    c0, c1, c2, c3 = a.c
    return HurwitzQuaternion((c0, -c1, -c2, -c3))


def quat_norm(a: HurwitzQuaternion) -> int:
    s = sum(x * x for x in a.c)
    if s % 4:
        raise ArithmeticError("norm is not integral")
    return s // 4


def quat_trace(a: HurwitzQuaternion) -> int:
    return a.c[0]


ONE = HurwitzQuaternion((2, 0, 0, 0))
I = HurwitzQuaternion((0, 2, 0, 0))
J = HurwitzQuaternion((0, 0, 2, 0))
IJ = HurwitzQuaternion((0, 0, 0, 2))
W = HurwitzQuaternion((1, 1, 1, 1))
B_BASIS = (
    HurwitzQuaternion((0, -2, 2, 2)),
    HurwitzQuaternion((0, 2, -2, 2)),
    HurwitzQuaternion((0, 2, 2, -2)),
)


def pure_to_b_coords(x: HurwitzQuaternion) -> tuple[Fraction, Fraction, Fraction]:
    """Coordinates of a pure quaternion in the basis ``b1, b2, b3``."""
    if not x.is_pure():
        raise ValueError("expected a pure quaternion")
    y = x.coordinates()[1:]
    return tuple(sum(y[i] * GAMMA_Y[i, k] for i in range(3)) for k in range(3))


def b_coords_to_pure(v) -> HurwitzQuaternion:
    y = [sum(Fraction(v[i]) * GAMMA_Y_INV[i, k] for i in range(3)) for k in range(3)]
    doubled = [0] + [2 * t for t in y]
    if any(Fraction(t).denominator != 1 for t in doubled):
        raise ValueError("point is not in the order")
    return HurwitzQuaternion(tuple(int(t) for t in doubled))


# ---------------------------------------------------------------------------
# rotation matrices
# ---------------------------------------------------------------------------


def _det3(m: RationalMatrix) -> Fraction:
    return (
        m[0, 0] * (m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1])
        - m[0, 1] * (m[1, 0] * m[2, 2] - m[1, 2] * m[2, 0])
        + m[0, 2] * (m[1, 0] * m[2, 1] - m[1, 1] * m[2, 0])
    )


def _inverse3(m: RationalMatrix) -> RationalMatrix:
    d = _det3(m)
    if d == 0:
        raise ZeroDivisionError("singular matrix")
    cof = [[Fraction(0)] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            r = [a for a in range(3) if a != i]
            c = [b for b in range(3) if b != j]
            minor = m[r[0], c[0]] * m[r[1], c[1]] - m[r[0], c[1]] * m[r[1], c[0]]
            cof[j][i] = (-1) ** (i + j) * minor / d
    return RationalMatrix(cof)


@dataclass(frozen=True)
class RotationMatrix:
    """A 3x3 rational matrix acting on row vectors, tagged with its frame."""

    matrix: RationalMatrix
    frame: Frame = Frame.X
    _key: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        m = self.matrix if isinstance(self.matrix, RationalMatrix) else RationalMatrix(self.matrix)
        if m.shape != (3, 3):
            raise ValueError("rotation matrices are 3x3")
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "frame", Frame(self.frame))
        object.__setattr__(self, "_key", tuple(x for r in m.rows() for x in r))

    @property
    def key(self) -> tuple[Fraction, ...]:
        """Row-major entries; the lexicographic order on these picks coset representatives."""
        return self._key

    def __matmul__(self, other: "RotationMatrix") -> "RotationMatrix":
        if self.frame != other.frame:
            raise ValueError("frame mismatch")
        return RotationMatrix(self.matrix @ other.matrix, self.frame)

    def __getitem__(self, idx):
        return self.matrix[idx]

    def rows(self):
        return self.matrix.rows()

    def inverse(self) -> "RotationMatrix":
        return RotationMatrix(_inverse3(self.matrix), self.frame)

    def transpose(self) -> "RotationMatrix":
        return RotationMatrix(self.matrix.transpose(), self.frame)

    def det(self) -> Fraction:
        return _det3(self.matrix)

    def trace(self) -> Fraction:
        return self.matrix.trace()

    def is_identity(self) -> bool:
        return self.matrix == RationalMatrix.identity(3)

    def order(self, limit: int = 24) -> int:
        p = self
        for k in range(1, limit + 1):
            if p.is_identity():
                return k
            p = p @ self
        raise ValueError("element of infinite or large order")

    def preserves_form(self) -> bool:
        """``g Q g^T = Q`` (frame X) or ``g g^T = I`` (frame Y)."""
        g = self.matrix
        if self.frame is Frame.X:
            return g @ Q_MATRIX @ g.transpose() == Q_MATRIX
        return g @ g.transpose() == RationalMatrix.identity(3)

    def to_frame(self, frame: Frame | str) -> "RotationMatrix":
        frame = Frame(frame)
        if frame is self.frame:
            return self
        if frame is Frame.Y:
            return RotationMatrix(GAMMA_Y @ self.matrix @ GAMMA_Y_INV, Frame.Y)
        return RotationMatrix(GAMMA_Y_INV @ self.matrix @ GAMMA_Y, Frame.X)

    def __hash__(self) -> int:
        return hash((self.frame, self._key))

    def __eq__(self, other) -> bool:
        if not isinstance(other, RotationMatrix):
            return NotImplemented
        return self.frame == other.frame and self._key == other._key

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.matrix.rows())
        return f"RotationMatrix([{body}], frame={self.frame.value!r})"


def rho(q: HurwitzQuaternion, frame: Frame | str = Frame.X) -> RotationMatrix:
    """Matrix of ``x -> q^{-1} x q`` on pure quaternions (row ``k`` = image of the ``k``-th basis vector)."""
    frame = Frame(frame)
    n = quat_norm(q)
    if n == 0:
        raise ZeroDivisionError("rho of the zero quaternion")
    qc = quat_conj(q)
    basis = B_BASIS if frame is Frame.X else (I, J, IJ)
    rows = []
    for b in basis:
        # doubled coordinates of conj(q) b q, computed without leaving the integers
        img = _hamilton(_hamilton(qc.c, b.c), q.c)  # = 8 * conj(q) b q
        y = [Fraction(x, 8 * n) for x in img[1:]]
        if frame is Frame.X:
            rows.append([sum(y[i] * GAMMA_Y[i, k] for i in range(3)) for k in range(3)])
        else:
            rows.append(y)
    return RotationMatrix(RationalMatrix(rows), frame)


IDENTITY = RotationMatrix(RationalMatrix.identity(3))


@lru_cache(maxsize=None)
def unit_group() -> tuple[HurwitzQuaternion, ...]:
    """The 24 units: ``+-1, +-i, +-j, +-ij`` and ``(+-1 +-i +-j +-ij)/2``."""
    units = []
    for k in range(4):
        for s in (2, -2):
            c = [0, 0, 0, 0]
            c[k] = s
            units.append(HurwitzQuaternion(tuple(c)))
    for s0 in (1, -1):
        for s1 in (1, -1):
            for s2 in (1, -1):
                for s3 in (1, -1):
                    units.append(HurwitzQuaternion((s0, s1, s2, s3)))
    return tuple(sorted(units, reverse=True))


def _unique_sorted(mats: Iterable[RotationMatrix]) -> tuple[RotationMatrix, ...]:
    seen = {m.key: m for m in mats}
    return tuple(seen[k] for k in sorted(seen))


@lru_cache(maxsize=None)
def gamma_list(frame: Frame | str = Frame.X) -> tuple[RotationMatrix, ...]:
    """The 12 matrices of the unit group image, sorted by :attr:`RotationMatrix.key`."""
    return _unique_sorted(rho(u, frame) for u in unit_group())


GEN_I = rho(I)
GEN_J = rho(J)
GEN_W = rho(W)
GAMMA1 = rho(HurwitzQuaternion.from_integral(1, 1, 0, 0))
GAMMA2 = rho(HurwitzQuaternion.from_integral(0, 1, -1, 0))


@lru_cache(maxsize=None)
def gamma_gamma2_list(frame: Frame | str = Frame.X) -> tuple[RotationMatrix, ...]:
    """The 12 matrices ``gamma * gamma2`` for ``gamma`` in the unit group image."""
    g2 = GAMMA2.to_frame(frame)
    return _unique_sorted(g @ g2 for g in gamma_list(frame))


# ---------------------------------------------------------------------------
# elements of given norm and Hecke cosets
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def norm_elements(n: int) -> tuple[HurwitzQuaternion, ...]:
    """All Hurwitz quaternions of reduced norm ``n`` in lexicographic order of ``c``."""
    if n < 1:
        raise ValueError("norm must be positive")
    target = 4 * n
    r = isqrt(target)
    out = []
    for c0 in range(-r, r + 1):
        s0 = target - c0 * c0
        for c1 in range(-r, r + 1):
            if (c1 - c0) % 2:
                continue
            s1 = s0 - c1 * c1
            if s1 < 0:
                continue
            for c2 in range(-r, r + 1):
                if (c2 - c0) % 2:
                    continue
                s2 = s1 - c2 * c2
                if s2 < 0:
                    continue
                c3 = isqrt(s2)
                if c3 * c3 != s2 or (c3 - c0) % 2:
                    continue
                out.append((c0, c1, c2, -c3))
                if c3:
                    out.append((c0, c1, c2, c3))
    return tuple(HurwitzQuaternion(c) for c in sorted(out))


@lru_cache(maxsize=None)
def hecke_matrices(n: int) -> tuple[RotationMatrix, ...]:
    """Distinct images under :func:`rho` of the quaternions of norm ``n``."""
    return _unique_sorted(rho(q) for q in norm_elements(n))


def _partition(mats: Iterable[RotationMatrix], orbit) -> list[tuple[RotationMatrix, ...]]:
    remaining = {m.key: m for m in mats}
    blocks = []
    for k in sorted(remaining):
        if k not in remaining:
            continue
        block = _unique_sorted(orbit(remaining[k]))
        for m in block:
            remaining.pop(m.key, None)
        blocks.append(block)
    return blocks


@lru_cache(maxsize=None)
def hecke_cosets(n: int) -> tuple[tuple[RotationMatrix, ...], ...]:
    """Left cosets ``Gamma g`` partitioning the norm-``n`` matrices, each sorted by key."""
    gam = gamma_list()
    return tuple(_partition(hecke_matrices(n), lambda m: (g @ m for g in gam)))


def hecke_coset_reps(p: int) -> tuple[RotationMatrix, ...]:
    """One representative (the lexicographically least matrix) per coset ``Gamma g``."""
    return tuple(block[0] for block in hecke_cosets(p))


@lru_cache(maxsize=None)
def conjugacy_classes(n: int) -> tuple[tuple[RotationMatrix, ...], ...]:
    """Classes of the norm-``n`` matrices under conjugation ``m -> g m g^{-1}`` by ``Gamma``."""
    gam = gamma_list()
    return tuple(_partition(hecke_matrices(n), lambda m: (g @ m @ g.inverse() for g in gam)))
