"""Exact linear algebra over the rationals.

Everything here is deterministic: the reduced row echelon form of a matrix is
unique, and kernel vectors are emitted in the canonical "free variable set to
one" parameterisation, ordered by free column.

Internally rows are cleared to primitive integer vectors and eliminated
fraction-free (``p*r - c*b`` followed by content removal); the reduced form is
only converted back to :class:`~fractions.Fraction` at the end.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Iterator, Sequence

Rational = Fraction


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    # numpy integers and other numbers.Rational implementations
    try:
        return Fraction(int(x)) if int(x) == x else Fraction(x)
    except (TypeError, ValueError) as exc:
        raise TypeError(f"cannot convert {x!r} to an exact rational") from exc


class RationalMatrix:
    """Dense immutable matrix of :class:`Fraction` entries (row-major)."""

    __slots__ = ("_rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        data = tuple(tuple(_as_fraction(x) for x in row) for row in rows)
        if data:
            width = len(data[0])
            if any(len(r) != width for r in data):
                raise ValueError("ragged rows")
            if ncols is not None and ncols != width:
                raise ValueError("ncols disagrees with row width")
        else:
            width = 0 if ncols is None else ncols
        self._rows = data
        self.nrows = len(data)
        self.ncols = width

    # constructors -----------------------------------------------------
    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "RationalMatrix":
        return cls([[0] * ncols for _ in range(nrows)], ncols=ncols)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], ncols=n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int | None = None) -> "RationalMatrix":
        if not columns:
            return cls([[] for _ in range(nrows or 0)], ncols=0)
        n = len(columns[0])
        return cls([[c[i] for c in columns] for i in range(n)], ncols=len(columns))

    # access -------------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._rows[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self._rows)

    def __getitem__(self, idx: tuple[int, int]) -> Fraction:
        i, j = idx
        return self._rows[i][j]

    def __iter__(self) -> Iterator[tuple[Fraction, ...]]:
        return iter(self._rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.shape, self._rows))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self._rows)
        return f"RationalMatrix([{body}])"

    # arithmetic ---------------------------------------------------------
    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(zip(*self._rows), ncols=self.nrows) if self.nrows else RationalMatrix.zeros(self.ncols, 0)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other._rows)) if other.nrows else [() for _ in range(other.ncols)]
        out = [[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols] for r in self._rows]
        return RationalMatrix(out, ncols=other.ncols)

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return RationalMatrix(
            ([a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)), ncols=self.ncols
        )

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return RationalMatrix(
            ([a - b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)), ncols=self.ncols
        )

    def scale(self, c) -> "RationalMatrix":
        c = _as_fraction(c)
        return RationalMatrix(([c * a for a in r] for r in self._rows), ncols=self.ncols)

    def apply(self, v: Sequence) -> list[Fraction]:
        """Matrix-vector product ``M v``."""
        if len(v) != self.ncols:
            raise ValueError("vector length mismatch")
        return [sum((a * _as_fraction(b) for a, b in zip(r, v) if a), Fraction(0)) for r in self._rows]

    def trace(self) -> Fraction:
        if self.nrows != self.ncols:
            raise ValueError("trace of a non-square matrix")
        return sum((self._rows[i][i] for i in range(self.nrows)), Fraction(0))

    def is_square(self) -> bool:
        return self.nrows == self.ncols


# ---------------------------------------------------------------------------
# integer kernels
# ---------------------------------------------------------------------------


def _primitive(row: list[int]) -> list[int]:
    g = gcd(*row)
    if g > 1:
        return [x // g for x in row]
    return row


def _clear_row(row: Sequence) -> list[int]:
    """Scale a rational row to an integer row (same row space)."""
    fr = [_as_fraction(x) for x in row]
    den = lcm(*(x.denominator for x in fr)) if fr else 1
    return [int(x * den) for x in fr]


def _first_nonzero(row: Sequence[int]) -> int:
    for j, x in enumerate(row):
        if x:
            return j
    return -1


def _reduced_echelon_int(rows: Iterable[Sequence[int]]) -> dict[int, list[int]]:
    """Fraction-free incremental Gauss-Jordan.

    Returns ``{pivot_column: row}`` where every row is a primitive integer
    vector with positive pivot entry and zero entries in all *other* pivot
    columns, i.e. the reduced row echelon form up to one positive scale per row.
    """
    basis: dict[int, list[int]] = {}
    for raw in rows:
        r = list(raw)
        if not any(r):
            continue
        for pc in sorted(basis):
            c = r[pc]
            if c:
                b = basis[pc]
                p = b[pc]
                g = gcd(p, c)
                p //= g
                c //= g
                r = [p * x - c * y for x, y in zip(r, b)]
        if not any(r):
            continue
        r = _primitive(r)
        npc = _first_nonzero(r)
        if r[npc] < 0:
            r = [-x for x in r]
        p = r[npc]
        for pc, b in basis.items():
            c = b[npc]
            if c:
                g = gcd(p, c)
                pp, cc = p // g, c // g
                nb = _primitive([pp * x - cc * y for x, y in zip(b, r)])
                basis[pc] = nb
        basis[npc] = r
    return basis


def pivot_columns_int(rows: Iterable[Sequence[int]], ncols: int | None = None) -> list[int]:
    """Pivot columns of the reduced row echelon form of an integer matrix."""
    return sorted(_reduced_echelon_int(rows))


# ---------------------------------------------------------------------------
# public API
# ---------------------------------------------------------------------------


def _integer_rows(M: RationalMatrix) -> list[list[int]]:
    return [_clear_row(r) for r in M.rows()]


def rref(M: RationalMatrix) -> tuple[RationalMatrix, list[int]]:
    """Reduced row echelon form and its (strictly increasing) pivot columns.

    Zero rows are kept at the bottom so the result has the shape of ``M``.
    """
    basis = _reduced_echelon_int(_integer_rows(M))
    pivots = sorted(basis)
    out: list[list[Fraction]] = []
    for pc in pivots:
        b = basis[pc]
        p = b[pc]
        out.append([Fraction(x, p) for x in b])
    zero = [Fraction(0)] * M.ncols
    out.extend(list(zero) for _ in range(M.nrows - len(pivots)))
    return RationalMatrix(out, ncols=M.ncols), pivots


def rank(M: RationalMatrix) -> int:
    return len(_reduced_echelon_int(_integer_rows(M)))


def _kernel_from_basis(basis: dict[int, list[int]], ncols: int) -> list[list[Fraction]]:
    pivots = sorted(basis)
    pivot_set = set(pivots)
    vectors = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for pc in pivots:
            b = basis[pc]
            if b[f]:
                v[pc] = Fraction(-b[f], b[pc])
        vectors.append(v)
    return vectors


def kernel_basis(M: RationalMatrix) -> list[list[Fraction]]:
    """Basis of ``{v : M v = 0}``, one vector per free column (in column order).

    Each vector has a 1 in its free column, 0 in the other free columns, and the
    pivot coordinates solved from the reduced row echelon form.
    """
    return _kernel_from_basis(_reduced_echelon_int(_integer_rows(M)), M.ncols)


def kernel_basis_int(rows: Sequence[Sequence[int]], ncols: int) -> list[list[Fraction]]:
    """:func:`kernel_basis` for a matrix already given as integer rows."""
    return _kernel_from_basis(_reduced_echelon_int(rows), ncols)


def column_image_basis(M: RationalMatrix) -> tuple[list[int], list[tuple[Fraction, ...]]]:
    """Pivot column indices of ``rref(M)`` and the corresponding original columns."""
    pivots = sorted(_reduced_echelon_int(_integer_rows(M)))
    return pivots, [M.column(j) for j in pivots]


def row_space_rref(vectors: Sequence[Sequence]) -> list[list[Fraction]]:
    """Nonzero rows of the reduced row echelon form of the stacked vectors."""
    if not vectors:
        return []
    R, piv = rref(RationalMatrix(vectors))
    return [list(R.row(i)) for i in range(len(piv))]


def solve_in_span(basis_vectors: Sequence[Sequence], target: Sequence) -> list[Fraction] | None:
    """Coefficients ``c`` with ``sum c_i b_i == target``, or ``None`` if outside the span.

    ``basis_vectors`` must be linearly independent.
    """
    k = len(basis_vectors)
    if k == 0:
        return [] if not any(_as_fraction(x) for x in target) else None
    # columns are the basis vectors, augmented by the target
    aug = RationalMatrix([list(col) + [t] for col, t in zip(zip(*basis_vectors), target)])
    R, piv = rref(aug)
    if k in piv:
        return None
    if len(piv) != k:
        raise ValueError("basis vectors are linearly dependent")
    return [R[i, k] for i in range(k)]


# ---------------------------------------------------------------------------
# modular helpers (selection only; callers certify results exactly)
# ---------------------------------------------------------------------------

DEFAULT_PRIME = 2147483629  # largest prime below 2**31, so products fit in int64


def pivot_columns_mod_p(A, p: int = DEFAULT_PRIME) -> list[int]:
    """Pivot columns of the row echelon form of an integer matrix reduced modulo ``p``.

    ``A`` is any 2-d integer array-like (``int64`` or Python-integer ``object``
    arrays both work). Columns independent modulo ``p`` are independent over
    the rationals, so the result is always a linearly independent set of
    columns; it is a basis of the column space whenever its size equals the
    rational rank.
    """
    import numpy as np

    M = np.asarray(A)
    if M.dtype == object:
        M = np.array([[int(x) % p for x in row] for row in M], dtype=np.int64).reshape(M.shape)
    else:
        M = np.mod(M.astype(np.int64), p)
    nrows, ncols = M.shape
    pivots: list[int] = []
    r = 0
    for j in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(M[r:, j])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            M[[r, i]] = M[[i, r]]
        inv = pow(int(M[r, j]), -1, p)
        M[r, j:] = (M[r, j:] * inv) % p
        below = r + 1 + np.flatnonzero(M[r + 1:, j])
        if below.size:
            f = M[below, j]
            M[np.ix_(below, np.arange(j, ncols))] = (M[below, j:] - np.outer(f, M[r, j:]) % p) % p
        pivots.append(j)
        r += 1
    return pivots
