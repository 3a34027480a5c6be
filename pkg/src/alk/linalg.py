"""Exact dense linear algebra over the rationals.

Entries are Python ints or :class:`fractions.Fraction` values, both exact
rationals.  Integral values are kept as ``int`` so that the common case of
small integer matrices never pays for fraction normalisation.

Elimination runs fraction-free on integer rows (each row scaled by the lcm of
its denominators, then kept primitive by dividing out the content), so no
intermediate growth beyond what the row space itself needs.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]
Vector = tuple


def q(x) -> Rational:
    """Normalise an exact scalar: integral fractions collapse to ``int``."""
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, str):
        return q(Fraction(x))
    if isinstance(x, float):
        raise TypeError("floating point entries are not allowed")
    return q(Fraction(x))


def _div(n: int, d: int) -> Rational:
    if n % d == 0:
        return n // d
    return Fraction(n, d)


class Matrix:
    """Immutable rows x cols matrix with exact entries, row-major."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Iterable[Sequence], cols: int | None = None):
        rows = tuple(tuple(q(x) for x in row) for row in data)
        if cols is None:
            if not rows:
                raise ValueError("column count required for a matrix with no rows")
            cols = len(rows[0])
        for row in rows:
            if len(row) != cols:
                raise ValueError("ragged matrix rows")
        self.rows = len(rows)
        self.cols = cols
        self.data = rows

    @classmethod
    def _raw(cls, rows: tuple, cols: int) -> "Matrix":
        m = object.__new__(cls)
        m.rows = len(rows)
        m.cols = cols
        m.data = rows
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls._raw(tuple((0,) * cols for _ in range(rows)), cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._raw(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)), n)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> tuple:
        """Flat row-major entry tuple of length rows * cols."""
        return tuple(x for row in self.data for x in row)

    def __getitem__(self, idx):
        i, j = idx
        return self.data[i][j]

    def row(self, i: int) -> Vector:
        return self.data[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.data))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.data)
        return f"Matrix({self.rows}x{self.cols}: [{body}])"

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    @property
    def T(self) -> "Matrix":
        return Matrix._raw(tuple(zip(*self.data)) if self.rows else tuple(() for _ in range(self.cols)), self.rows)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix._raw(
            tuple(tuple(q(a + b) for a, b in zip(r, s)) for r, s in zip(self.data, other.data)), self.cols
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(-1)

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, c) -> "Matrix":
        c = q(c)
        if c == 0:
            return Matrix.zeros(self.rows, self.cols)
        if c == 1:
            return self
        return Matrix._raw(tuple(tuple(q(c * x) for x in row) for row in self.data), self.cols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        n = other.cols
        odata = other.data
        out = []
        for row in self.data:
            acc = [0] * n
            for k, a in enumerate(row):
                if a:
                    brow = odata[k]
                    for j in range(n):
                        b = brow[j]
                        if b:
                            acc[j] += a * b
            out.append(tuple(q(x) for x in acc))
        return Matrix._raw(tuple(out), n)

    def vecmul(self, v: Sequence) -> Vector:
        """Row vector times matrix."""
        n = self.cols
        acc = [0] * n
        for k, a in enumerate(v):
            if a:
                brow = self.data[k]
                for j in range(n):
                    b = brow[j]
                    if b:
                        acc[j] += a * b
        return tuple(q(x) for x in acc)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix._raw(tuple(tuple(self.data[i][j] for j in cols) for i in rows), len(cols))


def block_diag(blocks: Sequence[Matrix]) -> Matrix:
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    out = [[0] * cols for _ in range(rows)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            out[r0 + i][c0 : c0 + b.cols] = b.data[i]
        r0 += b.rows
        c0 += b.cols
    return Matrix._raw(tuple(tuple(r) for r in out), cols)


def hstack(blocks: Sequence[Matrix], rows: int) -> Matrix:
    for b in blocks:
        if b.rows != rows:
            raise ValueError("row count mismatch in hstack")
    cols = sum(b.cols for b in blocks)
    data = tuple(tuple(x for b in blocks for x in b.data[i]) for i in range(rows))
    return Matrix._raw(data, cols)


def vstack(blocks: Sequence[Matrix], cols: int) -> Matrix:
    for b in blocks:
        if b.cols != cols:
            raise ValueError("column count mismatch in vstack")
    return Matrix._raw(tuple(r for b in blocks for r in b.data), cols)


# ---------------------------------------------------------------------------
# fraction-free sparse elimination engine


def _to_int_row(row: Iterable) -> dict[int, int]:
    items = [(j, x) for j, x in enumerate(row) if x != 0]
    if not items:
        return {}
    den = 1
    for _, x in items:
        d = x.denominator
        if d != 1:
            den = lcm(den, d)
    if den == 1:
        out = {j: int(x) for j, x in items}
    else:
        out = {j: int(x * den) for j, x in items}
    return _primitive(out)


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = gcd(*row.values())
    if g > 1:
        return {j: v // g for j, v in row.items()}
    return row


def _eliminate(row: dict[int, int], piv: dict[int, int], c: int) -> dict[int, int]:
    a = piv[c]
    b = row[c]
    g = gcd(a, b)
    ma, mb = a // g, b // g
    if ma == 1:
        new = dict(row)
    else:
        new = {j: ma * v for j, v in row.items()}
    for j, v in piv.items():
        w = new.get(j, 0) - mb * v
        if w:
            new[j] = w
        else:
            new.pop(j, None)
    return _primitive(new) if new else new


def _reduce(rows: list[dict[int, int]], ncols: int) -> list[tuple[int, dict[int, int]]]:
    """Gauss-Jordan on integer rows; returns (pivot column, row) sorted by pivot.

    Every returned row has zeros in all other pivot columns.
    """
    active = [r for r in rows if r]
    pivots: list[tuple[int, dict[int, int]]] = []
    for c in range(ncols):
        best = -1
        for idx, r in enumerate(active):
            if c in r:
                if best < 0 or (len(r), abs(r[c])) < (len(active[best]), abs(active[best][c])):
                    best = idx
        if best < 0:
            continue
        p = active.pop(best)
        if p[c] < 0:
            p = {j: -v for j, v in p.items()}
        nxt = []
        for r in active:
            if c in r:
                r = _eliminate(r, p, c)
                if r:
                    nxt.append(r)
            else:
                nxt.append(r)
        active = nxt
        for k, (pc, pr) in enumerate(pivots):
            if c in pr:
                pivots[k] = (pc, _eliminate(pr, p, c))
        pivots.append((c, p))
    return pivots


def _normalised(piv: list[tuple[int, dict[int, int]]]) -> list[tuple[int, dict[int, Rational]]]:
    out = []
    for c, r in piv:
        lead = r[c]
        if lead == 1:
            out.append((c, r))
        else:
            out.append((c, {j: _div(v, lead) for j, v in r.items()}))
    return out


def _dense(row: dict[int, Rational], ncols: int) -> Vector:
    v = [0] * ncols
    for j, x in row.items():
        v[j] = x
    return tuple(v)


def _echelon(m: Matrix | Sequence[Sequence]) -> tuple[list[tuple[int, dict]], int]:
    if isinstance(m, Matrix):
        data, ncols = m.data, m.cols
    else:
        data = m
        ncols = len(data[0]) if data else 0
    return _normalised(_reduce([_to_int_row(r) for r in data], ncols)), ncols


# ---------------------------------------------------------------------------
# public operations


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row-echelon form and the strictly increasing pivot columns.

    >>> rref(Matrix([[2, 4], [1, 2]]))
    (Matrix(2x2: [[1, 2], [0, 0]]), [0])
    """
    piv, ncols = _echelon(m)
    rows = [_dense(r, ncols) for _, r in piv]
    rows += [(0,) * ncols] * (m.rows - len(rows))
    return Matrix._raw(tuple(rows), ncols), [c for c, _ in piv]


def rank(m: Matrix) -> int:
    return len(_echelon(m)[0])


def is_invertible(m: Matrix) -> bool:
    if m.rows != m.cols:
        raise ValueError(f"is_invertible needs a square matrix, got {m.shape}")
    return rank(m) == m.rows


def kernel_basis(m: Matrix) -> list[Vector]:
    """Basis of the right null space {x : m x = 0}, one vector per free column."""
    piv, ncols = _echelon(m)
    pivot_cols = {c for c, _ in piv}
    basis = []
    for f in range(ncols):
        if f in pivot_cols:
            continue
        v = [0] * ncols
        v[f] = 1
        for c, r in piv:
            x = r.get(f)
            if x:
                v[c] = -x
        basis.append(tuple(v))
    return basis


def left_kernel_basis(m: Matrix) -> list[Vector]:
    """Basis of {y : y m = 0}."""
    return kernel_basis(m.T)


def solve(a: Matrix, b: Matrix) -> Matrix | None:
    """Particular solution x of a x = b with free variables zeroed, or None."""
    if a.rows != b.rows:
        raise ValueError("solve: a and b must have the same number of rows")
    n = a.cols
    aug = [ra + rb for ra, rb in zip(a.data, b.data)]
    piv = _normalised(_reduce([_to_int_row(r) for r in aug], n + b.cols))
    x = [[0] * b.cols for _ in range(n)]
    for c, r in piv:
        if c >= n:
            return None
        for j, v in r.items():
            if j >= n:
                x[c][j - n] = v
    return Matrix._raw(tuple(tuple(row) for row in x), b.cols)


def row_basis(vectors: Sequence[Sequence], ncols: int) -> tuple[list[Vector], list[int]]:
    """RREF basis of the span of ``vectors`` (as rows) and its pivot columns."""
    piv = _normalised(_reduce([_to_int_row(v) for v in vectors], ncols))
    return [_dense(r, ncols) for _, r in piv], [c for c, _ in piv]


def span_rank(vectors: Sequence[Sequence], ncols: int) -> int:
    return len(_reduce([_to_int_row(v) for v in vectors], ncols))


class SpanCoordinates:
    """Express vectors in a fixed linearly independent family of row vectors.

    The family is reduced once (tracking the transformation), after which
    coordinates are read off the pivot columns.
    """

    def __init__(self, basis: Sequence[Sequence], ncols: int):
        k = len(basis)
        self.ncols = ncols
        self.size = k
        aug = [tuple(v) + tuple(1 if i == j else 0 for j in range(k)) for i, v in enumerate(basis)]
        piv = _normalised(_reduce([_to_int_row(r) for r in aug], ncols + k))
        if len(piv) != k or any(c >= ncols for c, _ in piv):
            raise ValueError("basis vectors are linearly dependent")
        self._pivots = [c for c, _ in piv]
        self._reduced = [{j: v for j, v in r.items() if j < ncols} for _, r in piv]
        self._transform = [{j - ncols: v for j, v in r.items() if j >= ncols} for _, r in piv]

    def coords(self, v: Sequence) -> Vector | None:
        """Coordinates c with sum c_i basis_i == v, or None if v is outside the span."""
        w = list(v)
        cr = []
        for c, r in zip(self._pivots, self._reduced):
            a = w[c]
            cr.append(a)
            if a:
                for j, x in r.items():
                    w[j] -= a * x
        if any(x != 0 for x in w):
            return None
        out = [0] * self.size
        for a, t in zip(cr, self._transform):
            if a:
                for j, x in t.items():
                    out[j] += a * x
        return tuple(q(x) for x in out)


def sparse_kernel(rows: Sequence[dict], ncols: int) -> list[Vector]:
    """Right null space of a system given as sparse rows {column: coefficient}."""
    int_rows = []
    for r in rows:
        items = [(j, x) for j, x in r.items() if x != 0]
        if not items:
            continue
        den = 1
        for _, x in items:
            if x.denominator != 1:
                den = lcm(den, x.denominator)
        int_rows.append(_primitive({j: int(x * den) for j, x in items}))
    piv = _normalised(_reduce(int_rows, ncols))
    pivot_cols = {c for c, _ in piv}
    basis = []
    for f in range(ncols):
        if f in pivot_cols:
            continue
        v = [0] * ncols
        v[f] = 1
        for c, r in piv:
            x = r.get(f)
            if x:
                v[c] = -x
        basis.append(tuple(v))
    return basis
