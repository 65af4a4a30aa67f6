"""Exact rational matrices and the linear algebra everything else reduces to.

Matrices are immutable and stored sparsely as ``{row: {col: value}}``; values
are ``int`` whenever they are integral and :class:`fractions.Fraction`
otherwise, so arithmetic never rounds.  A morphism ``f: X -> Y`` of vector
spaces is a ``dim Y x dim X`` matrix acting on column vectors, and the tensor
product is the Kronecker product with basis index ``(i, k) -> i*dim2 + k``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction]


class DimensionError(ValueError):
    """Raised when matrix shapes do not fit a requested operation."""


def as_rational(value) -> Scalar:
    """Coerce ``value`` (int, Fraction or ``"p/q"`` string) to an exact scalar."""
    if isinstance(value, bool):
        value = int(value)
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        value = Fraction(value.strip())
    elif isinstance(value, float):
        raise TypeError("floating point values are not exact; pass a Fraction or a 'p/q' string")
    else:
        value = Fraction(value)
    if value.denominator == 1:
        return int(value.numerator)
    return value


def _norm(value: Scalar) -> Scalar:
    if type(value) is Fraction and value.denominator == 1:
        return int(value.numerator)
    return value


def format_rational(value: Scalar) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


class RationalMatrix:
    """An exact ``rows x cols`` matrix over the rationals."""

    __slots__ = ("rows", "cols", "_data", "_hash")

    def __init__(self, rows: int, cols: int, data: Optional[Mapping[int, Mapping[int, Scalar]]] = None):
        if rows < 0 or cols < 0:
            raise DimensionError(f"negative shape {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        clean: dict[int, dict[int, Scalar]] = {}
        if data:
            for i, row in data.items():
                if not 0 <= i < rows:
                    raise DimensionError(f"row index {i} outside {rows}x{cols}")
                kept = {}
                for j, v in row.items():
                    if not 0 <= j < cols:
                        raise DimensionError(f"column index {j} outside {rows}x{cols}")
                    if v:
                        kept[j] = _norm(v)
                if kept:
                    clean[i] = kept
        self._data = clean
        self._hash = None

    # -- construction -------------------------------------------------------

    @classmethod
    def _raw(cls, rows: int, cols: int, data: dict) -> "RationalMatrix":
        # trusted constructor: data already normalized and zero-free
        m = object.__new__(cls)
        m.rows = rows
        m.cols = cols
        m._data = data
        m._hash = None
        return m

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: Optional[int] = None) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        n = len(rows)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        data = {}
        for i, r in enumerate(rows):
            if len(r) != cols:
                raise DimensionError(f"row {i} has length {len(r)}, expected {cols}")
            data[i] = {j: as_rational(v) for j, v in enumerate(r)}
        return cls(n, cols, data)

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: Sequence) -> "RationalMatrix":
        """Build from a flat row-major list of ``rows*cols`` values."""
        entries = list(entries)
        if len(entries) != rows * cols:
            raise DimensionError(f"{len(entries)} entries for a {rows}x{cols} matrix")
        data = {}
        for idx, v in enumerate(entries):
            v = as_rational(v)
            if v:
                data.setdefault(idx // cols, {})[idx % cols] = v
        return cls._raw(rows, cols, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls._raw(rows, cols, {})

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls._raw(n, n, {i: {i: 1} for i in range(n)})

    @classmethod
    def scalar(cls, value) -> "RationalMatrix":
        value = as_rational(value)
        return cls._raw(1, 1, {0: {0: value}} if value else {})

    @classmethod
    def from_function(cls, rows: int, table: Sequence[int]) -> "RationalMatrix":
        """The 0/1 matrix of a function ``range(len(table)) -> range(rows)``."""
        return cls._raw(rows, len(table), _columns_to_rows({j: {t: 1} for j, t in enumerate(table)}))

    @classmethod
    def column(cls, values: Sequence) -> "RationalMatrix":
        return cls.from_entries(len(values), 1, values)

    @classmethod
    def row(cls, values: Sequence) -> "RationalMatrix":
        return cls.from_entries(1, len(values), values)

    # -- inspection ---------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> tuple:
        """Row-major tuple of all ``rows*cols`` values."""
        out = []
        for i in range(self.rows):
            row = self._data.get(i, {})
            out.extend(row.get(j, 0) for j in range(self.cols))
        return tuple(out)

    def __getitem__(self, key: tuple[int, int]) -> Scalar:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(key)
        return self._data.get(i, {}).get(j, 0)

    def items(self) -> Iterable[tuple[int, int, Scalar]]:
        for i in sorted(self._data):
            row = self._data[i]
            for j in sorted(row):
                yield i, j, row[j]

    def row_dict(self, i: int) -> dict[int, Scalar]:
        return dict(self._data.get(i, {}))

    def nnz(self) -> int:
        return sum(len(r) for r in self._data.values())

    def is_zero(self) -> bool:
        return not self._data

    def to_lists(self) -> list[list[Scalar]]:
        return [[self[i, j] for j in range(self.cols)] for i in range(self.rows)]

    def first_difference(self, other: "RationalMatrix") -> Optional[tuple[int, int]]:
        """Index of the first differing entry, or None if equal."""
        if self.shape != other.shape:
            return (-1, -1)
        keys = set()
        for i in set(self._data) | set(other._data):
            a = self._data.get(i, {})
            b = other._data.get(i, {})
            for j in set(a) | set(b):
                if a.get(j, 0) != b.get(j, 0):
                    keys.add((i, j))
        return min(keys) if keys else None

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, tuple(self.items())))
        return self._hash

    def __repr__(self) -> str:
        if self.rows * self.cols <= 36:
            body = [[str(v) for v in r] for r in self.to_lists()]
            return f"RationalMatrix({body})"
        return f"RationalMatrix<{self.rows}x{self.cols}, nnz={self.nnz()}>"

    # -- arithmetic ---------------------------------------------------------

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot compose {self.rows}x{self.cols} after {other.rows}x{other.cols}")
        odata = other._data
        out = {}
        for i, row in self._data.items():
            acc: dict[int, Scalar] = {}
            for k, v in row.items():
                orow = odata.get(k)
                if orow is None:
                    continue
                for j, w in orow.items():
                    acc[j] = acc.get(j, 0) + v * w
            acc = {j: _norm(x) for j, x in acc.items() if x}
            if acc:
                out[i] = acc
        return RationalMatrix._raw(self.rows, other.cols, out)

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        out = {i: dict(r) for i, r in self._data.items()}
        for i, row in other._data.items():
            acc = out.setdefault(i, {})
            for j, v in row.items():
                x = acc.get(j, 0) + v
                if x:
                    acc[j] = _norm(x)
                else:
                    acc.pop(j, None)
            if not acc:
                del out[i]
        return RationalMatrix._raw(self.rows, self.cols, out)

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix._raw(self.rows, self.cols, {i: {j: -v for j, v in r.items()} for i, r in self._data.items()})

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        return self + (-other)

    def scale(self, c) -> "RationalMatrix":
        c = as_rational(c)
        if not c:
            return RationalMatrix.zeros(self.rows, self.cols)
        return RationalMatrix._raw(self.rows, self.cols, {i: {j: _norm(v * c) for j, v in r.items()} for i, r in self._data.items()})

    def transpose(self) -> "RationalMatrix":
        out: dict[int, dict[int, Scalar]] = {}
        for i, row in self._data.items():
            for j, v in row.items():
                out.setdefault(j, {})[i] = v
        return RationalMatrix._raw(self.cols, self.rows, out)

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "RationalMatrix":
        cpos = {c: n for n, c in enumerate(col_idx)}
        out = {}
        for n, i in enumerate(row_idx):
            row = self._data.get(i)
            if not row:
                continue
            kept = {cpos[j]: v for j, v in row.items() if j in cpos}
            if kept:
                out[n] = kept
        return RationalMatrix._raw(len(row_idx), len(col_idx), out)

    def hstack(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.rows != other.rows:
            raise DimensionError("hstack needs equal row counts")
        out = {i: dict(r) for i, r in self._data.items()}
        for i, row in other._data.items():
            acc = out.setdefault(i, {})
            for j, v in row.items():
                acc[j + self.cols] = v
        return RationalMatrix._raw(self.rows, self.cols + other.cols, out)


def _columns_to_rows(cols: Mapping[int, Mapping[int, Scalar]]) -> dict:
    out: dict[int, dict[int, Scalar]] = {}
    for j, col in cols.items():
        for i, v in col.items():
            if v:
                out.setdefault(i, {})[j] = v
    return out


def kron(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    """Kronecker product; entry ``[(i*b.rows+k), (j*b.cols+l)] = a[i,j]*b[k,l]``."""
    out = {}
    br, bc = b.rows, b.cols
    bdata = b._data
    for i, arow in a._data.items():
        for k, brow in bdata.items():
            row = {}
            for j, v in arow.items():
                base = j * bc
                for l, w in brow.items():
                    row[base + l] = _norm(v * w)
            out[i * br + k] = row
    return RationalMatrix._raw(a.rows * br, a.cols * bc, out)


def kron_all(mats: Sequence[RationalMatrix]) -> RationalMatrix:
    result = RationalMatrix.identity(1)
    for m in mats:
        result = kron(result, m)
    return result


# -- elimination ----------------------------------------------------------------


def _rref_rows(rows: list[dict[int, Scalar]], ncols: int, stop_col: Optional[int] = None):
    """Sparse Gauss-Jordan elimination.

    Returns ``(rows, pivots)`` where ``rows[r]`` is the reduced row whose pivot
    column is ``pivots[r]``; zero rows are dropped.  Pivot columns are searched
    left to right and only below ``stop_col`` when given, which is what makes
    the result the canonical reduced row echelon form.
    """
    rows = [dict(r) for r in rows if r]
    limit = ncols if stop_col is None else stop_col
    # column -> ids of rows that may hold a nonzero there
    pivots: list[int] = []
    pivot_rows: list[dict[int, Scalar]] = []
    col_index: dict[int, set[int]] = {}
    for r, row in enumerate(rows):
        for j in row:
            col_index.setdefault(j, set()).add(r)
    used = set()
    for col in range(limit):
        cands = [r for r in col_index.get(col, ()) if r not in used and rows[r].get(col)]
        if not cands:
            continue
        p = min(cands, key=lambda r: (len(rows[r]), r))
        used.add(p)
        prow = rows[p]
        inv = Fraction(1) / Fraction(prow[col])
        prow = {j: _norm(v * inv) for j, v in prow.items()}
        rows[p] = prow
        for r in list(col_index.get(col, ())):
            if r == p:
                continue
            row = rows[r]
            f = row.get(col)
            if not f:
                continue
            for j, v in prow.items():
                x = row.get(j, 0) - f * v
                if x:
                    row[j] = _norm(x)
                    col_index.setdefault(j, set()).add(r)
                else:
                    row.pop(j, None)
        pivots.append(col)
        pivot_rows.append(p)
    return [rows[p] for p in pivot_rows], pivots


def rref(f: RationalMatrix) -> tuple[RationalMatrix, list[int]]:
    """Reduced row echelon form and its pivot columns."""
    reduced, pivots = _rref_rows([f.row_dict(i) for i in range(f.rows)], f.cols)
    order = sorted(range(len(pivots)), key=lambda n: pivots[n])
    data = {n: reduced[k] for n, k in enumerate(order)}
    return RationalMatrix(f.rows, f.cols, data), sorted(pivots)


def rank(f: RationalMatrix) -> int:
    return len(_rref_rows([f.row_dict(i) for i in range(f.rows)], f.cols)[1])


def kernel_basis(f: RationalMatrix) -> RationalMatrix:
    """Canonical kernel basis as the columns of a ``cols x nullity`` matrix.

    One column per free variable (in increasing order): that variable is 1,
    the other free variables are 0, pivot variables are solved from the RREF.
    """
    reduced, pivots = _rref_rows([f.row_dict(i) for i in range(f.rows)], f.cols)
    pivot_set = set(pivots)
    free = [j for j in range(f.cols) if j not in pivot_set]
    cols = {}
    for n, fj in enumerate(free):
        col = {fj: 1}
        for row, pc in zip(reduced, pivots):
            v = row.get(fj)
            if v:
                col[pc] = -v
        cols[n] = col
    return RationalMatrix._raw(f.cols, len(free), _columns_to_rows(cols))


def solve_linear(a: RationalMatrix, b: RationalMatrix) -> Optional[RationalMatrix]:
    """Some ``x`` with ``a @ x == b`` (free variables set to zero), or None."""
    if a.rows != b.rows:
        raise DimensionError(f"solve_linear: a has {a.rows} rows, b has {b.rows}")
    aug = a.hstack(b)
    reduced, pivots = _rref_rows([aug.row_dict(i) for i in range(aug.rows)], aug.cols)
    out_rows: dict[int, dict[int, Scalar]] = {}
    for row, pc in zip(reduced, pivots):
        if pc >= a.cols:
            return None
        rhs = {j - a.cols: v for j, v in row.items() if j >= a.cols}
        if rhs:
            out_rows[pc] = rhs
    # a pivot may only appear in b's block if the system is inconsistent, and
    # elimination above never pivots there before exhausting a's columns
    return RationalMatrix._raw(a.cols, b.cols, out_rows)


def try_inverse(f: RationalMatrix) -> Optional[RationalMatrix]:
    """Two-sided inverse, or None for singular or non-square input."""
    if f.rows != f.cols:
        return None
    n = f.rows
    aug = f.hstack(RationalMatrix.identity(n))
    reduced, pivots = _rref_rows([aug.row_dict(i) for i in range(n)], 2 * n, stop_col=n)
    if len(pivots) != n:
        return None
    out = {}
    for row, pc in zip(reduced, pivots):
        inv_row = {j - n: v for j, v in row.items() if j >= n}
        if inv_row:
            out[pc] = inv_row
    return RationalMatrix._raw(n, n, out)


def is_injective(f: RationalMatrix) -> bool:
    return rank(f) == f.cols
