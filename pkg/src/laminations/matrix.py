"""Small dense matrices over the Laurent-series field.

Sizes here are tiny (m <= 4 in practice), so determinants use a
division-free subset expansion; exact inputs give exact outputs.
"""
from __future__ import annotations

from itertools import combinations
from typing import Callable, Iterable, Sequence

from .errors import DegenerateSystem, DivisionByZero
from .laurent import LaurentSeries

LS = LaurentSeries


def det_of_columns(cols: Sequence[Sequence[LaurentSeries]]) -> LaurentSeries:
    """Determinant of the square matrix whose columns are ``cols``."""
    n = len(cols)
    if n == 0:
        return LS.one()
    if any(len(c) != n for c in cols):
        raise ValueError("determinant needs a square matrix")
    # layer[S] = det(rows 0..|S|-1, columns S); S is a bitmask over columns.
    layer: dict[int, LaurentSeries] = {0: LS.one()}
    for r in range(n):
        nxt: dict[int, LaurentSeries] = {}
        for mask, d in layer.items():
            if d.is_zero:
                continue
            for c in range(n):
                bit = 1 << c
                if mask & bit:
                    continue
                entry = cols[c][r]
                if entry.is_zero:
                    continue
                # sign = (-1)^(# columns in mask to the right of c)
                above = bin(mask >> (c + 1)).count("1")
                term = entry * d
                if above & 1:
                    term = -term
                key = mask | bit
                nxt[key] = nxt[key] + term if key in nxt else term
        layer = nxt
    return layer.get((1 << n) - 1, LS.zero())


class Matrix:
    """Immutable matrix of :class:`LaurentSeries`, stored row-major."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable]):
        self._rows = tuple(tuple(LS.coerce(x) for x in row) for row in rows)
        if self._rows and len({len(r) for r in self._rows}) != 1:
            raise ValueError("ragged matrix")

    @classmethod
    def from_columns(cls, cols: Iterable[Iterable]) -> "Matrix":
        cols = [list(c) for c in cols]
        if not cols:
            return cls(())
        return cls(zip(*cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, entries: Sequence) -> "Matrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def t_power_diag(cls, exponents: Sequence[int]) -> "Matrix":
        return cls.diag([LS.monomial(1, e) for e in exponents])

    @property
    def nrows(self) -> int:
        return len(self._rows)

    @property
    def ncols(self) -> int:
        return len(self._rows[0]) if self._rows else 0

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> LaurentSeries:
        i, j = ij
        return self._rows[i][j]

    def rows(self) -> tuple[tuple[LaurentSeries, ...], ...]:
        return self._rows

    def row(self, i: int) -> tuple[LaurentSeries, ...]:
        return self._rows[i]

    def col(self, j: int) -> tuple[LaurentSeries, ...]:
        return tuple(r[j] for r in self._rows)

    def columns(self) -> list[tuple[LaurentSeries, ...]]:
        return [self.col(j) for j in range(self.ncols)]

    def transpose(self) -> "Matrix":
        return Matrix.from_columns(self._rows)

    def map(self, fn: Callable[[LaurentSeries], LaurentSeries]) -> "Matrix":
        return Matrix([[fn(x) for x in r] for r in self._rows])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        ocols = other.columns()
        out = []
        for r in self._rows:
            row = []
            for c in ocols:
                acc = LS.zero()
                for a, b in zip(r, c):
                    if not a.is_zero and not b.is_zero:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return Matrix(out)

    def __mul__(self, scalar) -> "Matrix":
        s = LS.coerce(scalar)
        return self.map(lambda x: x * s)

    __rmul__ = __mul__

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self._rows, other._rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self._rows, other._rows)])

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(x) for x in r) for r in self._rows)
        return f"Matrix([{body}])"

    def agrees(self, other: "Matrix") -> bool:
        """Entrywise agreement up to the truncation of each entry pair."""
        if self.shape != other.shape:
            return False
        return all(a.agrees(b) for r1, r2 in zip(self._rows, other._rows) for a, b in zip(r1, r2))

    def select_columns(self, idx: Sequence[int]) -> "Matrix":
        return Matrix.from_columns([self.col(j) for j in idx])

    def scale_columns(self, factors: Sequence) -> "Matrix":
        fs = [LS.coerce(f) for f in factors]
        return Matrix([[x * fs[j] for j, x in enumerate(r)] for r in self._rows])

    def minor(self, rows: Sequence[int], cols: Sequence[int]) -> LaurentSeries:
        return det_of_columns([[self._rows[i][j] for i in rows] for j in cols])

    def det(self) -> LaurentSeries:
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        return det_of_columns(self.columns())

    def adjugate(self) -> "Matrix":
        n = self.nrows
        if n == 1:
            return Matrix([[1]])
        idx = range(n)
        out = [[None] * n for _ in idx]
        for i in idx:
            for j in idx:
                rows = [r for r in idx if r != j]
                cols = [c for c in idx if c != i]
                m = self.minor(rows, cols)
                out[i][j] = -m if (i + j) & 1 else m
        return Matrix(out)

    def inverse(self) -> "Matrix":
        d = self.det()
        if d.is_zero:
            raise DivisionByZero("singular matrix")
        return self.adjugate().map(lambda x: x / d)

    def min_valuation(self) -> int | None:
        vals = [x.valuation() for r in self._rows for x in r if x.has_leading_term]
        return min(vals) if vals else None

    def minors_of_size(self, k: int) -> list[LaurentSeries]:
        return [self.minor(r, c) for r in combinations(range(self.nrows), k)
                for c in combinations(range(self.ncols), k)]


def solve(a: Matrix, b: Sequence) -> list[LaurentSeries]:
    """Solve ``a x = b`` for square ``a`` by Cramer's rule."""
    d = a.det()
    if d.is_zero:
        raise DegenerateSystem("singular linear system")
    cols = a.columns()
    bcol = tuple(LS.coerce(x) for x in b)
    out = []
    for j in range(len(cols)):
        cj = list(cols)
        cj[j] = bcol
        out.append(det_of_columns(cj) / d)
    return out
