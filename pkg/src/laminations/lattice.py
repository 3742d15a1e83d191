"""Lattices in K^m, Smith normal form over O = Q[[t]], and the coweight distance.

A lattice is the O-span of the columns of an invertible generator matrix.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import DivisionByZero, MinusInfinity, PrecisionExhausted
from .laurent import LaurentSeries, retry_with_precision
from .matrix import Matrix, det_of_columns
from .tropical import DominantCoweight

LS = LaurentSeries
LATTICE_KINDS = ("SL", "PGL", "GL")
SMITH_START_PRECISION = 16


@dataclass(frozen=True)
class Lattice:
    generators: Matrix
    kind: str = "SL"

    def __post_init__(self):
        if not isinstance(self.generators, Matrix):
            object.__setattr__(self, "generators", Matrix(self.generators))
        g = self.generators
        if g.nrows != g.ncols:
            raise ValueError("generator matrix must be square")
        if self.kind not in LATTICE_KINDS:
            raise ValueError(f"unknown lattice kind {self.kind!r}")
        d = g.det()
        if d.is_zero:
            raise DivisionByZero("generators are linearly dependent")
        if self.kind == "SL" and not d.agrees(1):
            raise ValueError(f"SL lattice generators have determinant {d}")

    @classmethod
    def standard(cls, m: int, kind: str = "SL") -> "Lattice":
        return cls(Matrix.identity(m), kind)

    @classmethod
    def from_columns(cls, cols, kind: str = "SL") -> "Lattice":
        return cls(Matrix.from_columns(cols), kind)

    @property
    def m(self) -> int:
        return self.generators.nrows

    def columns(self):
        return self.generators.columns()

    def scaled(self, exponents) -> "Lattice":
        """Lattice spanned by ``t**(-e_k) * column_k``."""
        g = self.generators.scale_columns([LS.monomial(1, -e) for e in exponents])
        kind = self.kind if (self.kind != "SL" or sum(exponents) == 0) else "GL"
        return Lattice(g, kind)

    def to_json(self) -> dict:
        from .io import encode_matrix
        return {"kind": self.kind, "generators": encode_matrix(self.generators)}


# -- Smith normal form ------------------------------------------------------

def _certified_min(entries):
    """Position and valuation of a minimum-valuation entry; raises if an unknown zero could be smaller."""
    best = None
    floor = None
    for pos, x in entries:
        if x.has_leading_term:
            if best is None or x.lo < best[1]:
                best = (pos, x.lo)
        elif not x.is_zero:
            floor = x.trunc if floor is None else min(floor, x.trunc)
    if best is None:
        if floor is not None:
            raise PrecisionExhausted("no certified pivot in the remaining block")
        return None
    if floor is not None and floor <= best[1]:
        raise PrecisionExhausted(f"pivot valuation {best[1]} not certified below O(t^{floor})")
    return best


def smith_dvr(mat: Matrix) -> tuple[list[int], Matrix, Matrix]:
    """``(exponents, left, right)`` with ``left @ diag(t**e) @ right == mat`` and left, right in GL_m(O).

    Exponents come out in increasing order.  Elimination pivots on an entry
    of minimal valuation, so every multiplier has valuation >= 0.
    """
    n = mat.nrows
    if mat.ncols != n:
        raise ValueError("Smith form is implemented for square matrices")
    a = [list(r) for r in mat.rows()]
    # a = rowop @ mat @ colop; we keep linv = rowop^-1 and rinv = colop^-1.
    linv = [list(r) for r in Matrix.identity(n).rows()]
    rinv = [list(r) for r in Matrix.identity(n).rows()]
    exps: list[int] = []
    for p in range(n):
        found = _certified_min(((i, j), a[i][j]) for i in range(p, n) for j in range(p, n))
        if found is None:
            raise DivisionByZero("singular matrix has no Smith form over a field of fractions")
        (pi, pj), v = found
        if pi != p:
            a[p], a[pi] = a[pi], a[p]
            for r in linv:
                r[p], r[pi] = r[pi], r[p]
        if pj != p:
            for r in a:
                r[p], r[pj] = r[pj], r[p]
            rinv[p], rinv[pj] = rinv[pj], rinv[p]
        piv = a[p][p]
        for i in range(p + 1, n):
            x = a[i][p]
            if x.is_zero:
                continue
            c = x / piv
            a[i] = [ai - c * ap for ai, ap in zip(a[i], a[p])]
            a[i][p] = LS.zero()
            for r in linv:
                r[p] = r[p] + c * r[i]
        for j in range(p + 1, n):
            x = a[p][j]
            if x.is_zero:
                continue
            c = x / piv
            # column p is already cleared below the pivot
            a[p][j] = LS.zero()
            rinv[p] = [rp + c * rj for rp, rj in zip(rinv[p], rinv[j])]
        # absorb the unit part of the pivot into the left factor
        unit = piv.shift(-v)
        for r in linv:
            r[p] = r[p] * unit
        exps.append(v)
    return exps, Matrix(linv), Matrix(rinv)


def determinantal_exponents(mat: Matrix) -> list[int]:
    """Invariant factors from minimal minor valuations: ``e_k = d_k - d_(k-1)``.

    Independent of :func:`smith_dvr`; used as a cross-check.
    """
    n = mat.nrows
    ds = [0]
    for k in range(1, n + 1):
        vals = [x.valuation() for x in mat.minors_of_size(k) if x.has_leading_term]
        if not vals:
            raise DivisionByZero("matrix is singular")
        ds.append(min(vals))
    return [ds[k] - ds[k - 1] for k in range(1, n + 1)]


def _relative(l1: Lattice, l2: Lattice) -> Matrix:
    if l1.m != l2.m:
        raise ValueError("lattices of different rank")
    return l1.generators.inverse() @ l2.generators


def relative_exponents(l1: Lattice, l2: Lattice) -> list[int]:
    """Smith exponents of ``G1^-1 G2``.

    Pivots are certified, so a short working precision is safe; it is
    doubled on demand.
    """
    rel = _relative(l1, l2)
    return retry_with_precision(lambda: smith_dvr(rel)[0], start=SMITH_START_PRECISION)


def distance(l1: Lattice, l2: Lattice) -> DominantCoweight:
    """Coweight distance from ``l1`` to ``l2``; ``distance(L, L.scaled(mu)) == mu`` for dominant mu."""
    exps = relative_exponents(l1, l2)
    entries = sorted((-e for e in exps), reverse=True)
    kind = "PGL" if "PGL" in (l1.kind, l2.kind) else ("SL" if sum(entries) == 0 else "GL")
    if kind == "PGL":
        last = entries[-1]
        entries = [e - last for e in entries]
    return DominantCoweight(tuple(entries), kind)


def lattice_equal(l1: Lattice, l2: Lattice) -> bool:
    exps = relative_exponents(l1, l2)
    if "PGL" in (l1.kind, l2.kind):
        return len(set(exps)) == 1
    return all(e == 0 for e in exps)


def f_trop_lattice(l1: Lattice, l2: Lattice, l3: Lattice, i: int, j: int, k: int) -> int:
    """Largest ``-val det`` over i generators of l1, j of l2 and k of l3."""
    m = l1.m
    if i + j + k != m or min(i, j, k) < 0:
        raise ValueError(f"bad index ({i},{j},{k}) for m={m}")
    c1, c2, c3 = l1.columns(), l2.columns(), l3.columns()
    best: int | None = None
    unknown_floor: int | None = None
    for s1 in combinations(c1, i):
        for s2 in combinations(c2, j):
            for s3 in combinations(c3, k):
                d = det_of_columns(list(s1) + list(s2) + list(s3))
                if d.has_leading_term:
                    if best is None or -d.lo > best:
                        best = -d.lo
                elif not d.is_zero:
                    b = -d.trunc
                    unknown_floor = b if unknown_floor is None else max(unknown_floor, b)
    if unknown_floor is not None and (best is None or unknown_floor >= best):
        raise PrecisionExhausted("a minor vanished to working precision")
    if best is None:
        raise MinusInfinity(f"all minors vanish for index ({i},{j},{k})")
    return best
