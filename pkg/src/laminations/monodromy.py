"""Annuli from glued polygons, monodromy, Newton polygons, loop lengths and c-lengths."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import IncompatibleGluing, NonIntegralSlopes
from .flags import AffineFlag, FlagConfig
from .laurent import LaurentSeries
from .matrix import Matrix
from .tropical import DominantCoweight

LS = LaurentSeries


@dataclass(frozen=True)
class AnnulusSpec:
    """Polygon whose edge ``identified_edges[0]`` is mapped by ``gluing`` onto ``identified_edges[1]``.

    Edges are ordered vertex pairs: ``gluing`` sends the flag at the first
    vertex of the source edge to the flag at the first vertex of the target.
    """

    polygon: FlagConfig
    identified_edges: tuple[tuple[int, int], tuple[int, int]]
    gluing: Matrix

    def __post_init__(self):
        check_gluing(self)


def _maps_flag(g: Matrix, src: AffineFlag, dst: AffineFlag) -> bool:
    u = dst.matrix.inverse() @ g @ src.matrix
    m = u.nrows
    return all(u[i, j].is_zero or (u[i, j].is_exact is False and not u[i, j].has_leading_term)
               for i in range(m) for j in range(i))


def check_gluing(spec: AnnulusSpec) -> None:
    (s1, s2), (d1, d2) = spec.identified_edges
    poly, g = spec.polygon, spec.gluing
    if g.det().is_zero:
        raise IncompatibleGluing("gluing matrix is singular")
    for s, d in ((s1, d1), (s2, d2)):
        if not _maps_flag(g, poly[s], poly[d]):
            raise IncompatibleGluing(f"gluing does not carry flag {s} to flag {d}")


def annulus_from_gluing(fx: AffineFlag, fy: AffineFlag, g: Matrix) -> AnnulusSpec:
    """The quadrilateral ``(Fx, Fy, gFy, gFx)`` with edge ``(0, 1)`` glued to ``(3, 2)`` by ``g``."""
    gx = AffineFlag(g @ fx.matrix, fx.unimodular and g.det().agrees(1))
    gy = AffineFlag(g @ fy.matrix, fy.unimodular and g.det().agrees(1))
    return AnnulusSpec(FlagConfig((fx, fy, gy, gx)), ((0, 1), (3, 2)), g)


@dataclass(frozen=True)
class MonodromyDatum:
    matrix: Matrix
    loop_label: str = "gamma"

    def inverse(self) -> "MonodromyDatum":
        return MonodromyDatum(self.matrix.inverse(), self.loop_label + "^-1")


def matrix_power(a: Matrix, k: int) -> Matrix:
    if k < 0:
        return matrix_power(a.inverse(), -k)
    out = Matrix.identity(a.nrows)
    base = a
    while k:
        if k & 1:
            out = out @ base
        base = base @ base
        k >>= 1
    return out


def monodromy(spec: AnnulusSpec, loop_power: int = 1, label: str = "gamma") -> MonodromyDatum:
    check_gluing(spec)
    return MonodromyDatum(matrix_power(spec.gluing, loop_power), label if loop_power == 1 else f"{label}^{loop_power}")


def char_poly(a: Matrix) -> list[LaurentSeries]:
    """Coefficients ``[c_0, ..., c_m]`` of ``det(x - A) = sum c_p x^p``."""
    m = a.nrows
    coeffs = [LS.zero()] * (m + 1)
    coeffs[m] = LS.one()
    for k in range(1, m + 1):
        e_k = LS.zero()
        for idx in combinations(range(m), k):
            e_k = e_k + a.minor(idx, idx)
        coeffs[m - k] = -e_k if k % 2 else e_k
    return coeffs


@dataclass(frozen=True)
class NewtonPolygon:
    """Lower convex hull of ``(p, val c_p)``; ``slopes`` lists root valuations with multiplicity."""

    vertices: tuple[tuple[int, int], ...]
    slopes: tuple[Fraction, ...]

    @classmethod
    def of(cls, coeffs: list[LaurentSeries]) -> "NewtonPolygon":
        pts = [(p, c.valuation()) for p, c in enumerate(coeffs) if not c.is_zero]
        hull: list[tuple[int, int]] = []
        for pt in pts:
            while len(hull) >= 2:
                (x1, y1), (x2, y2) = hull[-2], hull[-1]
                # drop hull[-1] if it lies on or above the segment hull[-2] -> pt
                if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                    hull.pop()
                else:
                    break
            hull.append(pt)
        roots: list[Fraction] = []
        for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
            slope = Fraction(y2 - y1, x2 - x1)
            roots.extend([-slope] * (x2 - x1))
        zero_roots = pts[0][0] if pts else 0
        if zero_roots:
            raise ValueError("polynomial has zero as a root")
        return cls(tuple(hull), tuple(sorted(roots)))


def eigenvalue_valuations(a: Matrix) -> list[Fraction]:
    return list(NewtonPolygon.of(char_poly(a)).slopes)


def loop_length(md: MonodromyDatum) -> DominantCoweight:
    """``d(gamma)``: minus the eigenvalue valuations, sorted decreasingly."""
    vals = eigenvalue_valuations(md.matrix)
    if any(v.denominator != 1 for v in vals):
        raise NonIntegralSlopes(f"eigenvalue valuations {vals} are not integral")
    entries = sorted((-int(v) for v in vals), reverse=True)
    kind = "SL" if sum(entries) == 0 else "GL"
    return DominantCoweight(tuple(entries), kind)


def c_lengths(md: MonodromyDatum) -> list[int]:
    """``-val`` of the coefficient of ``x^(m-k)`` in the characteristic polynomial, ``k = 1..m-1``."""
    coeffs = char_poly(md.matrix)
    m = md.matrix.nrows
    return [-coeffs[m - k].valuation() for k in range(1, m)]


def diagonal_gluing(coeffs, exponents) -> Matrix:
    """``diag(c_k t^(e_k))``."""
    return Matrix.diag([LS.monomial(c, e) for c, e in zip(coeffs, exponents)])
