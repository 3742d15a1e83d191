"""Good lifts, virtual configurations of lattices, tropical A-charts, equivalence and gluing."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .charts import Chart, a_index_set
from .errors import EdgeMismatch, SearchExhausted, Unsupported
from .flags import (AffineFlag, FlagConfig, a_chart, f_ijk, reconstruct_from_coords,
                    solve_flag, torus_act)
from .lattice import Lattice, f_trop_lattice
from .laurent import LaurentSeries
from .triangulation import Triangulation, fan_triangulation
from .tropical import Coweight, prefix

LS = LaurentSeries
MAX_SEARCH_STEP = 20


@dataclass(frozen=True)
class VirtualPoint:
    lattice: Lattice
    shift: Coweight

    def to_json(self) -> dict:
        return {"lattice": self.lattice.to_json(), "shift": self.shift.to_json()}


@dataclass(frozen=True)
class VirtualConfig:
    points: tuple[VirtualPoint, ...]
    provenance: FlagConfig | None = None
    lambdas: tuple[Coweight, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def m(self) -> int:
        return self.points[0].lattice.m

    def __getitem__(self, i: int) -> VirtualPoint:
        return self.points[i]

    def with_shift(self, vertex: int, nu: Coweight) -> "VirtualConfig":
        """Same lattices, shift at ``vertex`` moved by ``nu`` (provenance dropped)."""
        pts = list(self.points)
        p = pts[vertex]
        pts[vertex] = VirtualPoint(p.lattice, p.shift + nu.with_kind(p.shift.kind))
        return VirtualConfig(tuple(pts))

    def to_json(self) -> dict:
        return {"points": [p.to_json() for p in self.points]}


@dataclass
class AuditEntry:
    triangle: tuple[int, int, int]
    index: tuple[int, int, int]
    classical: int
    lattice: int

    @property
    def ok(self) -> bool:
        return self.classical == self.lattice


@dataclass
class GoodLift:
    """Result of :func:`good_lift` together with its audit certificate."""

    lambdas: tuple[Coweight, ...]
    lattices: tuple[Lattice, ...]
    gap: int
    triangulation: Triangulation
    certificate: list[AuditEntry] = field(default_factory=list)
    config: FlagConfig | None = None

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.certificate)

    def virtual(self) -> VirtualConfig:
        pts = tuple(VirtualPoint(L, -lam) for L, lam in zip(self.lattices, self.lambdas))
        return VirtualConfig(pts, self.config, self.lambdas)

    def to_json(self) -> dict:
        return {
            "gap": self.gap,
            "lambdas": [lam.to_json() for lam in self.lambdas],
            "triangulation": self.triangulation.to_json(),
            "certificate": [
                {"triangle": list(e.triangle), "index": list(e.index),
                 "classical": e.classical, "lattice": e.lattice}
                for e in self.certificate
            ],
        }


def uniform_lambda(m: int, gap: int) -> Coweight:
    """Strictly decreasing coweight summing to 0 whose consecutive gaps are ``gap`` or ``gap + 1``."""
    base = [gap * (m - 1 - k) for k in range(m)]
    q, r = divmod(sum(base), m)
    return Coweight(tuple(b - q - (1 if k >= m - r else 0) for k, b in enumerate(base)))


def lattices_for(config: FlagConfig, lambdas: Sequence[Coweight]) -> tuple[Lattice, ...]:
    out = []
    for f, lam in zip(config.flags, lambdas):
        g = torus_act(f, lam)
        kind = "SL" if (f.unimodular and sum(lam) == 0) else "GL"
        out.append(Lattice(g.matrix, kind))
    return tuple(out)


def audit_good_lift(config: FlagConfig, lambdas: Sequence[Coweight], tri: Triangulation,
                    lattices: Sequence[Lattice] | None = None, stop_early: bool = False) -> list[AuditEntry]:
    """Compare ``-val f_ijk(F.lambda)`` with the lattice value for every triangle and index."""
    if lattices is None:
        lattices = lattices_for(config, lambdas)
    acted = [torus_act(f, lam) for f, lam in zip(config.flags, lambdas)]
    out = []
    for (a, b, c) in tri.sorted_triangles():
        for ijk in a_index_set(config.m):
            lhs = -f_ijk(acted[a], acted[b], acted[c], *ijk).valuation()
            rhs = f_trop_lattice(lattices[a], lattices[b], lattices[c], *ijk)
            entry = AuditEntry((a, b, c), ijk, lhs, rhs)
            out.append(entry)
            if stop_early and not entry.ok:
                return out
    return out


def good_lift(config: FlagConfig, tri: Triangulation, max_step: int = MAX_SEARCH_STEP,
              lambdas: Sequence[Coweight] | None = None) -> GoodLift:
    """Search for a common lift ``lambda`` making every chart value realize its lattice maximum.

    Tries ``lambda = 0`` and then uniform gaps ``2**s`` for ``s = 0..max_step``.
    Passing ``lambdas`` skips the search and only audits.
    """
    m = config.m
    if lambdas is not None:
        lams = tuple(lambdas)
        cert = audit_good_lift(config, lams, tri)
        gap = min((a - b for lam in lams for a, b in zip(lam, lam.entries[1:])), default=0)
        return GoodLift(lams, lattices_for(config, lams), gap, tri, cert, config)
    candidates = [0] + [2 ** s for s in range(max_step + 1)]
    for gap in candidates:
        lam = uniform_lambda(m, gap) if gap else Coweight.zero(m)
        lams = (lam,) * config.n
        lattices = lattices_for(config, lams)
        cert = audit_good_lift(config, lams, tri, lattices, stop_early=True)
        if all(e.ok for e in cert):
            return GoodLift(lams, lattices, gap, tri, cert, config)
    raise SearchExhausted(f"no good lift with gap up to 2^{max_step}")


def recheck(lift: GoodLift, tri: Triangulation) -> list[AuditEntry]:
    """Re-audit a lift on another triangulation without changing ``lambda``."""
    if lift.config is None:
        raise ValueError("lift has no source configuration")
    return audit_good_lift(lift.config, lift.lambdas, tri, lift.lattices)


def raise_lift(lift: GoodLift, nus: Sequence[Coweight]) -> GoodLift:
    """The lift at ``lambda_i + nu_i``, audited on the original triangulation."""
    lams = tuple(lam + nu for lam, nu in zip(lift.lambdas, nus))
    return good_lift(lift.config, lift.triangulation, lambdas=lams)


# -- extended coordinates -----------------------------------------------------

def extended_coord(pa: VirtualPoint, pb: VirtualPoint, pc: VirtualPoint, i: int, j: int, k: int) -> int:
    base = f_trop_lattice(pa.lattice, pb.lattice, pc.lattice, i, j, k)
    return base + prefix(pa.shift, i) + prefix(pb.shift, j) + prefix(pc.shift, k)


def tropical_a_chart(vc: VirtualConfig, tri: Triangulation) -> Chart:
    if tri.n != vc.n:
        raise ValueError(f"triangulation of a {tri.n}-gon for {vc.n} points")
    chart = Chart(vc.m, kind="A")
    for (a, b, c) in tri.sorted_triangles():
        for (i, j, k) in a_index_set(vc.m):
            if k == 0:
                key, store = ((a, b), (i, j)), chart.edges
            elif j == 0:
                key, store = ((a, c), (i, k)), chart.edges
            elif i == 0:
                key, store = ((b, c), (j, k)), chart.edges
            else:
                key, store = ((a, b, c), (i, j, k)), chart.faces
            if key not in store:
                store[key] = extended_coord(vc[a], vc[b], vc[c], i, j, k)
    return chart


@dataclass
class Equivalence:
    equivalent: bool
    witness: tuple | None = None
    values: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.equivalent


def equivalent(vc1: VirtualConfig, vc2: VirtualConfig, tri: Triangulation) -> Equivalence:
    """Coordinate test: equal tropical A-charts on ``tri``; otherwise the first differing key."""
    if (vc1.m, vc1.n) != (vc2.m, vc2.n):
        raise ValueError("configurations of different shape")
    c1, c2 = tropical_a_chart(vc1, tri), tropical_a_chart(vc2, tri)
    key = c1.first_difference(c2)
    if key is None:
        return Equivalence(True)
    return Equivalence(False, key, (c1[key], c2[key]))


# -- realization and gluing -------------------------------------------------

def realize(chart: Chart, n: int) -> FlagConfig:
    """Positive configuration with fan chart ``t**(-a)`` for a tropical fan chart ``a`` (m <= 3)."""
    vals = chart.map(lambda a: LS.monomial(1, -a))
    return reconstruct_from_coords(chart.m, n, fan_triangulation(n), vals)


def provenance_of(vc: VirtualConfig) -> FlagConfig:
    """Source configuration, or a realization of the fan chart when none is recorded."""
    if vc.provenance is not None and vc.lambdas is not None:
        if all(p.shift == -lam for p, lam in zip(vc.points, vc.lambdas)):
            return vc.provenance
    if vc.m > 3:
        raise Unsupported("realization from lattices needs m <= 3")
    return realize(tropical_a_chart(vc, fan_triangulation(vc.n)), vc.n)


def twist_sign(m: int) -> int:
    return -1 if m % 2 == 0 else 1


def rotate(config: FlagConfig, k: int) -> FlagConfig:
    """Start the cyclic order at vertex ``k``; flags that wrap past the end pick up the sign (-1)^(m-1)."""
    n = config.n
    k %= n
    s = twist_sign(config.m)
    wrapped = [AffineFlag(f.matrix * s, f.unimodular) if s != 1 else f for f in config.flags[:k]]
    return FlagConfig(tuple(config.flags[k:]) + tuple(wrapped), config.orientation)


def _boundary_start(edge: tuple[int, int], n: int) -> int:
    a, b = edge
    if (a + 1) % n == b:
        return a
    if (b + 1) % n == a:
        return b
    raise ValueError(f"{edge} is not a boundary edge of the {n}-gon")


def edge_value(chart: Chart, a: int, b: int, i: int, j: int):
    """``f_{i,j}(a, b)`` read from a tropical chart regardless of vertex order."""
    return chart[((a, b), (i, j))] if a < b else chart[((b, a), (j, i))]


@dataclass
class Gluing:
    config: VirtualConfig
    flags: FlagConfig
    first: dict[int, int]
    second: dict[int, int]


def glue_a(vc1: VirtualConfig, edge1: tuple[int, int], vc2: VirtualConfig, edge2: tuple[int, int],
           tri: Triangulation | None = None) -> Gluing:
    """Glue two virtual configurations along boundary edges.

    With ``edge1 = {p, p+1}`` and ``edge2 = {q, q+1}`` the identification is
    ``p ~ q+1`` and ``p+1 ~ q``.  The glued polygon is labelled starting at
    ``p+1``: first the vertices of the first polygon, then ``q+2, ..., q-1``.
    ``first`` and ``second`` map old vertex labels to new ones.
    """
    m, n1, n2 = vc1.m, vc1.n, vc2.n
    if vc2.m != m:
        raise ValueError("configurations of different rank")
    p = _boundary_start(edge1, n1)
    q = _boundary_start(edge2, n2)
    t1 = tropical_a_chart(vc1, fan_triangulation(n1))
    t2 = tropical_a_chart(vc2, fan_triangulation(n2))
    for i in range(1, m):
        j = m - i
        v1 = edge_value(t1, (p + 1) % n1, p, i, j)
        v2 = edge_value(t2, q, (q + 1) % n2, i, j)
        if v1 != v2:
            raise EdgeMismatch(f"edge functions differ at index ({i},{j}): {v1} vs {v2}")
    f1 = rotate(provenance_of(vc1), p + 1)
    f2 = rotate(provenance_of(vc2), q)
    new = list(f1.flags)
    solved = [f1[0], f1[n1 - 1]]
    for c in range(2, n2):
        vals = {}
        for i in range(m):
            for j in range(m):
                l_ = m - i - j
                if 1 <= l_ <= m - 1:
                    vals[(i, j, l_)] = f_ijk(f2[0], f2[c - 1], f2[c], i, j, l_)
        solved.append(solve_flag((solved[0], solved[c - 1]), vals, m, f2[c].unimodular))
    new.extend(solved[2:])
    glued = FlagConfig(tuple(new))
    n = n1 + n2 - 2
    if tri is None:
        tri = fan_triangulation(n)
    lift = good_lift(glued, tri)
    first = {v: (v - p - 1) % n1 for v in range(n1)}
    second = {(q + c) % n2: (0 if c == 0 else n1 - 2 + c) for c in range(n2)}
    second[(q + 1) % n2] = n1 - 1
    return Gluing(lift.virtual(), glued, first, second)


def cut(vc: VirtualConfig, vertices: Sequence[int]) -> VirtualConfig:
    """Restriction to the sub-polygon on ``vertices`` (kept in the given cyclic order)."""
    pts = tuple(vc[v] for v in vertices)
    return VirtualConfig(pts)


def lift_family(config: FlagConfig, tri: Triangulation, extra: int = 1) -> tuple[GoodLift, GoodLift]:
    """Two members of one good-lift family: the found lift and one with ``extra`` times larger gap."""
    first = good_lift(config, tri)
    m = config.m
    bump = uniform_lambda(m, max(1, extra))
    second = raise_lift(first, [bump] * config.n)
    return first, second
