"""Charts on two triangulations of one configuration, with per-flip audits.

Charts are always re-evaluated from the underlying data; the exchange
relations are checked afterwards rather than used to compute.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .charts import Chart
from .flags import FlagConfig, a_chart
from .triangulation import Triangulation, flip, flip_path
from .virtual import VirtualConfig, tropical_a_chart


@dataclass
class FlipAudit:
    diagonal: tuple[int, int]
    quadrilateral: tuple[int, int, int, int]
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


@dataclass
class Transport:
    chart1: Chart
    chart2: Chart
    tropical1: Chart
    tropical2: Chart
    audits: list[FlipAudit]

    @property
    def ok(self) -> bool:
        return all(a.ok for a in self.audits)


def _pair(x: Chart, a: int, b: int):
    return x[((min(a, b), max(a, b)), (1, 1))]


def ptolemy_holds(chart: Chart, quad) -> bool:
    """``f_ac f_bd = f_ab f_cd + f_ad f_bc`` for sorted ``a < b < c < d`` (m = 2, exact)."""
    a, b, c, d = sorted(quad)
    lhs = _pair(chart, a, c) * _pair(chart, b, d)
    rhs = _pair(chart, a, b) * _pair(chart, c, d) + _pair(chart, a, d) * _pair(chart, b, c)
    return lhs.agrees(rhs)


def tropical_ptolemy_holds(chart: Chart, quad) -> bool:
    a, b, c, d = sorted(quad)
    lhs = _pair(chart, a, c) + _pair(chart, b, d)
    rhs = max(_pair(chart, a, b) + _pair(chart, c, d), _pair(chart, a, d) + _pair(chart, b, c))
    return lhs == rhs


def _merge(c1: Chart, c2: Chart) -> Chart:
    out = Chart(c1.m, dict(c1.edges), dict(c1.faces), c1.kind)
    out.edges.update(c2.edges)
    out.faces.update(c2.faces)
    return out


def transport_chart(source: FlagConfig | VirtualConfig, tri1: Triangulation, tri2: Triangulation) -> Transport:
    """Charts of ``source`` on ``tri1`` and ``tri2`` plus an audit of every flip in between."""
    virtual = isinstance(source, VirtualConfig)
    m = source.m

    def charts(tri):
        if virtual:
            trop = tropical_a_chart(source, tri)
            classical = None
            if source.provenance is not None and source.lambdas is not None:
                classical = a_chart(source.provenance, tri)
            return classical, trop
        classical = a_chart(source, tri)
        return classical, classical.tropicalize()

    cur = tri1
    c_cur, t_cur = charts(cur)
    first = (c_cur, t_cur)
    audits = []
    for diag in flip_path(tri1, tri2):
        quad = cur.quadrilateral(diag)
        nxt = flip(cur, diag)
        c_nxt, t_nxt = charts(nxt)
        audit = FlipAudit(tuple(diag), quad)
        if c_nxt is not None:
            audit.checks["positive"] = all(v.is_positive() for v in c_nxt.values())
            audit.checks["tropical_is_minus_val"] = t_nxt == c_nxt.tropicalize()
        if m == 2:
            t_both = _merge(t_cur, t_nxt)
            audit.checks["tropical_ptolemy"] = tropical_ptolemy_holds(t_both, quad)
            if c_nxt is not None:
                audit.checks["ptolemy"] = ptolemy_holds(_merge(c_cur, c_nxt), quad)
        audits.append(audit)
        cur, c_cur, t_cur = nxt, c_nxt, t_nxt
    c1, t1 = first
    return Transport(c1, c_cur, t1, t_cur, audits)
