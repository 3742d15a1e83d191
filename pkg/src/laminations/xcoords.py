"""X-coordinates: face ratios g_ijk and edge cross-ratios g_ij, classical and tropical."""
from __future__ import annotations

from .charts import Chart, face_index_set, edge_index_set
from .errors import DegenerateConfiguration
from .flags import AffineFlag, FlagConfig, f_ijk
from .laurent import LaurentSeries
from .triangulation import Triangulation


def _face_terms(i: int, j: int, k: int):
    num = [(i - 1, j + 1, k), (i, j - 1, k + 1), (i + 1, j, k - 1)]
    den = [(i + 1, j - 1, k), (i, j + 1, k - 1), (i - 1, j, k + 1)]
    return num, den


def _edge_terms(i: int, j: int):
    # (triangle selector, index); selector 0 is (B1, B2, B3), 1 is (B3, B4, B1)
    num = [(0, (i - 1, 1, j)), (1, (j - 1, 1, i))]
    den = [(0, (i, 1, j - 1)), (1, (j, 1, i - 1))]
    return num, den


def _ratio(num, den) -> LaurentSeries:
    top = LaurentSeries.one()
    bottom = LaurentSeries.one()
    for x in num:
        top = top * x
    for x in den:
        if x.is_zero:
            raise DegenerateConfiguration("zero factor in the denominator")
        bottom = bottom * x
    return top / bottom


def g_face(b1: AffineFlag, b2: AffineFlag, b3: AffineFlag, i: int, j: int, k: int) -> LaurentSeries:
    m = b1.m
    if i + j + k != m or min(i, j, k) < 1:
        raise ValueError(f"bad face index ({i},{j},{k}) for m={m}")
    num, den = _face_terms(i, j, k)
    return _ratio([f_ijk(b1, b2, b3, *x) for x in num], [f_ijk(b1, b2, b3, *x) for x in den])


def g_edge(b1: AffineFlag, b2: AffineFlag, b3: AffineFlag, b4: AffineFlag, i: int, j: int) -> LaurentSeries:
    """Cross-ratio on the quadrilateral ``(B1, B2, B3, B4)`` with diagonal ``(B1, B3)``."""
    m = b1.m
    if i + j != m or min(i, j) < 1:
        raise ValueError(f"bad edge index ({i},{j}) for m={m}")
    tris = [(b1, b2, b3), (b3, b4, b1)]
    num, den = _edge_terms(i, j)
    return _ratio([f_ijk(*tris[s], *x) for s, x in num], [f_ijk(*tris[s], *x) for s, x in den])


def x_chart(config: FlagConfig, tri: Triangulation) -> Chart:
    m = config.m
    chart = Chart(m, kind="X")
    for (a, b, c) in tri.sorted_triangles():
        for ijk in face_index_set(m):
            chart.faces[((a, b, c), ijk)] = g_face(config[a], config[b], config[c], *ijk)
    for diag in sorted(tri.diagonals):
        a, b, c, d = tri.quadrilateral(diag)
        for ij in edge_index_set(m):
            chart.edges[((a, c), ij)] = g_edge(config[a], config[b], config[c], config[d], *ij)
    return chart


def tropical_x_chart(config: FlagConfig, tri: Triangulation) -> Chart:
    return x_chart(config, tri).tropicalize()


def trop_lookup(chart: Chart, verts, idx) -> int:
    """Tropical value of ``f_idx`` on ``verts`` in any vertex order (tropical values are sign-blind)."""
    pairs = sorted(zip(verts, idx))
    v = tuple(p[0] for p in pairs)
    ix = tuple(p[1] for p in pairs)
    return chart.value(v, ix)


def g_trop_from_f_trop(f_chart: Chart, tri: Triangulation) -> Chart:
    """Tropical X-chart as signed sums of (extended) tropical A-coordinates on ``tri``."""
    m = f_chart.m
    out = Chart(m, kind="X")
    for (a, b, c) in tri.sorted_triangles():
        for ijk in face_index_set(m):
            num, den = _face_terms(*ijk)
            out.faces[((a, b, c), ijk)] = (sum(trop_lookup(f_chart, (a, b, c), x) for x in num)
                                           - sum(trop_lookup(f_chart, (a, b, c), x) for x in den))
    for diag in sorted(tri.diagonals):
        a, b, c, d = tri.quadrilateral(diag)
        tris = [(a, b, c), (c, d, a)]
        for ij in edge_index_set(m):
            num, den = _edge_terms(*ij)
            out.edges[((a, c), ij)] = (sum(trop_lookup(f_chart, tris[s], x) for s, x in num)
                                       - sum(trop_lookup(f_chart, tris[s], x) for s, x in den))
    return out
