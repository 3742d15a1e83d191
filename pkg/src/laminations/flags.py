"""Affine flags over K, the canonical coordinates f_ijk, and positive configurations.

A flag is stored through one lift: an m x m matrix whose first k columns
span (with volume form) the k-th subspace.  Two lifts of the same flag
differ by right multiplication with an upper unitriangular matrix (each
column changes by earlier columns only).

Chart values on a triangle are always evaluated with the triangle's
vertices in increasing label order.  For odd m a cyclic rotation of the
three flags does not change any f_ijk; for even m it can flip signs, and
only valuation-level statements are made there.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Mapping, Sequence

from .charts import Chart, a_index_set
from .errors import (DegenerateConfiguration, DegenerateSystem, Unsupported)
from .laurent import LaurentSeries, PositiveWitness
from .matrix import Matrix, det_of_columns
from .triangulation import Triangulation, fan_triangulation
from .tropical import Coweight, prefix

LS = LaurentSeries


@dataclass(frozen=True)
class AffineFlag:
    matrix: Matrix
    unimodular: bool = True

    def __post_init__(self):
        if not isinstance(self.matrix, Matrix):
            object.__setattr__(self, "matrix", Matrix(self.matrix))
        m = self.matrix
        if m.nrows != m.ncols:
            raise ValueError("flag lift must be square")
        d = m.det()
        if d.is_zero:
            raise DegenerateConfiguration("flag lift has linearly dependent columns")
        if self.unimodular and not d.agrees(1):
            raise ValueError(f"unimodular flag has determinant {d}")

    @classmethod
    def from_columns(cls, cols, unimodular: bool = True) -> "AffineFlag":
        return cls(Matrix.from_columns(cols), unimodular)

    @property
    def m(self) -> int:
        return self.matrix.nrows

    def columns(self) -> list[tuple[LaurentSeries, ...]]:
        return self.matrix.columns()

    def col(self, k: int) -> tuple[LaurentSeries, ...]:
        return self.matrix.col(k)


@dataclass(frozen=True)
class FlagConfig:
    """Cyclically ordered flags.  ``orientation`` records the sign convention (+1: increasing labels)."""

    flags: tuple[AffineFlag, ...]
    orientation: int = 1

    def __post_init__(self):
        flags = tuple(self.flags)
        object.__setattr__(self, "flags", flags)
        if not flags:
            raise ValueError("empty configuration")
        if len({f.m for f in flags}) != 1:
            raise ValueError("flags of different rank")

    @property
    def m(self) -> int:
        return self.flags[0].m

    @property
    def n(self) -> int:
        return len(self.flags)

    def __getitem__(self, i: int) -> AffineFlag:
        return self.flags[i]

    def __len__(self) -> int:
        return len(self.flags)

    @property
    def unimodular(self) -> bool:
        return all(f.unimodular for f in self.flags)

    def replace(self, i: int, flag: AffineFlag) -> "FlagConfig":
        fl = list(self.flags)
        fl[i] = flag
        return FlagConfig(tuple(fl), self.orientation)


def f_ijk(fp: AffineFlag, fq: AffineFlag, fr: AffineFlag, i: int, j: int, k: int) -> LaurentSeries:
    """``det(first i columns of fp, first j of fq, first k of fr)``."""
    m = fp.m
    if i + j + k != m or min(i, j, k) < 0 or max(i, j, k) > m - 1:
        raise ValueError(f"bad index ({i},{j},{k}) for m={m}")
    cols = fp.columns()[:i] + fq.columns()[:j] + fr.columns()[:k]
    return det_of_columns(cols)


def triangle_values(fa: AffineFlag, fb: AffineFlag, fc: AffineFlag) -> dict[tuple[int, int, int], LaurentSeries]:
    return {ijk: f_ijk(fa, fb, fc, *ijk) for ijk in a_index_set(fa.m)}


def a_chart(config: FlagConfig, tri: Triangulation) -> Chart:
    """All edge and face functions of ``tri`` evaluated on ``config``."""
    if tri.n != config.n:
        raise ValueError(f"triangulation of a {tri.n}-gon for {config.n} flags")
    m = config.m
    chart = Chart(m, kind="A")
    for (a, b, c) in tri.sorted_triangles():
        vals = triangle_values(config[a], config[b], config[c])
        for (i, j, k), v in vals.items():
            if v.is_zero:
                raise DegenerateConfiguration(f"f_{i}{j}{k} vanishes on triangle {(a, b, c)}")
            if k == 0:
                chart.edges[((a, b), (i, j))] = v
            elif j == 0:
                chart.edges[((a, c), (i, k))] = v
            elif i == 0:
                chart.edges[((b, c), (j, k))] = v
            else:
                chart.faces[((a, b, c), (i, j, k))] = v
    return chart


def is_positive_chart(chart: Chart) -> bool:
    return all(v.is_positive() for v in chart.values())


def _as_exponents(lam, m: int) -> list[int]:
    entries = list(lam.entries) if isinstance(lam, Coweight) else [int(x) for x in lam]
    if len(entries) != m:
        raise ValueError(f"coweight of length {len(entries)} for rank {m}")
    return entries


def torus_act(flag: AffineFlag, lam) -> AffineFlag:
    """Multiply column k by ``t**(-lam_k)``."""
    ex = _as_exponents(lam, flag.m)
    mat = flag.matrix.scale_columns([LS.monomial(1, -e) for e in ex])
    return AffineFlag(mat, flag.unimodular and sum(ex) == 0)


def act_config(config: FlagConfig, lambdas: Sequence) -> FlagConfig:
    return FlagConfig(tuple(torus_act(f, lam) for f, lam in zip(config.flags, lambdas)), config.orientation)


def torus_scaling_exponent(lams: Sequence, ijk: tuple[int, int, int]) -> int:
    """Exponent e with ``f_ijk(F.lam) = f_ijk(F) * t**e``."""
    return -sum(prefix(lam if isinstance(lam, Coweight) else Coweight(tuple(lam), "GL"), n)
                for lam, n in zip(lams, ijk))


def relift(flag: AffineFlag, u: Matrix) -> AffineFlag:
    """Another lift of the same flag: ``flag.matrix @ u`` with ``u`` upper unitriangular."""
    m = flag.m
    for i in range(m):
        for j in range(m):
            x = u[i, j]
            if (i == j and not x.agrees(1)) or (i > j and not x.is_zero):
                raise ValueError("re-lift matrix must be upper unitriangular")
    return AffineFlag(flag.matrix @ u, flag.unimodular)


def random_unipotent(m: int, rng: random.Random, spread: int = 3) -> Matrix:
    """Upper unitriangular matrix with random monomial entries ``c t^a``, ``|a| <= spread``."""
    rows = []
    for i in range(m):
        row = []
        for j in range(m):
            if i == j:
                row.append(1)
            elif i < j:
                c = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
                row.append(LS.monomial(c, rng.randint(-spread, spread)))
            else:
                row.append(0)
        rows.append(row)
    return Matrix(rows)


# -- explicit positive configurations -------------------------------------

def moment_flag(x, m: int) -> AffineFlag:
    """Osculating flag of the moment curve ``(1, x, x^2, ...)`` at ``x``.

    Column k is the k-th divided derivative, so the lift is lower
    unitriangular and confluent-Vandermonde minors are positive for
    increasing nodes.
    """
    x = LS.coerce(x)
    cols = []
    for k in range(m):
        cols.append([LS.constant(comb(r, k)) * x ** (r - k) if r >= k else LS.zero() for r in range(m)])
    return AffineFlag.from_columns(cols)


def canonical_nodes(n: int) -> list[Fraction]:
    return [Fraction(2 ** i - 1) for i in range(n)]


def random_nodes(n: int, rng: random.Random) -> list[Fraction]:
    xs = [Fraction(0)]
    for _ in range(n - 1):
        xs.append(xs[-1] + Fraction(rng.randint(1, 9), rng.randint(1, 4)))
    return xs


def vandermonde_config(nodes: Sequence, m: int) -> FlagConfig:
    return FlagConfig(tuple(moment_flag(x, m) for x in nodes))


def random_coweight(m: int, rng: random.Random, bound: int = 5, kind: str = "SL") -> Coweight:
    """Uniform-ish coweight with entries in ``[-bound, bound]``."""
    while True:
        head = [rng.randint(-bound, bound) for _ in range(m - 1)]
        last = -sum(head) if kind == "SL" else rng.randint(-bound, bound)
        if -bound <= last <= bound:
            return Coweight(tuple(head + [last]), kind)


# -- reconstruction from fan coordinates -----------------------------------

def _unwrap(v) -> LaurentSeries:
    if isinstance(v, PositiveWitness):
        return v.series
    return LS.coerce(v)


def _unit(m: int, s: int) -> tuple[LaurentSeries, ...]:
    return tuple(LS.one() if r == s else LS.zero() for r in range(m))


def solve_flag(known: Sequence[AffineFlag], values: Mapping[tuple[int, int, int], LaurentSeries],
               m: int, unimodular: bool = True) -> AffineFlag:
    """Lift of the third flag W of a triangle (U, V, W) with prescribed f_ijk, k >= 1.

    Column l of W is found from the m - l + 1 linear conditions
    ``det(U_i, V_j, w_1..w_l) = f_{i,j,l}`` with w_l restricted to a
    coordinate subspace complementary to the earlier columns.
    """
    u_cols, v_cols = known[0].columns(), known[1].columns()
    w: list[tuple[LaurentSeries, ...]] = []
    for l in range(1, m):
        pairs = [(i, m - l - i) for i in range(m - l + 1)]
        coeff_rows = []
        rhs = []
        for i, j in pairs:
            base = u_cols[:i] + v_cols[:j] + w
            coeff_rows.append([det_of_columns(base + [_unit(m, s)]) for s in range(m)])
            rhs.append(_unwrap(values[(i, j, l)]))
        sol = None
        for support in combinations(range(m), len(pairs)):
            a = Matrix([[row[s] for s in support] for row in coeff_rows])
            d = a.det()
            if not d.has_leading_term:
                continue
            cols = a.columns()
            comps = []
            for q in range(len(support)):
                cq = list(cols)
                cq[q] = tuple(rhs)
                comps.append(det_of_columns(cq) / d)
            sol = [LS.zero()] * m
            for s, val in zip(support, comps):
                sol[s] = val
            break
        if sol is None:
            raise DegenerateSystem(f"no solvable gauge for column {l}")
        w.append(tuple(sol))
    cof = [det_of_columns(w + [_unit(m, s)]) for s in range(m)]
    s = next((s for s in range(m) if cof[s].has_leading_term), None)
    if s is None:
        raise DegenerateSystem("first m-1 columns are dependent")
    last = [LS.zero()] * m
    last[s] = LS.one() / cof[s] if unimodular else LS.one()
    w.append(tuple(last))
    return AffineFlag.from_columns(w, unimodular)


def _second_flag(edge_values: Mapping[int, LaurentSeries], m: int) -> AffineFlag:
    """Anti-diagonal lift F2 with ``f_{m-k,k}(I, F2) = edge_values[k]`` and det 1."""
    p_prev = LS.one()
    cols = []
    for k in range(1, m + 1):
        sign = -1 if (k * (k - 1) // 2) % 2 else 1
        p_k = LS.constant(sign) * (edge_values[k] if k < m else LS.one())
        c = p_k / p_prev
        p_prev = p_k
        col = [LS.zero()] * m
        col[m - k] = c
        cols.append(col)
    return AffineFlag.from_columns(cols)


def reconstruct_from_coords(m: int, n: int, tri: Triangulation, chart_values) -> FlagConfig:
    """Positive configuration whose fan chart at vertex 0 equals ``chart_values``.

    ``chart_values`` is a :class:`Chart` (or a mapping with chart keys) of
    positive series.  Flag 0 is the identity lift, flag 1 is fixed by the
    edge (0, 1) functions, and each later flag is solved from its fan
    triangle ``(0, k-1, k)``.
    """
    if m >= 4:
        raise Unsupported("reconstruction is implemented for m = 2, 3")
    if m < 2:
        raise ValueError("rank must be at least 2")
    if tri != fan_triangulation(n):
        raise Unsupported("reconstruction expects the fan triangulation at vertex 0")

    def get(key):
        if isinstance(chart_values, Chart):
            v = chart_values[key]
        else:
            v = chart_values[key]
        v = _unwrap(v)
        if not v.is_positive():
            raise ValueError(f"chart value at {key} is not positive")
        return v

    flags = [AffineFlag(Matrix.identity(m))]
    flags.append(_second_flag({k: get(((0, 1), (m - k, k))) for k in range(1, m)}, m))
    for c in range(2, n):
        b = c - 1
        vals = {}
        for i in range(m):
            for j in range(m):
                l = m - i - j
                if not 1 <= l <= m - 1:
                    continue
                if j == 0:
                    key = ((0, c), (i, l))
                elif i == 0:
                    key = ((b, c), (j, l))
                else:
                    key = ((0, b, c), (i, j, l))
                vals[(i, j, l)] = get(key)
        flags.append(solve_flag((flags[0], flags[b]), vals, m))
    return FlagConfig(tuple(flags))


def random_positive_chart(m: int, n: int, rng: random.Random, spread: int = 3) -> Chart:
    """Fan chart with independent monomial values ``c * t**(-a)``."""
    chart = Chart(m, kind="A")
    tri = fan_triangulation(n)
    for (a, b, c) in tri.sorted_triangles():
        for (i, j, k) in a_index_set(m):
            if k == 0:
                key, store = ((a, b), (i, j)), chart.edges
            elif j == 0:
                key, store = ((a, c), (i, k)), chart.edges
            elif i == 0:
                key, store = ((b, c), (j, k)), chart.edges
            else:
                key, store = ((a, b, c), (i, j, k)), chart.faces
            if key not in store:
                coef = Fraction(rng.randint(1, 9), rng.randint(1, 9))
                store[key] = LS.monomial(coef, -rng.randint(-spread, spread))
    return chart


def generate_positive(m: int, n: int, seed: int | None = 0, valuation_targets: Sequence | None = None,
                      recipe: str = "vandermonde", relift_spread: int | None = None) -> FlagConfig:
    """Deterministic positive configuration for tests and demos.

    ``recipe="vandermonde"``: osculating flags of the moment curve at
    increasing rational nodes (seed 0 gives nodes ``2**i - 1``).
    ``recipe="coords"``: reconstruction from random monomial fan values.
    ``valuation_targets`` (one coweight per vertex, or a dict vertex ->
    coweight) are applied with :func:`torus_act`; ``relift_spread`` adds a
    random unipotent re-lift per flag, which changes lifts but not flags.
    """
    rng = random.Random(seed)
    if recipe == "vandermonde":
        if m > 4:
            raise Unsupported("Vandermonde recipe supports m <= 4")
        nodes = canonical_nodes(n) if seed == 0 else random_nodes(n, rng)
        config = vandermonde_config(nodes, m)
    elif recipe == "coords":
        if m > 3:
            raise Unsupported("reconstruction recipe supports m <= 3")
        config = reconstruct_from_coords(m, n, fan_triangulation(n), random_positive_chart(m, n, rng))
    else:
        raise ValueError(f"unknown recipe {recipe!r}")
    if valuation_targets is not None:
        if isinstance(valuation_targets, Mapping):
            lams = [valuation_targets.get(i, Coweight.zero(m)) for i in range(n)]
        else:
            lams = list(valuation_targets)
        config = act_config(config, lams)
    if relift_spread is not None:
        config = FlagConfig(tuple(relift(f, random_unipotent(m, rng, relift_spread)) for f in config.flags))
    return config
