"""Randomized property suites behind ``laminations verify``.

Each suite returns a :class:`SuiteReport`; failures carry a JSON-ready
payload describing the counterexample.  Cases are generated from a
seeded :class:`random.Random` so reports are reproducible.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .charts import face_index_set
from .compactify import deviation_at, random_path
from .flags import (FlagConfig, a_chart, generate_positive, random_coweight, torus_act)
from .lattice import Lattice, distance, f_trop_lattice
from .laurent import LaurentSeries
from .matrix import Matrix
from .monodromy import (MonodromyDatum, c_lengths, diagonal_gluing, eigenvalue_valuations,
                        loop_length)
from .transport import ptolemy_holds, tropical_ptolemy_holds
from .triangulation import all_triangulations, fan_triangulation, flip_graph
from .tropical import Coweight, neg_w0, pair_fundamental
from .virtual import equivalent, good_lift, lattices_for, lift_family, recheck, tropical_a_chart
from .xcoords import g_edge, g_face, g_trop_from_f_trop, tropical_x_chart

LS = LaurentSeries


@dataclass
class SuiteReport:
    suite: str
    cases: int = 0
    failures: list[dict] = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, **payload):
        self.failures.append(payload)

    def to_json(self) -> dict:
        return {"suite": self.suite, "passed": self.passed, "cases": self.cases,
                "failures": self.failures, **({"notes": self.notes} if self.notes else {})}


# -- generators ---------------------------------------------------------------

def random_positive_series(rng: random.Random, span: int = 4, terms: int = 3) -> LaurentSeries:
    lo = rng.randint(-span, span)
    coeffs = [Fraction(rng.randint(1, 9), rng.randint(1, 5))]
    coeffs += [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(rng.randint(0, terms - 1))]
    x = LS(coeffs, lo)
    if rng.random() < 0.3:
        x = x / LS([1, Fraction(rng.randint(1, 5))])
    return x


def random_sl_matrix(m: int, rng: random.Random, spread: int = 3) -> Matrix:
    """Lower unipotent x torus x upper unipotent, entries monomials ``c t^a``."""
    def unip(lower: bool) -> Matrix:
        rows = []
        for i in range(m):
            row = []
            for j in range(m):
                if i == j:
                    row.append(1)
                elif (i > j) == lower and rng.random() < 0.8:
                    row.append(LS.monomial(rng.randint(-4, 4) or 1, rng.randint(-spread, spread)))
                else:
                    row.append(0)
            rows.append(row)
        return Matrix(rows)
    mu = random_coweight(m, rng, spread)
    return unip(True) @ Matrix.t_power_diag(list(mu)) @ unip(False)


def random_lattice(m: int, rng: random.Random) -> Lattice:
    return Lattice(random_sl_matrix(m, rng))


def random_positive_config(rng: random.Random, m: int, n: int, bound: int = 5) -> FlagConfig:
    targets = [random_coweight(m, rng, bound) for _ in range(n)]
    recipe = rng.choice(["vandermonde", "coords"]) if m <= 3 else "vandermonde"
    return generate_positive(m, n, rng.randint(1, 10 ** 6), valuation_targets=targets, recipe=recipe)


def positive_lattice_pair(rng: random.Random, m: int) -> tuple[Lattice, Lattice]:
    config = random_positive_config(rng, m, 3)
    lams = [random_coweight(m, rng) for _ in range(2)]
    return lattices_for(FlagConfig(config.flags[:2]), lams)


# -- suites -----------------------------------------------------------------

def suite_semifield(rng: random.Random, cases: int = 1000) -> SuiteReport:
    rep = SuiteReport("semifield")
    for _ in range(cases):
        a, b = random_positive_series(rng), random_positive_series(rng)
        va, vb = -a.valuation(), -b.valuation()
        got = (-(a * b).valuation(), -(a / b).valuation(), -(a + b).valuation())
        want = (va + vb, va - vb, max(va, vb))
        rep.cases += 1
        if got != want or not all(x.is_positive() for x in (a * b, a / b, a + b)):
            rep.fail(a=str(a), b=str(b), got=list(got), expected=list(want))
    return rep


def suite_distance(rng: random.Random, cases: int = 200) -> SuiteReport:
    rep = SuiteReport("distance")
    for c in range(cases):
        m = 2 + c % 2
        l1, l2, l3 = (random_lattice(m, rng) for _ in range(3))
        d12, d21 = distance(l1, l2), distance(l2, l1)
        rep.cases += 1
        if not distance(l1, l1).is_zero():
            rep.fail(case=c, check="self-distance")
        if d21.entries != neg_w0(d12).entries:
            rep.fail(case=c, check="reversal", d12=list(d12), d21=list(d21))
        d13, d23 = distance(l1, l3), distance(l2, l3)
        for i in range(1, m):
            if pair_fundamental(d13, i) > pair_fundamental(d12, i) + pair_fundamental(d23, i):
                rep.fail(case=c, check="subadditivity", i=i, d12=list(d12), d23=list(d23), d13=list(d13))
    return rep


def suite_edge_distance(rng: random.Random, cases: int = 200) -> SuiteReport:
    rep = SuiteReport("edge_distance")
    for c in range(cases):
        m = 2 + c % 2
        l1, l2 = positive_lattice_pair(rng, m)
        d = distance(l1, l2)
        rep.cases += 1
        for j in range(1, m):
            got = f_trop_lattice(l1, l2, l1, m - j, j, 0)
            if got != pair_fundamental(d, j):
                rep.fail(case=c, index=[m - j, j], f_trop=got, distance=list(d))
    return rep


def suite_goodlift(rng: random.Random, cases: int = 50, max_gap: int = 64) -> SuiteReport:
    rep = SuiteReport("goodlift")
    gaps = []
    for c in range(cases):
        m = 2 + c % 2
        n = 3 + c % 3
        config = random_positive_config(rng, m, n)
        tri = rng.choice(all_triangulations(n))
        lift = good_lift(config, tri)
        gaps.append(lift.gap)
        rep.cases += 1
        if lift.gap > max_gap or not lift.ok:
            rep.fail(case=c, m=m, n=n, gap=lift.gap, certificate=lift.to_json()["certificate"])
        for other in all_triangulations(n):
            bad = [e for e in recheck(lift, other) if not e.ok]
            if bad:
                rep.fail(case=c, check="triangulation", triangulation=other.to_json(),
                         entry=[list(bad[0].triangle), list(bad[0].index)])
    rep.notes["max_gap"] = max(gaps, default=0)
    return rep


def suite_triangulation(rng: random.Random, cases: int = 0) -> SuiteReport:
    rep = SuiteReport("triangulation")
    catalan = {3: 1, 4: 2, 5: 5, 6: 14, 7: 42, 8: 132}
    for n, count in catalan.items():
        tris = all_triangulations(n)
        rep.cases += 1
        if len(tris) != count:
            rep.fail(n=n, count=len(tris), expected=count)
        if n <= 6:
            graph = flip_graph(n)
            seen = {tris[0]}
            todo = [tris[0]]
            while todo:
                for nb in graph[todo.pop()]:
                    if nb not in seen:
                        seen.add(nb)
                        todo.append(nb)
            if len(seen) != count:
                rep.fail(n=n, check="flip graph connected", reached=len(seen))
    return rep


def suite_ptolemy(rng: random.Random, cases: int = 100) -> SuiteReport:
    rep = SuiteReport("ptolemy")
    tri = fan_triangulation(4)
    other = all_triangulations(4)[1] if all_triangulations(4)[0] == tri else all_triangulations(4)[0]
    for c in range(cases):
        config = random_positive_config(rng, 2, 4)
        chart = a_chart(config, tri)
        chart.edges.update(a_chart(config, other).edges)
        rep.cases += 1
        if not ptolemy_holds(chart, (0, 1, 2, 3)):
            rep.fail(case=c, check="classical")
        if not tropical_ptolemy_holds(chart.tropicalize(), (0, 1, 2, 3)):
            rep.fail(case=c, check="tropical", chart=chart.tropicalize().labelled())
    return rep


def suite_equivalence(rng: random.Random, cases: int = 50) -> SuiteReport:
    rep = SuiteReport("equivalence")
    for c in range(cases):
        m = 2 + c % 2
        n = 3 + c % 3
        config = random_positive_config(rng, m, n)
        tri = rng.choice(all_triangulations(n))
        a, b = lift_family(config, tri, extra=rng.randint(1, 4))
        vc1, vc2 = a.virtual(), b.virtual()
        rep.cases += 1
        if not equivalent(vc1, vc2, tri):
            rep.fail(case=c, check="same family", gaps=[a.gap, b.gap])
        nu = Coweight.zero(m)
        while nu.is_zero():
            nu = random_coweight(m, rng, 3)
        vertex = rng.randrange(n)
        res = equivalent(vc1, vc2.with_shift(vertex, nu), tri)
        if res or res.witness is None:
            rep.fail(case=c, check="perturbed", vertex=vertex, nu=list(nu))
    return rep


def suite_xinvariance(rng: random.Random, cases: int = 100) -> SuiteReport:
    rep = SuiteReport("xinvariance")
    for c in range(cases):
        config = random_positive_config(rng, 3, 4)
        fl = list(config.flags)
        which = rng.randrange(4)
        moved = list(fl)
        moved[which] = torus_act(fl[which], random_coweight(3, rng))
        rep.cases += 1
        for ijk in face_index_set(3):
            if not g_face(*fl[:3], *ijk).agrees(g_face(*moved[:3], *ijk)):
                rep.fail(case=c, check="g_face", index=list(ijk))
        for ij in ((1, 2), (2, 1)):
            if not g_edge(*fl, *ij).agrees(g_edge(*moved, *ij)):
                rep.fail(case=c, check="g_edge", index=list(ij))
    for c in range(cases):
        m = 2 + c % 2
        n = rng.choice([4, 5])
        config = random_positive_config(rng, m, n)
        tri = rng.choice(all_triangulations(n))
        vc = good_lift(config, tri).virtual()
        got = g_trop_from_f_trop(tropical_a_chart(vc, tri), tri)
        want = tropical_x_chart(config, tri)
        rep.cases += 1
        key = got.first_difference(want)
        if key is not None:
            rep.fail(case=c, check="g_trop", key=str(key), got=got[key], expected=want[key])
    return rep


def suite_monodromy(rng: random.Random, cases: int = 50) -> SuiteReport:
    rep = SuiteReport("monodromy")
    for c in range(cases):
        a = rng.randint(-6, 6)
        c1 = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        md = MonodromyDatum(diagonal_gluing([c1, 1 / c1], [-a, a]))
        rep.cases += 1
        d = loop_length(md)
        if d.entries != (abs(a), -abs(a)):
            rep.fail(case=c, a=a, d=list(d))
        if a != 0 and c_lengths(md) != [abs(a)]:
            rep.fail(case=c, a=a, c_lengths=c_lengths(md))
        if loop_length(md.inverse()).entries != neg_w0(d).entries:
            rep.fail(case=c, check="inverse")
        if sum(eigenvalue_valuations(md.matrix)) != 0:
            rep.fail(case=c, check="slope sum")
    return rep


def suite_compactify(rng: random.Random, cases: int = 20) -> SuiteReport:
    rep = SuiteReport("compactify")
    for c in range(cases):
        path = random_path(rng)
        d30, d60 = deviation_at(path, 30), deviation_at(path, 60)
        rep.cases += 1
        if not (d30 < 0.05 and d60 < d30):
            rep.fail(case=c, path=[str(x) for x in path.coordinates], d30=d30, d60=d60)
    return rep


SUITES: dict[str, Callable[..., SuiteReport]] = {
    "semifield": suite_semifield,
    "distance": suite_distance,
    "edge_distance": suite_edge_distance,
    "goodlift": suite_goodlift,
    "triangulation": suite_triangulation,
    "ptolemy": suite_ptolemy,
    "equivalence": suite_equivalence,
    "xinvariance": suite_xinvariance,
    "monodromy": suite_monodromy,
    "compactify": suite_compactify,
}


def run_verify(suite: str, seed: int = 0, cases: int | None = None) -> list[SuiteReport]:
    """Run one suite (or ``"all"``); ``cases`` overrides each suite's default size."""
    names = list(SUITES) if suite == "all" else [suite]
    out = []
    for name in names:
        if name not in SUITES:
            raise KeyError(f"unknown suite {name!r}")
        rng = random.Random(f"{name}:{seed}")
        fn = SUITES[name]
        out.append(fn(rng) if cases is None else fn(rng, cases))
    return out
