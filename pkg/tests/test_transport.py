import random

from hypothesis import given, settings
from hypothesis import strategies as st

from laminations.flags import a_chart, generate_positive, random_coweight
from laminations.transport import ptolemy_holds, transport_chart, tropical_ptolemy_holds
from laminations.triangulation import all_triangulations, fan_triangulation
from laminations.virtual import good_lift

seeds = st.integers(0, 10 ** 6)


def quad_chart(config):
    tris = all_triangulations(4)
    chart = a_chart(config, tris[0])
    chart.edges.update(a_chart(config, tris[1]).edges)
    return chart


def test_ptolemy_on_moment_curve():
    chart = quad_chart(generate_positive(2, 4))
    assert chart[((0, 2), (1, 1))] * chart[((1, 3), (1, 1))] == 18
    assert ptolemy_holds(chart, (0, 1, 2, 3))


@settings(max_examples=30)
@given(seeds)
def test_tropical_ptolemy_on_twisted_quadrilaterals(seed):
    rng = random.Random(seed)
    config = generate_positive(2, 4, seed=seed, valuation_targets=[random_coweight(2, rng) for _ in range(4)])
    chart = quad_chart(config)
    assert ptolemy_holds(chart, (0, 1, 2, 3))
    assert tropical_ptolemy_holds(chart.tropicalize(), (0, 1, 2, 3))


def test_same_triangulation_gives_identical_charts():
    config = generate_positive(3, 5, seed=2)
    tri = all_triangulations(5)[3]
    tr = transport_chart(config, tri, tri)
    assert tr.chart1 == tr.chart2 and tr.audits == [] and tr.ok


@settings(max_examples=8)
@given(seeds, st.sampled_from([2, 3]))
def test_transport_audits_pass(seed, m):
    rng = random.Random(seed)
    config = generate_positive(m, 6, seed=seed, valuation_targets=[random_coweight(m, rng) for _ in range(6)])
    tris = all_triangulations(6)
    tr = transport_chart(config, rng.choice(tris), rng.choice(tris))
    assert tr.ok
    for audit in tr.audits:
        assert audit.checks["positive"] and audit.checks["tropical_is_minus_val"]
        if m == 2:
            assert audit.checks["ptolemy"] and audit.checks["tropical_ptolemy"]


def test_transport_of_virtual_configuration():
    rng = random.Random(3)
    config = generate_positive(2, 5, seed=3, valuation_targets=[random_coweight(2, rng) for _ in range(5)])
    tri1, tri2 = fan_triangulation(5), all_triangulations(5)[-1]
    vc = good_lift(config, tri1).virtual()
    tr = transport_chart(vc, tri1, tri2)
    assert tr.ok
    assert tr.tropical2 == a_chart(config, tri2).tropicalize()
