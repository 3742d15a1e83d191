"""Acceptance criteria 1-10, each at its full case count and exact tolerance.

Every test records a PASS/FAIL line shown in the terminal summary under
"acceptance criteria".
"""
import pytest

from laminations.verify import run_verify


def run(suite, seed=0):
    (report,) = run_verify(suite, seed=seed)
    return report


def split(report, check):
    return [f for f in report.failures if f.get("check") == check]


def test_semifield_homomorphism(criterion):
    rep = run("semifield")
    ok = rep.passed and rep.cases == 1000
    criterion(1, ok, f"{rep.cases} pairs, {len(rep.failures)} failures")
    assert ok, rep.failures[:3]


def test_distance_axioms(criterion):
    rep = run("distance")
    ok = rep.passed and rep.cases == 200
    criterion(2, ok, f"{rep.cases} triples, {len(rep.failures)} failures")
    assert ok, rep.failures[:3]


def test_edge_distance_identity(criterion):
    rep = run("edge_distance")
    ok = rep.passed and rep.cases == 200
    criterion(3, ok, f"{rep.cases} positive pairs, {len(rep.failures)} failures")
    assert ok, rep.failures[:3]


@pytest.fixture(scope="module")
def goodlift_report():
    return run("goodlift")


def test_good_lift(criterion, goodlift_report):
    rep = goodlift_report
    own = [f for f in rep.failures if "check" not in f]
    ok = not own and rep.cases == 50 and rep.notes["max_gap"] <= 64
    criterion(4, ok, f"{rep.cases} configurations, max gap {rep.notes['max_gap']}, {len(own)} failures")
    assert ok, own[:3]


def test_triangulation_independence(criterion, goodlift_report):
    bad = split(goodlift_report, "triangulation")
    ok = not bad and goodlift_report.cases == 50
    criterion(5, ok, f"{goodlift_report.cases} certificates re-audited, {len(bad)} failures")
    assert ok, bad[:3]


def test_tropical_ptolemy(criterion):
    rep = run("ptolemy")
    ok = rep.passed and rep.cases == 100
    criterion(6, ok, f"{rep.cases} quadrilaterals, {len(rep.failures)} failures")
    assert ok, rep.failures[:3]


def test_equivalence(criterion):
    rep = run("equivalence")
    ok = rep.passed and rep.cases == 50
    criterion(7, ok, f"{rep.cases} pairs, {len(rep.failures)} failures")
    assert ok, rep.failures[:3]


def test_x_invariance(criterion):
    rep = run("xinvariance")
    ok = rep.passed and rep.cases == 200
    criterion(8, ok, f"{rep.cases} cases, {len(rep.failures)} failures")
    assert ok, rep.failures[:3]


def test_monodromy_lengths(criterion):
    rep = run("monodromy")
    ok = rep.passed and rep.cases == 50
    criterion(9, ok, f"{rep.cases} gluings, {len(rep.failures)} failures")
    assert ok, rep.failures[:3]


def test_compactification(criterion):
    rep = run("compactify")
    ok = rep.passed and rep.cases == 20
    criterion(10, ok, f"{rep.cases} paths, {len(rep.failures)} failures")
    assert ok, rep.failures[:3]
