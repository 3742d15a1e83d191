from __future__ import annotations

import os
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from laminations.laurent import LaurentSeries

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("ci", max_examples=300, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

small_fracs = st.fractions(min_value=-20, max_value=20, max_denominator=12)
positive_fracs = st.fractions(min_value=Fraction(1, 12), max_value=20, max_denominator=12)


@st.composite
def polys(draw, positive=False, max_terms=4, span=5):
    """Exact Laurent polynomials as plain ``{exponent: coefficient}`` dicts plus the series."""
    lo = draw(st.integers(-span, span))
    lead = draw(positive_fracs if positive else small_fracs.filter(bool))
    rest = draw(st.lists(small_fracs, max_size=max_terms - 1))
    terms = {lo: lead}
    for k, c in enumerate(rest, start=1):
        if c:
            terms[lo + k] = c
    return terms, LaurentSeries.from_terms(terms)


def dict_mul(a: dict, b: dict) -> dict:
    """Schoolbook product of term dicts; the oracle for series multiplication."""
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def dict_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c}


# -- acceptance reporting -----------------------------------------------------

ACCEPTANCE = pytest.StashKey[dict]()


@pytest.fixture
def criterion(request):
    """Recorder for acceptance results, reported in the terminal summary."""
    def record(number: int, passed: bool, detail: str = "") -> None:
        request.config.stash.setdefault(ACCEPTANCE, {})[number] = (passed, detail)
    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(ACCEPTANCE, {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        passed, detail = results[number]
        line = f"criterion {number}: {'PASS' if passed else 'FAIL'}"
        terminalreporter.write_line(f"{line}  {detail}" if detail else line)
