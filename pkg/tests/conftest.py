from __future__ import annotations

from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from quiversing.diagrams import ADEType, all_types
from quiversing.gauss import GaussianRational

settings.register_profile(
    "default", deadline=None, max_examples=40, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

TYPES = all_types(8)
SMALL_TYPES = [t for t in TYPES if t.rank <= 6]

fractions = st.fractions(min_value=-3, max_value=3, max_denominator=4)
gaussians = st.builds(GaussianRational, fractions, fractions)
# a small pool makes orthogonality to roots likely, so slices are nonempty
pooled = st.sampled_from(
    [GaussianRational(x, y) for x, y in [(0, 0), (1, 0), (-1, 0), (2, 0), (Fraction(1, 2), 0), (0, 1), (1, 1)]]
)
ade_types = st.sampled_from(TYPES)
small_types = st.sampled_from(SMALL_TYPES)


def taus(t: ADEType, elements=pooled):
    return st.lists(elements, min_size=t.rank, max_size=t.rank).map(tuple)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
