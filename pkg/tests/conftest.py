import random
import time
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from liesym import catalog as cat
from liesym import liealg

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

# (group, family, params) for every catalog case the suite touches
CATALOG_CASES = [
    ("R3", "standard", ()),
    ("R3", "spd", (2, 1, 0, 3, 1, 2)),
    ("SU2", "g_lmn", (1, 1, 1)),
    ("SU2", "g_lmn", (3, 2, 1)),
    ("SU2", "g_lmn", (2, 1, 1)),
    ("SU2", "g_lmn", (3, 1, 1)),
    ("SU2", "g_lmn", (1, 1, Fraction(1, 2))),
    ("SU2", "g_lmn", (3, 2, Fraction(1, 2))),
    ("SL2R", "g_lmn", (1, 2, 1)),
    ("SL2R", "g_lmn", (1, 3, 1)),
    ("SL2R", "g_lmn", (Fraction(1, 2), 1, 1)),
    ("SL2R", "g_lmn", (2, 1, 1)),
    ("H1", "standard", ()),
    ("H1", "spd", (2, 1, 0, 3, 1, 5)),
    ("E2tilde", "g_mn", (Fraction(1, 2), 1)),
    ("E2tilde", "flat", (1, 1)),
    ("E2tilde", "flat", (3, Fraction(1, 2))),
    ("E11", "g_n", (1,)),
    ("E11", "g_n", (Fraction(1, 2),)),
    ("E11", "g_mn", (2, 1)),
    ("E11", "g_mn", (3, Fraction(1, 2))),
]


def case_id(case):
    group, family, params = case
    return f"{group}-{family}-" + "_".join(str(p).replace("/", "|") for p in params)


def build(case):
    group, family, params = case
    return cat.catalog(cat.CatalogEntry(group, family, params))


@pytest.fixture(params=CATALOG_CASES, ids=case_id)
def catalog_case(request):
    return request.param


@pytest.fixture
def rng():
    return random.Random(20240611)


def random_algebras(count, seed=7):
    rng = random.Random(seed)
    return [liealg.random_unimodular(rng) for _ in range(count)]


rationals = st.fractions(min_value=-3, max_value=3, max_denominator=4)
nonzero_rationals = rationals.filter(lambda x: x != 0)


@st.composite
def unimodular_algebras(draw):
    c = [draw(st.one_of(st.just(Fraction(0)), nonzero_rationals)) for _ in range(3)]
    seed = draw(st.integers(0, 2**32 - 1))
    return liealg.milnor_algebra(*c, g=liealg.random_spd(random.Random(seed)))


# -- acceptance summary ------------------------------------------------------

ACCEPTANCE_LINES = []
SUITE_BUDGET_S = 60.0
_started = {}


def pytest_sessionstart(session):
    _started["t"] = time.perf_counter()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        elapsed = time.perf_counter() - _started.get("t", time.perf_counter())
        verdict = "PASS" if elapsed < SUITE_BUDGET_S else "FAIL"
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
        terminalreporter.write_line(
            f"{verdict}  T2  full suite wall time {elapsed:.1f} s (< {SUITE_BUDGET_S:.0f} s)"
        )
