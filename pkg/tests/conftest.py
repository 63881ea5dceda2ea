from fractions import Fraction

import numpy as np
import pytest
from hypothesis import strategies as st

from semilattice_laplace import GroundSet, SetFamily, WeightFn, make_ground, union_closure
from semilattice_laplace.stone import PointMeasure


def random_family(rng, n, n_seeds=None):
    ground = GroundSet.of_size(n)
    if n_seeds is None:
        n_seeds = int(rng.integers(0, 5))
    seeds = [ground.from_mask(int(m)) for m in rng.integers(0, 1 << n, n_seeds)]
    return union_closure(ground, seeds)


def random_rational(rng, lo=-9, hi=9, max_den=6):
    return Fraction(int(rng.integers(lo, hi + 1)), int(rng.integers(1, max_den + 1)))


def random_weights(rng, family, signed=True):
    lo = -9 if signed else 0
    return WeightFn(family, {A: random_rational(rng, lo=lo) for A in family})


def random_measure(rng, family, kind="rational"):
    if kind == "float":
        return PointMeasure(family, {A: float(rng.uniform(0, 5)) for A in family}, "float")
    return PointMeasure(family, {A: random_rational(rng, lo=0) for A in family})


_FRACTION_POOL = np.empty((19, 6), dtype=object)
_FRACTION_POOL[:] = [[Fraction(p, q) for q in range(1, 7)] for p in range(-9, 10)]


def rational_vector(rng, n):
    """p/q with p in [-9, 9] and q in [1, 6], drawn from a shared pool of Fractions."""
    return _FRACTION_POOL[rng.integers(0, 19, 1 << n), rng.integers(0, 6, 1 << n)]


@st.composite
def families(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    ground = GroundSet.of_size(n)
    seeds = draw(st.lists(st.integers(0, (1 << n) - 1), max_size=5))
    return union_closure(ground, [ground.from_mask(m) for m in seeds])


@st.composite
def weighted_families(draw, max_n=6):
    family = draw(families(max_n))
    vals = draw(st.lists(st.fractions(max_denominator=12).filter(lambda q: abs(q) < 100),
                         min_size=len(family), max_size=len(family)))
    return WeightFn(family, dict(zip(family.members, vals)))


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


@pytest.fixture
def four_point():
    """Power set of {1,2} with weights 1, 2, 3, 4 on ∅, {1}, {2}, {1,2}."""
    g = make_ground(["1", "2"])
    fam = SetFamily.power_set(g)
    return WeightFn(fam, {g.subset([]): 1, g.subset(["1"]): 2, g.subset(["2"]): 3, g.full: 4})


_ACCEPTANCE = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "acceptance" in report.keywords:
        name = report.nodeid.rsplit("::", 1)[-1].removeprefix("test_")
        _ACCEPTANCE.append((name, report.outcome, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, seconds in _ACCEPTANCE:
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}  ({seconds:.2f}s)")
