from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from semilattice_laplace import (
    BadArguments,
    GroundSet,
    InvalidGround,
    NotInFamily,
    ScalarModeError,
    SetFamily,
    TooLarge,
    WeightFn,
    alternating_sum,
    laplace_forward,
    make_ground,
    union_closure,
    zeta_fast,
    zeta_sparse,
)
from semilattice_laplace.oracle import oracle_forward, oracle_zeta_dense

from conftest import random_family, random_weights, weighted_families


def test_point_mass_at_empty_set_gives_all_ones():
    g = GroundSet.of_size(3)
    fam = SetFamily.power_set(g)
    phi = WeightFn(fam, {A: int(A.mask == 0) for A in fam})
    assert [laplace_forward(phi, X) for X in g.all_subsets()] == [1] * 8


def test_point_mass_is_an_indicator():
    g = GroundSet.of_size(3)
    fam = SetFamily.power_set(g)
    A0 = g.from_mask(0b011)
    phi = WeightFn(fam, {A: int(A == A0) for A in fam})
    for X in g.all_subsets():
        assert laplace_forward(phi, X) == int(A0 <= X)


def test_four_point_example(four_point):
    g = four_point.ground
    # expected values from the frozenset oracle: 1, 1+2, 1+3, 1+2+3+4
    assert [oracle_forward(four_point, X) for X in g.all_subsets()] == [1, 3, 4, 10]
    assert laplace_forward(four_point, g.subset(["1"])) == 3
    assert laplace_forward(four_point, g.subset(["2"])) == 4
    assert laplace_forward(four_point, g.full) == 10
    assert zeta_sparse(four_point, [g.subset(["1"]), g.subset(["2"]), g.full]) == [3, 4, 10]
    assert list(zeta_fast(four_point).values) == [1, 3, 4, 10]


def test_non_member_query_uses_literal_sum():
    g = make_ground(["1", "2"])
    fam = union_closure(g, [g.full])
    phi = WeightFn(fam, {g.empty: 5, g.full: 7})
    assert laplace_forward(phi, g.subset(["1"])) == 5


def test_weight_fn_validation(four_point):
    fam = four_point.family
    g = fam.ground
    with pytest.raises(BadArguments):
        WeightFn(fam, {g.empty: 1})
    sparse = union_closure(g, [g.full])
    with pytest.raises(NotInFamily):
        WeightFn(sparse, {g.empty: 1, g.full: 1, g.subset(["1"]): 1})
    with pytest.raises(ScalarModeError):
        WeightFn(fam, {A: 0.5 for A in fam})
    with pytest.raises(ScalarModeError):
        WeightFn(fam, {A: float("nan") for A in fam}, "float")
    assert WeightFn(fam, {A: 1 for A in fam}, "float")[g.empty] == 1.0


def test_zeta_fast_zero_and_point_mass():
    assert list(zeta_fast(np.zeros(8)).values) == [0.0] * 8
    e = np.zeros(16, dtype=np.int64)
    e[0] = 1
    assert list(zeta_fast(e).values) == [1] * 16


def test_zeta_fast_random_integers_n10(rng):
    phi = rng.integers(-50, 50, 1 << 10)
    assert list(zeta_fast(phi).values) == oracle_zeta_dense(phi.tolist())


def test_zeta_fast_rejects_bad_input():
    with pytest.raises(BadArguments):
        zeta_fast([1, 2, 3])
    with pytest.raises(ScalarModeError):
        zeta_fast(np.array([1, 0.5], dtype=object))
    with pytest.raises(ScalarModeError):
        zeta_fast(np.array([1.0, np.inf]))
    with pytest.raises(BadArguments):
        zeta_fast([1, 2], ground=GroundSet.of_size(2))


def test_zeta_fast_size_ceiling():
    with pytest.raises(TooLarge):
        zeta_fast(np.zeros(1 << 25))
    phi = WeightFn(SetFamily.from_masks(GroundSet.of_size(25), [0]), {0: 1})
    with pytest.raises(TooLarge):
        zeta_fast(phi)


def test_zeta_fast_falls_back_to_big_ints():
    phi = np.empty(8, dtype=object)
    phi[:] = [2 ** 70, -(2 ** 69), Fraction(1, 3), 0, 0, 0, 0, 5]
    table = zeta_fast(phi)
    assert list(table.values) == oracle_zeta_dense(list(phi))


def test_table_is_callable(four_point):
    table = zeta_fast(four_point)
    g = four_point.ground
    assert table(g.subset(["2"])) == 4
    with pytest.raises(InvalidGround):
        table(GroundSet.of_size(2).full)


@pytest.mark.parametrize(("Y", "A", "expected"), [
    (["1", "2"], ["1", "2"], 1),
    ([], ["1"], 0),
    (["1"], ["1", "2", "3"], 0),
])
def test_alternating_sum_examples(Y, A, expected):
    g = make_ground(["1", "2", "3"])
    assert alternating_sum(g.subset(Y), g.subset(A)) == expected


def test_alternating_sum_requires_containment():
    g = make_ground(["1", "2"])
    with pytest.raises(BadArguments):
        alternating_sum(g.subset(["1"]), g.subset(["2"]))


@given(weighted_families(), st.data())
def test_forward_matches_oracle_and_is_linear(phi, data):
    fam = phi.family
    other = WeightFn(fam, {A: data.draw(st.integers(-20, 20)) for A in fam})
    both = phi + other
    for X in fam.ground.all_subsets():
        f = laplace_forward(phi, X)
        assert f == oracle_forward(phi, X)
        assert laplace_forward(both, X) == f + laplace_forward(other, X)
    assert laplace_forward(phi, fam.ground.full) == phi.total()


@given(weighted_families())
def test_zeta_fast_equals_pointwise_forward(phi):
    table = zeta_fast(phi)
    assert [table(X) for X in phi.ground.all_subsets()] == \
        [laplace_forward(phi, X) for X in phi.ground.all_subsets()]


def test_monotone_for_nonnegative_weights(rng):
    for _ in range(20):
        fam = random_family(rng, int(rng.integers(1, 7)))
        phi = random_weights(rng, fam, signed=False)
        assert phi.is_nonnegative()
        table = zeta_fast(phi)
        for x in range(len(table)):
            for i in range(fam.ground.size):
                assert table[x] <= table[x | (1 << i)]


def test_float_mode_within_tolerance(rng):
    for n in (4, 8, 12, 16):
        phi = rng.uniform(-1, 1, 1 << n)
        table = zeta_fast(phi)
        assert table.scalar_kind == "float"
        for x in rng.integers(0, 1 << n, 50):
            ref = sum(phi[a] for a in range(1 << n) if a & ~x == 0)
            assert abs(table[int(x)] - ref) <= 1e-9 * np.abs(phi).sum()


def test_alternating_sum_exhaustive_small():
    g = GroundSet.of_size(4)
    for a in range(16):
        for y in range(16):
            if y & ~a == 0:
                closed = (-1) ** bin(a).count("1") if y == a else 0
                assert alternating_sum(g.from_mask(y), g.from_mask(a)) == closed
