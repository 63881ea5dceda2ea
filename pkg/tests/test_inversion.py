import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from semilattice_laplace import (
    BadArguments,
    FamilyMeasureQuery,
    GroundSet,
    NotInFamily,
    SetFamily,
    TransformTable,
    WeightFn,
    invert_measure,
    invert_point,
    laplace_forward,
    make_ground,
    mobius_fast,
    union_closure,
    zeta_fast,
)
from semilattice_laplace.oracle import (
    enumerate_union_closed_families,
    oracle_invert,
    oracle_mobius_dense,
)

from conftest import rational_vector, random_rational, weighted_families


def test_constant_one_recovers_point_mass_at_empty():
    g = make_ground(["1", "2"])
    ones = lambda X: 1  # noqa: E731
    assert invert_point(ones, g.empty) == 1
    assert invert_point(ones, g.subset(["1"])) == 0


def test_four_point_inversion(four_point):
    g = four_point.ground
    table = zeta_fast(four_point)
    # f(∅) - f({1}) - f({2}) + f({1,2}) = 1 - 3 - 4 + 10
    assert invert_point(table, g.full) == 4
    assert oracle_invert(table, g.full) == 4
    # -(f(∅) - f({1}))
    assert invert_point(table, g.subset(["1"])) == 2
    callable_f = lambda X: laplace_forward(four_point, X)  # noqa: E731
    assert invert_point(callable_f, g.subset(["1"])) == 2


def test_invert_measure_examples(four_point):
    g = four_point.ground
    table = zeta_fast(four_point)
    assert invert_measure(lambda X: 1, [g.empty]) == 1
    assert invert_measure(table, list(four_point.family)) == table(g.full)
    assert invert_measure(table, [g.subset(["1"]), g.subset(["2"])]) == 5
    assert invert_measure(table, FamilyMeasureQuery((g.subset(["1"]), g.subset(["2"])))) == 5


def test_invert_measure_strict_mode():
    g = make_ground(["1", "2"])
    fam = union_closure(g, [g.full])
    phi = WeightFn(fam, {g.empty: 2, g.full: 3})
    table = zeta_fast(phi)
    off = [g.subset(["1"])]
    assert invert_measure(table, off) == 0
    with pytest.raises(NotInFamily):
        invert_measure(table, off, family=fam, strict=True)
    with pytest.raises(BadArguments):
        invert_measure(table, off, strict=True)
    with pytest.raises(BadArguments):
        FamilyMeasureQuery((g.empty, g.empty))


def test_mobius_fast_examples():
    point = np.zeros(8, dtype=np.int64)
    point[0b101] = 1
    assert list(mobius_fast(zeta_fast(point))) == list(point)
    # invert_point on each of the four masks of the all-ones table
    ones = TransformTable(GroundSet.of_size(2), np.array([1, 1, 1, 1], dtype=object))
    assert list(mobius_fast(ones)) == [1, 0, 0, 0]
    assert [invert_point(ones, A) for A in ones.ground.all_subsets()] == [1, 0, 0, 0]


def test_mobius_fast_equals_pointwise_invert(rng):
    for n in range(1, 9):
        table = zeta_fast(rational_vector(rng, n))
        fast = mobius_fast(table)
        assert [invert_point(table, A) for A in table.ground.all_subsets()] == list(fast)


def test_round_trip_n12_exact(rng):
    v = rational_vector(rng, 12)
    assert list(mobius_fast(zeta_fast(v))) == list(v)
    assert list(zeta_fast(mobius_fast(v)).values) == list(v)


def test_mobius_against_naive_oracle(rng):
    v = rational_vector(rng, 8)
    assert list(mobius_fast(v)) == oracle_mobius_dense(list(v))


def test_exhaustive_round_trip_small_grounds(rng):
    for n in (1, 2, 3):
        for fam in enumerate_union_closed_families(GroundSet.of_size(n)):
            phi = WeightFn(fam, {A: random_rational(rng) for A in fam})
            table = zeta_fast(phi)
            for A in fam.ground.all_subsets():
                expected = phi[A] if A in fam else 0
                assert invert_point(table, A) == expected


def test_off_family_density_is_zero_on_all_four_element_families(rng):
    g = GroundSet.of_size(4)
    families = enumerate_union_closed_families(g)
    for idx in rng.choice(len(families), 150, replace=False):
        fam = families[int(idx)]
        phi = WeightFn(fam, {A: random_rational(rng) for A in fam})
        back = mobius_fast(zeta_fast(phi))
        assert all(back[m] == (phi[m] if m in fam.masks else 0) for m in range(16))


@given(weighted_families(), st.data())
def test_invert_measure_additive(phi, data):
    table = zeta_fast(phi)
    subsets = list(phi.ground.all_subsets())
    chosen = data.draw(st.lists(st.sampled_from(subsets), unique=True))
    cut = data.draw(st.integers(0, len(chosen)))
    left, right = chosen[:cut], chosen[cut:]
    assert invert_measure(table, chosen) == invert_measure(table, left) + invert_measure(table, right)
    members = [A for A in chosen if A in phi.family]
    assert invert_measure(table, chosen) == sum((phi[A] for A in members), 0)


def test_float_round_trip_tolerance(rng):
    eps = 2.0 ** -52
    for n in (4, 10, 16):
        phi = rng.uniform(0, 1, 1 << n)
        table = zeta_fast(phi)
        back = mobius_fast(table)
        bound = (1 << n) * eps * np.abs(table.values).max()
        assert np.abs(back - phi).max() <= bound


def test_power_set_family_round_trip_is_total():
    g = GroundSet.of_size(5)
    fam = SetFamily.power_set(g)
    phi = WeightFn(fam, {A: len(A) - 2 for A in fam})
    table = zeta_fast(phi)
    assert all(invert_point(table, A) == phi[A] for A in fam)
