import itertools
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from fsind.perm import (Permutation, Subgroup, centralizer, class_reps, compose, compose_rows,
                        conjugacy_classes_of, cycle_type, divisors, inverse_rows, parity,
                        partition_class_size, partitions, power, power_cycle_type, power_rows,
                        rank_rows, symmetric_array)


def perms(n):
    return st.permutations(list(range(1, n + 1))).map(Permutation)


def test_composition_applies_right_factor_first():
    p = Permutation.parse("(1,2)", 3)
    q = Permutation.parse("(1,3)", 3)
    # (pq)(1) = p(q(1)) = p(3) = 3
    assert (p * q)(1) == 3
    assert compose(p, q) == Permutation.parse("(1,3,2)", 3)


def test_parse_and_print_round_trip():
    for text in ["()", "(1,2)", "(1,2)(3,4)", "(1,4,6,5,3,2)"]:
        assert str(Permutation.parse(text, 6)) == text
    assert Permutation.parse("(1 2 3)", 3) == Permutation.parse("(1,2,3)", 3)


def test_parse_rejects_repeated_points():
    with pytest.raises(ValueError):
        Permutation.parse("(1,2,1)", 3)


def test_cycle_type_parity_order():
    p = Permutation.parse("(1,2,3)(4,5)", 6)
    assert cycle_type(p) == (3, 2, 1)
    assert parity(p) == -1
    assert p.order() == 6
    assert power(p, 6).is_identity()


@given(st.integers(3, 7).flatmap(lambda n: st.tuples(perms(n), perms(n), perms(n))))
def test_group_axioms(triple):
    p, q, r = triple
    assert (p * q) * r == p * (q * r)
    assert p * p.inverse() == Permutation.identity(p.degree)
    assert parity(p * q) == parity(p) * parity(q)


@given(st.integers(3, 7).flatmap(lambda n: st.tuples(perms(n), perms(n))))
def test_conjugation_preserves_cycle_type(pair):
    p, g = pair
    assert p.conjugate(g).cycle_type() == p.cycle_type()


@given(st.integers(3, 7).flatmap(perms), st.integers(0, 60))
def test_power_cycle_type_matches_direct_power(p, m):
    assert (p ** m).cycle_type() == power_cycle_type(p.cycle_type(), m)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_symmetric_array_is_lexicographic_and_ranked(n):
    a = symmetric_array(n)
    assert a.shape == (math.factorial(n), n)
    assert [tuple(r) for r in a] == list(itertools.permutations(range(n)))
    assert np.array_equal(rank_rows(a), np.arange(len(a)))


def test_row_kernels_match_scalar_operations():
    a = symmetric_array(5)
    rng = np.random.default_rng(0)
    idx = rng.integers(0, len(a), size=(50, 2))
    p, q = a[idx[:, 0]], a[idx[:, 1]]
    pq = compose_rows(p, q)
    for k in range(50):
        P, Q = Permutation.from_array(p[k]), Permutation.from_array(q[k])
        assert Permutation.from_array(pq[k]) == P * Q
        assert Permutation.from_array(power_rows(p[k:k + 1], 7)[0]) == P ** 7
        assert Permutation.from_array(inverse_rows(p[k:k + 1])[0]) == P.inverse()


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7, 8])
def test_class_representatives(n):
    ctx = class_reps(n)
    assert len(ctx.class_reps) == len(partitions(n))
    assert sum(ctx.class_sizes) == math.factorial(n)
    assert ctx.rep(1).is_identity()
    assert ctx.exponent == math.lcm(*range(1, n + 1))
    assert ctx.divisors == divisors(ctx.exponent)
    for u, shape, size in zip(ctx.class_reps, ctx.class_types, ctx.class_sizes):
        assert u.cycle_type() == shape
        assert partition_class_size(shape) == size


def test_s4_order_of_representatives():
    ctx = class_reps(4)
    assert [str(u) for u in ctx.class_reps] == ["()", "(1,2)", "(1,2)(3,4)", "(1,2,3)", "(1,2,3,4)"]


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
def test_centralizer_orders_and_commutation(n):
    ctx = class_reps(n)
    for u, size in zip(ctx.class_reps, ctx.class_sizes):
        c = centralizer(ctx, u)
        assert c.order * size == math.factorial(n)
        assert c.is_closed()
        for g in c.elements()[:: max(1, c.order // 25)]:
            assert g * u == u * g


def test_centralizer_classes_partition_group():
    c = centralizer(class_reps(6), Permutation.parse("(1,2)(3,4)", 6))
    classes = conjugacy_classes_of(c)
    assert sum(len(members) for _, members in classes) == c.order
    for rep, members in classes:
        assert rep == min(members)
        assert all(m.conjugate(g) in members for m in members[:3] for g in c.elements()[:5])


def test_non_closed_subgroup_rejected():
    bad = Subgroup.from_elements([Permutation.identity(3), Permutation.parse("(1,2,3)", 3)])
    assert not bad.is_closed()
    with pytest.raises(ValueError):
        conjugacy_classes_of(bad)


def test_generated_by_closure():
    g = Subgroup.generated_by([Permutation.parse("(1,2)", 5), Permutation.parse("(1,2,3,4,5)", 5)])
    assert g.order == 120
    assert not g.is_abelian()
    assert g.exponent == 60
