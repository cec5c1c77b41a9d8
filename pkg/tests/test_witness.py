import itertools

import numpy as np
import pytest

from conftest import perm
from fsind.engine import get_engine
from fsind.perm import Permutation, partition_rep, partitions, power_rows, symmetric_array
from fsind.witness import (Witness, WitnessError, _validated, even_m_witness, m3_witness,
                           parity_emptiness)


def single_cycle(k, n=None):
    return Permutation.from_cycles([list(range(1, k + 1))], n or k)


def two_cycles(a, b):
    return Permutation.from_cycles([list(range(1, a + 1)), list(range(a + 1, a + b + 1))], a + b)


@pytest.mark.parametrize("k", [3, 5, 7, 9, 11, 13, 15])
def test_odd_cycle_m3(k):
    w = m3_witness(single_cycle(k))
    assert w.kind == "m3-case1" and w.check()


@pytest.mark.parametrize("r", range(2, 13))
def test_transposition_times_even_cycle_m3(r):
    w = m3_witness(two_cycles(2, 2 * r - 2))
    assert w.kind == "m3-case2" and w.check()


@pytest.mark.parametrize("c", [4, 6, 8, 10, 12])
def test_four_cycle_times_even_cycle_m3(c):
    w = m3_witness(two_cycles(4, c))
    assert w.kind == "m3-case3" and w.check()


def test_uncovered_shapes_return_none():
    assert m3_witness(perm("(1,2)", 4)) is None          # odd
    assert m3_witness(perm("(1,2,3)(4,5,6)", 6)) is None  # two odd cycles


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
def test_m3_witnesses_agree_with_engine(n):
    eng = get_engine(n)
    for shape in partitions(n):
        u = partition_rep(shape, n)
        w = m3_witness(u)
        if w is not None:
            assert eng.count_scan(u, 3) > 0
            h = w.h
            assert (h ** 3).is_identity() and (u * h) ** 3 == h ** 3


@pytest.mark.parametrize("n", [9, 12, 16])
def test_even_m_witness_large_degree(n):
    for shape in partitions(n)[::7]:
        u = partition_rep(shape, n)
        for m in (2, 4, 6, 12):
            assert even_m_witness(u, m).check()


def test_even_m_rejects_odd_m():
    with pytest.raises(ValueError):
        even_m_witness(perm("(1,2,3)", 3), 3)


def test_failed_construction_is_reported():
    u = perm("(1,2,3)", 3)
    bad = Witness(u, 2, u, "even-m")  # u^2 is not the identity
    assert not bad.check()
    with pytest.raises(WitnessError):
        _validated(bad)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_parity_emptiness_predicate(n):
    eng = get_engine(n)
    for u in eng.ctx.class_reps:
        for m in eng.ctx.divisors:
            if parity_emptiness(u, m):
                assert eng.count_scan(u, m) == 0


def _g3_size_single_cycle(k):
    """|{h in S_k : (uh)^3 = h^3}| for u the k-cycle i -> i+1, streamed over two-point prefixes."""
    u = np.roll(np.arange(k), -1).astype(np.int8)
    tail = symmetric_array(k - 2)
    total = 0
    for a, b in itertools.permutations(range(k), 2):
        rest = np.array([x for x in range(k) if x not in (a, b)], dtype=np.int8)
        h = np.empty((len(tail), k), dtype=np.int8)
        h[:, 0], h[:, 1], h[:, 2:] = a, b, rest[tail]
        total += int((power_rows(u[h], 3) == power_rows(h, 3)).all(axis=1).sum())
    return total


@pytest.mark.parametrize("k", [3, 5, 7, 9, 11])
def test_m3_single_cycle_against_brute_force(k):
    size = _g3_size_single_cycle(k)
    assert size > 0
    if k <= 7:
        assert size == get_engine(k).count_scan(single_cycle(k), 3)
    w = m3_witness(single_cycle(k))
    assert w.check()
