import random
from collections import Counter
from fractions import Fraction

import numpy as np
import pytest

from conftest import perm
from fsind.engine import get_engine
from fsind.hopf import (Automorphism, DGElement, InducedCharacter, antipode, comultiply, counit,
                        gamma_automorphism, integral, lambda_power, lambda_power_closed, multiply, one,
                        random_element, s6_outer_automorphism, tensor_multiply)
from fsind.perm import Permutation, centralizer


@pytest.fixture(scope="module")
def s3():
    return centralizer(3, Permutation.identity(3))


def _clean(t):
    return {k: v for k, v in t.items() if v}


def _rng():
    return random.Random(11)


def test_associative_with_unit(s3):
    rng = _rng()
    for _ in range(10):
        a, b, c = (random_element(s3, rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert one(s3) * a == a == a * one(s3)


def test_coproduct_is_multiplicative(s3):
    rng = _rng()
    for _ in range(5):
        a, b = random_element(s3, rng, 2), random_element(s3, rng, 2)
        lhs = _clean(comultiply(a * b, s3))
        rhs = tensor_multiply(comultiply(a, s3), comultiply(b, s3))
        assert lhs == rhs


def test_counit_and_antipode(s3):
    rng = _rng()
    for _ in range(5):
        a, b = random_element(s3, rng), random_element(s3, rng)
        assert counit(a * b) == counit(a) * counit(b)
        # m (S (x) id) Delta = unit * counit
        acc = DGElement()
        for (left, right), c in comultiply(a, s3).items():
            acc = acc + (antipode(DGElement.basis(*left)) * DGElement.basis(*right)).scale(c)
        assert acc == one(s3).scale(counit(a))


def test_integral(s3):
    lam = integral(s3)
    assert counit(lam) == 1
    for g in s3.elements():
        for x in s3.elements():
            h = DGElement.basis(g, x)
            assert h * lam == lam.scale(counit(h))


def test_lambda_powers_agree_and_start_at_integral(s3):
    assert lambda_power(s3, 1) == integral(s3)
    for m in range(2, 7):
        lambda_power(s3, m)  # raises if the two constructions differ


def test_oracle_size_limit():
    with pytest.raises(ValueError):
        integral(centralizer(6, Permutation.identity(6)))


def _module(group, u, tab, j):
    """Explicit matrices for the induced module C[G] (x)_{C(u)} W with dim W = 1."""
    cu = tab.subgroup
    reps, hs = [], []
    for t in group.elements():
        h = t * u * t.inverse()
        if h not in hs:
            hs.append(h)
            reps.append(t)
    eta = lambda c: complex(tab.values[j][int(cu.classes.class_of[cu.index_of(c)])])  # noqa: E731

    def rho(g, x):
        mat = np.zeros((len(hs), len(hs)), dtype=complex)
        for k, t in enumerate(reps):
            l = hs.index(x * hs[k] * x.inverse())
            c = reps[l].inverse() * x * t
            if hs[l] == g:
                mat[l, k] = eta(c)
        return mat

    return rho


def test_trace_formula_matches_explicit_module(s3):
    for utext in ["(1,2)", "(1,2,3)"]:
        u = perm(utext, 3)
        tab = get_engine(3).table(u)
        for j in range(len(tab)):
            rho = _module(s3, u, tab, j)
            ind = InducedCharacter(s3, u, tab, j)
            els = s3.elements()
            for g in els:
                for x in els:
                    assert np.isclose(np.trace(rho(g, x)), complex(ind(g, x)))
            # rho is an algebra map on basis elements
            for (g, x) in [(els[1], els[3]), (els[2], els[5])]:
                for (h, y) in [(els[4], els[1]), (els[3], els[3])]:
                    prod = multiply(DGElement.basis(g, x), DGElement.basis(h, y))
                    want = sum((rho(*k) * float(c) for k, c in prod.terms.items()),
                               np.zeros_like(rho(g, x)))
                    assert np.allclose(rho(g, x) @ rho(h, y), want)


def test_induced_degrees_fill_the_double(s3):
    eng = get_engine(3)
    total = 0
    for u in eng.ctx.class_reps:
        tab = eng.table(u)
        total += sum(InducedCharacter(s3, u, tab, j).degree ** 2 for j in range(len(tab)))
    assert total == 36


def test_gamma_is_an_algebra_map(s3):
    rng = _rng()
    sigma = Automorphism.inner(s3, perm("(1,2)", 3))
    for _ in range(5):
        a, b = random_element(s3, rng), random_element(s3, rng)
        assert gamma_automorphism(sigma, a * b) == gamma_automorphism(sigma, a) * gamma_automorphism(sigma, b)
        assert counit(gamma_automorphism(sigma, a)) == counit(a)


def test_gamma_fixes_integral_powers(s3):
    sigma = Automorphism.inner(s3, perm("(1,2,3)", 3))
    for m in (2, 3):
        lam = lambda_power_closed(s3, m)
        assert gamma_automorphism(sigma, lam) == lam


def test_s6_automorphism_transports_indicator_rows():
    sigma = s6_outer_automorphism()
    eng = get_engine(6)
    mat = eng.matrix()
    pairs = set()
    for b in mat.blocks:
        k = eng.ctx.class_index(sigma(b.u))
        assert Counter(b.rows) == Counter(mat.blocks[k - 1].rows)
        if k != b.i:
            pairs.add(frozenset({b.i, k}))
    assert pairs == {frozenset({2, 4}), frozenset({5, 7}), frozenset({6, 11})}


def test_s6_automorphism_is_outer():
    sigma = s6_outer_automorphism()
    t = perm("(1,2)", 6)
    assert sigma(t).cycle_type() != t.cycle_type()


def test_from_generators_rejects_inconsistent_images():
    with pytest.raises(ValueError):
        Automorphism.from_generators({perm("(1,2)", 3): perm("(1,2,3)", 3), perm("(1,2,3)", 3): perm("(1,2,3)", 3)})


def test_basis_arithmetic():
    e = Permutation.identity(3)
    a = DGElement.basis(e, e, Fraction(1, 2))
    assert (a + a) == DGElement.basis(e, e)
    assert (a - a).terms == {}
