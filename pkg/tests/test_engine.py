import warnings

import pytest

from conftest import perm
from fsind.engine import (Engine, Label, LawViolation, abelian_singleton_predictor, compute_matrix,
                          extend_to_all_m, gamma_set, get_engine, indicators_for_class, parity_skip)
from fsind.perm import Permutation


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_identity_shortcut_equals_scan(n):
    eng = get_engine(n)
    e = Permutation.identity(n)
    for m in eng.ctx.divisors:
        assert eng.gamma_set(e, m).entries == eng.gamma_set(e, m, force_scan=True).entries


@pytest.mark.parametrize("n", [4, 5, 6])
def test_totals_equal_direct_count(n):
    eng = get_engine(n)
    for u in eng.ctx.class_reps:
        for m in eng.ctx.divisors:
            assert eng.gamma_set(u, m, force_scan=True).total == eng.count_scan(u, m)


def test_identity_sum_is_group_order():
    # (eh)^m = h^m holds for every h
    eng = get_engine(5)
    assert all(eng.gamma_set(Permutation.identity(5), m).total == 120 for m in eng.ctx.divisors)


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_predictor_shortcut_matches_full_evaluation(n):
    eng = get_engine(n)
    for i in range(2, len(eng.ctx.class_reps) + 1):
        assert eng.indicators_for_class(i, optimize=True) == eng.indicators_for_class(i, optimize=False)


def test_predictor_fires_on_abelian_singletons():
    eng = get_engine(5)
    u = perm("(1,2,3,4,5)", 5)
    sets = [eng.gamma_set(u, m) for m in eng.ctx.divisors]
    assert eng.centralizer(u).is_abelian()
    assert abelian_singleton_predictor(eng, u, sets)
    u2 = perm("(1,2)", 5)
    assert not abelian_singleton_predictor(eng, u2, [eng.gamma_set(u2, m) for m in eng.ctx.divisors])


def test_m1_column():
    # nu_1 is 1 only for the trivial character of D(G)
    mat = get_engine(5).matrix()
    k = mat.divisors.index(1)
    assert sum(r[k] for r in mat.rows()) == 1


def test_extend_to_all_m():
    row = [10, 11, 12, 13, 14, 15]
    divs = [1, 2, 3, 4, 6, 12]
    assert extend_to_all_m(row, 12, 18, divs) == 14
    assert extend_to_all_m(row, 12, 36, divs) == 15
    assert extend_to_all_m(row, 12, 25, divs) == 10
    assert extend_to_all_m(row, 12, 8) == 13
    with pytest.raises(ValueError):
        extend_to_all_m(row, 12, 0)


def test_matrix_value_lookup():
    mat = get_engine(4).matrix()
    lab = Label(3, 1)
    assert mat.value(lab, 24) == mat.blocks[2].rows[0][-1]
    assert str(lab) == "chi_3.1" and lab.latex == "\\chi_{3.1}"


def test_parity_skip():
    assert parity_skip(perm("(1,2)", 4), 3)
    assert not parity_skip(perm("(1,2)", 4), 2)
    assert not parity_skip(perm("(1,2,3)", 4), 3)


def test_invalid_m():
    with pytest.raises(ValueError):
        get_engine(3).gamma_set(Permutation.identity(3), 0)


def test_functional_entry_points_agree_with_engine():
    eng = get_engine(4)
    assert gamma_set(4, eng.ctx.rep(2), 2) == eng.gamma_set(eng.ctx.rep(2), 2)
    assert indicators_for_class(eng.ctx, 3) == eng.indicators_for_class(3)
    assert compute_matrix(4) == eng.matrix()


def test_parallel_matrix_equals_serial():
    assert Engine(5).matrix(jobs=2) == Engine(5).matrix()


def test_nu2_law_warning_is_quiet_on_real_data():
    with warnings.catch_warnings():
        warnings.simplefilter("error", LawViolation)
        get_engine(6).indicators_for_class(5)


def test_gamma_set_reports_representatives():
    eng = get_engine(4)
    gs = eng.gamma_set(perm("(1,2)(3,4)", 4), 2)
    assert [c for c, _ in gs.pairs()] == [k for k, _ in gs.entries]
    sub = eng.centralizer(gs.u)
    assert all(r in sub for r in gs.reps)
