import pytest

from fsind.engine import IndicatorMatrix, Label, get_engine
from fsind.equivalence import reduce, reduce_matrix, zero_audit, zero_table


def test_reduce_groups_identical_rows_in_first_seen_order():
    labels = [Label(1, 1), Label(2, 1), Label(2, 2), Label(3, 1)]
    rows = [(1, 1), (0, 1), (1, 1), (0, 1)]
    classes = reduce(labels, rows)
    assert [c.members for c in classes] == [(Label(1, 1), Label(2, 2)), (Label(2, 1), Label(3, 1))]
    assert classes[0].trivially_induced and not classes[1].trivially_induced
    assert not classes[0].homogeneous
    assert classes[1].centralizers == frozenset({2, 3})


def test_latex_listing():
    c = reduce([Label(2, 1), Label(2, 3)], [(0, 1), (0, 1)])[0]
    assert c.latex() == "[\\ \\chi_{2.1}, \\chi_{2.3}\\ ]"


@pytest.mark.parametrize("n,unexpected,values", [(3, 0, None), (4, 0, None), (5, 0, None),
                                                 (6, 2, 130), (7, 2, 726), (8, 13, 1980)])
def test_zero_audit_summaries(n, unexpected, values):
    _, s = zero_audit(get_engine(n).matrix())
    assert s.unexpected == unexpected
    if values is not None:
        assert s.nontrivial_values == values


def test_s8_zero_table():
    rows = {(r.u, r.ms, r.count, r.all_classes) for r in zero_table(get_engine(8).matrix())}
    assert rows == {("(12)(34)", (3, 5), 2, False),
                    ("(12)(34)(56)(78)", (5,), 7, True),
                    ("(123)", (3, 5), 1, False)}


def test_percentages():
    _, s6 = zero_audit(get_engine(6).matrix())
    _, s7 = zero_audit(get_engine(7).matrix())
    assert round(s6.percent, 2) == 1.54
    assert round(s7.percent, 2) == 0.28


def test_expected_zero_reasons():
    records, _ = zero_audit(get_engine(5).matrix())
    reasons = {r.reason for r in records}
    assert reasons <= {"m = 1", "trivially induced", "odd-u-odd-m"}
    assert all(r.classification == "expected" for r in records)


def test_injected_zero_is_unexpected():
    mat = get_engine(4).matrix()
    b = mat.blocks[2]  # u = (1,2)(3,4), even
    k = mat.divisors.index(3)
    rows = list(b.rows)
    rows[0] = rows[0][:k] + (0,) + rows[0][k + 1:]
    blocks = list(mat.blocks)
    blocks[2] = type(b)(b.i, b.u, tuple(rows), b.signature)
    bad = IndicatorMatrix(mat.n, mat.exponent, mat.divisors, tuple(blocks))
    records, s = zero_audit(bad)
    assert s.unexpected >= 1
    assert any(r.label == Label(3, 1) and r.m == 3 and r.classification == "unexpected" for r in records)
