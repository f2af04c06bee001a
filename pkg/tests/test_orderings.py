from fractions import Fraction

import pytest

from sympmatroid.orderings import (
    AdmissibleOrdering,
    all_admissible_orderings,
    is_compatible,
    ordering_from_top_row,
    parse_top_row,
    random_compatible_weight,
    standard_ordering,
    threshold_weight,
)


def test_full_order_from_top_row():
    o = ordering_from_top_row((-2, 1, 3), 3)
    assert o.full_order == (-2, 1, 3, -3, -1, 2)


def test_standard_ordering():
    assert standard_ordering(3).full_order == (3, 2, 1, -1, -2, -3)


@pytest.mark.parametrize(
    "seq,n",
    [((1, 1), 2), ((1,), 2), ((1, 4), 2), ((1, 0), 2)],
)
def test_invalid_top_rows(seq, n):
    with pytest.raises(ValueError):
        ordering_from_top_row(seq, n)


def test_compare():
    o = ordering_from_top_row((-2, 1, 3), 3)
    assert o.compare(3, 2) == "greater"
    assert all(o.compare(x, x) == "equal" for x in o.full_order)
    std = standard_ordering(3)
    assert std.compare(-1, -3) == "greater"


@pytest.mark.parametrize("n,count", [(1, 2), (2, 8), (3, 48), (4, 384)])
def test_ordering_counts(n, count):
    # 2^n * n!, distinct top rows
    rows = [o.top_row for o in all_admissible_orderings(n)]
    assert len(rows) == count
    assert len(set(rows)) == count


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_mirror_symmetry(n):
    for o in all_admissible_orderings(n):
        full = o.full_order
        for p in range(2 * n):
            assert full[p] == -full[2 * n - 1 - p]


def test_n1_orderings():
    assert [o.top_row for o in all_admissible_orderings(1)] == [(1,), (-1,)]


def test_is_compatible():
    o = ordering_from_top_row((-2, 1, 3), 3)
    assert is_compatible({e: 0 for e in o.full_order}, o)
    for k in range(7):
        assert is_compatible(threshold_weight(o, k), o)
    w = {e: 0 for e in o.full_order}
    w[o.full_order[-1]] = 1  # weight increases at the smallest element
    assert not is_compatible(w, o)


def test_threshold_weight():
    o = ordering_from_top_row((-2, 1, 3), 3)
    assert all(v == 0 for v in threshold_weight(o, 0).values())
    assert all(v == 1 for v in threshold_weight(o, 6).values())
    w = threshold_weight(o, 2)
    assert {e for e, v in w.items() if v == 1} == {-2, 1}
    with pytest.raises(ValueError):
        threshold_weight(o, 7)


def test_random_compatible_weight():
    o = standard_ordering(3)
    w1 = random_compatible_weight(o, 42)
    w2 = random_compatible_weight(o, 42)
    assert w1 == w2
    assert w1 != random_compatible_weight(o, 43)
    for seed in range(1, 1001):
        w = random_compatible_weight(o, seed)
        assert is_compatible(w, o)
        assert all(
            isinstance(v, Fraction) and -10 <= v <= 10 for v in w.values()
        )


def test_threshold_prefix_nesting():
    # threshold(k) - threshold(j) is nonnegative exactly on positions j+1..k
    o = ordering_from_top_row((3, -1, 2), 3)
    for j in range(7):
        for k in range(j, 7):
            hi = threshold_weight(o, k)
            lo = threshold_weight(o, j)
            diff = [hi[e] - lo[e] for e in o.full_order]
            assert diff == [0] * j + [1] * (k - j) + [0] * (6 - k)


def test_parse_top_row():
    assert parse_top_row("-2 1 3").top_row == (-2, 1, 3)
    with pytest.raises(ValueError):
        parse_top_row("1 q")
