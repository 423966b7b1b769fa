import math

import pytest

import reference_data as P
from ordseries import (DomainError, IntIndex, Series, merge, roll_apply, roll_max, roll_mean,
                       roll_median)
from ordseries.rolling import RollSpec
from ordseries.stats import get_stat


def ints(cells):
    return Series([IntIndex(k) for k in range(len(cells))], cells)


def test_spec_validation():
    assert RollSpec(3, "r").align == "right"
    for bad in (0, -1, 2.5, True):
        with pytest.raises(ValueError):
            RollSpec(bad)
    with pytest.raises(ValueError):
        RollSpec(3, "middle")


def test_offsets():
    assert [RollSpec(4, a).offset for a in ("left", "center", "right")] == [0, 1, 3]


@pytest.mark.parametrize("fn", [roll_mean, roll_median, roll_max])
def test_width_one_is_identity(fn):
    s = P.z1()
    assert fn(s, 1) == s


def test_even_width_median_rejected():
    with pytest.raises(DomainError):
        roll_median(P.z1(), 4)


def test_alignment_shifts_index():
    s = ints([float(k) for k in range(10)])
    left, centre, right = (roll_mean(s, 3, align=a) for a in ("left", "center", "right"))
    assert left.cells == centre.cells == right.cells
    assert [v.value for v in left.index] == list(range(0, 8))
    assert [v.value for v in centre.index] == list(range(1, 9))
    assert [v.value for v in right.index] == list(range(2, 10))


def test_pad_keeps_rows():
    s = ints([1.0, 2.0, 3.0, 4.0])
    out = roll_mean(s, 3, pad=True)
    assert out.index == s.index and out.cells == (None, 2.0, 3.0, None)


def test_window_wider_than_series():
    s = ints([1.0, 2.0])
    assert roll_mean(s, 5).nrow == 0
    assert roll_max(s, 5, pad=True).cells == (None, None)


def test_missing_cells_poison_window():
    s = ints([1.0, None, 3.0, 4.0, 5.0])
    assert roll_mean(s, 2, align="left").cells == (None, None, 3.5, 4.5)
    assert roll_max(s, 3, align="left").cells == (None, None, 5.0)
    assert roll_median(s, 3, align="left").cells == (None, None, 4.0)


def test_nan_cells():
    s = ints([1.0, math.nan, 3.0, 4.0])
    out = roll_max(s, 2, align="left").cells
    assert math.isnan(out[0]) and math.isnan(out[1]) and out[2] == 4.0
    assert math.isnan(roll_mean(s, 2, align="left").cells[0])


def test_threads_identical():
    z = P.z()
    for fn in (roll_mean, roll_max, roll_median):
        assert fn(z, 3, threads=4) == fn(z, 3)
    sd = get_stat("sd", skip_missing=False)
    assert roll_apply(z, 3, sd, threads=3) == roll_apply(z, 3, sd)


def test_roll_max_of_nondecreasing_is_right_end():
    cells = [float(k // 3) for k in range(40)]
    s = ints(cells)
    out = roll_max(s, 5, align="left")
    assert list(out.cells) == cells[4:]


def test_frame_rolls_per_column():
    f = merge(ints([1.0, 2.0, 3.0]), ints([3.0, 2.0, 1.0]))
    out = roll_median(f, 3)
    assert out.columns == ((2.0,), (2.0,))
