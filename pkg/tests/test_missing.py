import pytest
from hypothesis import given, strategies as st

import reference_data as P
from ordseries import (FillPolicy, IntIndex, Series, ShapeError, drop_missing, fill_interp,
                       fill_locf, longest_complete_run, merge)


def ints(cells, keys=None):
    keys = keys if keys is not None else range(len(cells))
    return Series([IntIndex(k) for k in keys], cells)


def test_drop_missing_how():
    f = merge(ints([1.0, None, None]), ints([None, 2.0, None]))
    assert drop_missing(f).nrow == 0
    assert [v.value for v in drop_missing(f, "all").index] == [0, 1]
    with pytest.raises(ValueError):
        drop_missing(f, "some")


def test_longest_run_earliest_wins():
    s = ints([1.0, 2.0, None, 3.0, 4.0, None, 5.0])
    assert [v.value for v in longest_complete_run(s).index] == [0, 1]
    assert longest_complete_run(ints([None, None])).nrow == 0


def test_locf_edges():
    s = ints([None, 1.0, None, None, 2.0, None])
    assert fill_locf(s).cells == (1.0, 1.0, 1.0, 2.0, 2.0)
    kept = fill_locf(s, FillPolicy(keep_edges=True))
    assert kept.cells == (None, 1.0, 1.0, 1.0, 2.0, 2.0)


def test_interp_edges():
    s = ints([None, 1.0, None, 3.0, None])
    assert fill_interp(s).cells == (1.0, 2.0, 3.0)
    kept = fill_interp(s, FillPolicy(keep_edges=True))
    assert kept.cells == (None, 1.0, 2.0, 3.0, None)


def test_interp_abscissa_choices():
    s = ints([0.0, None, 3.0], keys=[0, 2, 3])
    assert fill_interp(s).cells[1] == 2.0
    assert fill_interp(s, FillPolicy(abscissa="positions")).cells[1] == 1.5
    assert fill_interp(s, FillPolicy(abscissa=[0, 1, 6])).cells[1] == 0.5
    with pytest.raises(ShapeError):
        fill_interp(s, FillPolicy(abscissa=[0, 1]))
    with pytest.raises(ShapeError):
        fill_interp(s, FillPolicy(abscissa=[0, 2, 1]))
    with pytest.raises(ValueError):
        fill_interp(s, FillPolicy(abscissa="rows"))


def test_reference_fixture_fills():
    z1na = P.z1na()
    assert all(x is not None for x in fill_locf(z1na).cells)
    assert fill_interp(z1na).nrow == 9  # trailing missing row is dropped


def test_frame_columns_fill_independently():
    f = merge(ints([1.0, None, 3.0]), ints([None, 5.0, None]))
    out = fill_locf(f, FillPolicy(keep_edges=True))
    assert out.columns == ((1.0, 1.0, 3.0), (None, 5.0, 5.0))
    assert fill_locf(f).nrow == 2


# oracle for the longest complete run ---------------------------------------

masks = st.lists(st.booleans(), max_size=30)


@given(masks)
def test_longest_run_matches_brute_force(mask):
    s = ints([1.0 if m else None for m in mask])
    best = (0, 0)
    n = len(mask)
    for i in range(n):
        for j in range(i, n + 1):
            if all(mask[i:j]) and j - i > best[1] - best[0]:
                best = (i, j)
    got = [v.value for v in longest_complete_run(s).index]
    assert got == list(range(*best))
