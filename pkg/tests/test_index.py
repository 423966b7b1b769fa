import datetime as dt
import math

import pytest
from hypothesis import given, strategies as st

from ordseries import (CapabilityError, DateIndex, DomainError, IntIndex, KindMismatch,
                       ParseError, RealIndex, TimestampIndex, YearMonth, YearQuarter, as_index,
                       date_to_yearquarter, first_of_month, yearmonth_from_real,
                       yearmonth_to_date, yearmonth_to_quarter, yearquarter_from_real,
                       yearquarter_to_date)
from ordseries.index import AUTODETECT_ORDER, KINDS, kind_of


# yearmonth_from_real -------------------------------------------------------

def test_yearmonth_from_real_examples():
    assert str(yearmonth_from_real(2000.0)) == "Jan 2000"
    assert str(yearmonth_from_real(2000.75)) == "Oct 2000"
    assert str(yearmonth_from_real(2000.9999)) == "Dec 2000"


def test_snap_rule_matches_formula():
    # floor(12 x + 1e-4) evaluated directly
    for x in (1999.99999, 2000.0833, 2000.08333, 2000.5 - 1e-6, 2024.999):
        assert yearmonth_from_real(x).count == math.floor(12 * x + 0.0001)


def test_snap_rejects_non_finite():
    for bad in (math.inf, -math.inf, math.nan):
        with pytest.raises(DomainError):
            yearmonth_from_real(bad)


def test_snap_idempotent_1900_2100():
    for count in range(1900 * 12, 2101 * 12):
        ym = YearMonth(count)
        assert yearmonth_from_real(ym.to_number()) == ym


def test_yearquarter_snap():
    assert str(yearquarter_from_real(2000.5)) == "2000 Q3"
    for count in range(1900 * 4, 2101 * 4):
        yq = YearQuarter(count)
        assert yearquarter_from_real(yq.to_number()) == yq


# calendar conversions ------------------------------------------------------

def test_yearmonth_to_date_examples():
    assert str(yearmonth_to_date(YearMonth.from_ym(2000, 1), 0)) == "2000-01-01"
    assert str(yearmonth_to_date(YearMonth.from_ym(2000, 2), 1)) == "2000-02-29"
    assert str(yearmonth_to_date(YearMonth.from_ym(2000, 9), 1)) == "2000-09-30"
    assert str(yearmonth_to_date(YearMonth.from_ym(1900, 2), 1)) == "1900-02-28"


def test_yearmonth_to_date_intermediate_frac():
    # Jan has 31 days: first + floor(0.5 * 30) = Jan 16
    assert str(yearmonth_to_date(YearMonth.from_ym(2001, 1), 0.5)) == "2001-01-16"
    with pytest.raises(DomainError):
        yearmonth_to_date(YearMonth.from_ym(2001, 1), 1.5)


def test_quarter_conversions():
    assert str(yearmonth_to_quarter(YearMonth.from_ym(2000, 1))) == "2000 Q1"
    assert str(yearmonth_to_quarter(YearMonth.from_ym(2000, 6))) == "2000 Q2"
    assert str(yearmonth_to_quarter(YearMonth.from_ym(2000, 9))) == "2000 Q3"
    assert str(yearquarter_to_date(YearQuarter.from_yq(2000, 1), 1)) == "2000-03-31"
    assert str(date_to_yearquarter(DateIndex.parse("2004-11-30"))) == "2004 Q4"


def test_first_of_month():
    assert str(first_of_month(DateIndex.parse("2004-02-29"))) == "2004-02-01"
    assert str(first_of_month(TimestampIndex.parse("2004-03-05T13:00:00"))) == "2004-03-01"


# rendering and parsing -----------------------------------------------------

@pytest.mark.parametrize("kind,text,shown", [
    (DateIndex, "2004-01-05", "2004-01-05"),
    (TimestampIndex, "2004-01-05T00:00:00", "2004-01-05"),
    (TimestampIndex, "2004-01-05 13:45:10", "2004-01-05T13:45:10"),
    (YearMonth, "2000-10", "Oct 2000"),
    (YearQuarter, "2000-Q3", "2000 Q3"),
    (IntIndex, "-42", "-42"),
    (RealIndex, "2000.25", "2000.25"),
])
def test_parse_and_render(kind, text, shown):
    v = kind.parse(text)
    assert str(v) == shown
    assert kind.parse(v.to_text()) == v


@pytest.mark.parametrize("kind,text", [
    (DateIndex, "2004-1-05"), (DateIndex, "2004-01-05x"), (DateIndex, "2004-02-30"),
    (TimestampIndex, "2004-01-05T25:00:00"), (TimestampIndex, "2004-01-05"),
    (YearMonth, "2004-13"), (YearQuarter, "2004-Q5"), (IntIndex, "1.5"), (RealIndex, "1e"),
    (RealIndex, "nan"), (DateIndex, "２００４-01-05"),
])
def test_parse_is_strict(kind, text):
    with pytest.raises(ParseError):
        kind.parse(text)


def test_date_round_trip_1970_2100():
    d = dt.date(1970, 1, 1)
    end = dt.date(2100, 12, 31)
    while d <= end:
        text = d.isoformat()
        v = DateIndex.parse(text)
        assert str(v) == text and v.to_number() == (d - dt.date(1970, 1, 1)).days
        d += dt.timedelta(days=1)


def test_autodetect_order_covers_all_kinds():
    assert set(AUTODETECT_ORDER) == set(KINDS)


# order, matching, kinds ----------------------------------------------------

def test_cross_kind_comparison_raises():
    with pytest.raises(KindMismatch):
        DateIndex(1) < IntIndex(2)
    assert DateIndex(1) != IntIndex(1)
    with pytest.raises(KindMismatch):
        kind_of([DateIndex(1), IntIndex(1)])


def test_real_order_is_exact():
    # the regularity tolerance never leaks into ordering or matching
    a, b = RealIndex(1.0), RealIndex(1.0 + 1e-12)
    assert a < b and a != b


def test_as_index():
    assert as_index(dt.date(2004, 1, 5)) == DateIndex.parse("2004-01-05")
    assert as_index(dt.datetime(2004, 1, 5, 1, 2, 3)) == TimestampIndex.parse("2004-01-05T01:02:03")
    assert as_index(3) == IntIndex(3)
    assert as_index(2.5) == RealIndex(2.5)
    with pytest.raises(KindMismatch):
        as_index(True)
    with pytest.raises(KindMismatch):
        as_index("2004-01-05")


def test_shift_capabilities():
    assert DateIndex.parse("2004-02-28").shift(1) == DateIndex.parse("2004-02-29")
    assert YearMonth.from_ym(2000, 12).shift(1 / 12) == YearMonth.from_ym(2001, 1)
    with pytest.raises(DomainError):
        DateIndex(0).shift(0.5)
    with pytest.raises(DomainError):
        DateIndex(0).shift(10 ** 9)


def test_immutable():
    v = DateIndex(3)
    with pytest.raises(AttributeError):
        v.days = 4


# properties ----------------------------------------------------------------

def _values(kind):
    return {
        DateIndex: st.integers(-700000, 2900000).map(DateIndex),
        TimestampIndex: st.integers(-10 ** 10, 10 ** 11).map(TimestampIndex),
        YearMonth: st.integers(12, 9999 * 12).map(YearMonth),
        YearQuarter: st.integers(4, 9999 * 4).map(YearQuarter),
        IntIndex: st.integers(-10 ** 12, 10 ** 12).map(IntIndex),
        RealIndex: st.floats(-1e12, 1e12, allow_nan=False).map(RealIndex),
    }[kind]


@pytest.mark.parametrize("kind", list(KINDS.values()), ids=list(KINDS))
@given(data=st.data())
def test_order_matching_projection_agree(kind, data):
    vals = data.draw(st.lists(_values(kind), min_size=2, max_size=12))
    for a in vals:
        for b in vals:
            lt, gt = a < b, b < a
            assert not (lt and gt)
            assert (a == b) == (not lt and not gt)
            if lt:
                assert a.to_number() < b.to_number()
            for c in vals:
                if a < b and b < c:
                    assert a < c


@pytest.mark.parametrize("kind,grain", [(DateIndex, 1), (TimestampIndex, 1), (YearMonth, 12),
                                        (YearQuarter, 4), (IntIndex, 1)])
@given(data=st.data())
def test_shift_round_trip(kind, grain, data):
    v = data.draw(_values(kind))
    k = data.draw(st.integers(-500, 500))
    target = v.to_number() + k / grain
    try:
        shifted = v.shift(k / grain)
    except DomainError:
        # overflow is a checked error for the calendar kinds
        assert kind in (YearMonth, YearQuarter) and not 0 <= math.floor(target) <= 9999
        return
    assert shifted.to_number() == pytest.approx(target, abs=1e-9)


def test_capability_error_without_projection():
    class Label(IntIndex):
        kind_name = "label"
        has_projection = False

        def to_number(self):
            raise CapabilityError("no projection")

    with pytest.raises(CapabilityError):
        Label(1).to_number()
