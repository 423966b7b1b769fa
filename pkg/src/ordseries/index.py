"""Index kinds.

Every index value is an instance of a subclass of :class:`IndexValue`.  The
subclass *is* the kind: a container holds values of exactly one subclass.
A kind provides

* a strict total order (``<`` and friends) and matching (``==`` / ``hash``),
* a text rendering for display (``str``) and one for CSV (``to_text``),
* optionally a numeric projection (``to_number``) and its partial inverse
  ``shift(offset)``, used by regularity checks, interpolation and plotting.

New kinds plug in by subclassing :class:`IndexValue` and implementing
``_key``, ``parse`` and ``__str__``.
"""

from __future__ import annotations

import calendar
import datetime as _dt
import math
import re
from typing import ClassVar

from .errors import CapabilityError, DomainError, KindMismatch, ParseError

__all__ = [
    "IndexValue",
    "DateIndex",
    "TimestampIndex",
    "YearMonth",
    "YearQuarter",
    "IntIndex",
    "RealIndex",
    "KINDS",
    "AUTODETECT_ORDER",
    "as_index",
    "kind_of",
    "yearmonth_from_real",
    "yearquarter_from_real",
    "yearmonth_to_date",
    "yearquarter_to_date",
    "yearmonth_to_quarter",
    "date_to_yearmonth",
    "date_to_yearquarter",
    "first_of_month",
    "REAL_EPS",
]

# absolute tolerance for real-valued regularity comparisons
REAL_EPS = 1e-8

_EPOCH_ORDINAL = _dt.date(1970, 1, 1).toordinal()
_MONTH_ABBR = ("Jan", "Feb", "Mar", "Apr", "May", "Jun",
               "Jul", "Aug", "Sep", "Oct", "Nov", "Dec")
_MIN_DAY = _dt.date.min.toordinal() - _EPOCH_ORDINAL
_MAX_DAY = _dt.date.max.toordinal() - _EPOCH_ORDINAL


class IndexValue:
    """Base class of all index kinds.

    Comparisons between different kinds raise :class:`KindMismatch`; equality
    between different kinds is simply false.
    """

    __slots__ = ()
    kind_name: ClassVar[str] = "abstract"
    has_projection: ClassVar[bool] = False
    has_shift: ClassVar[bool] = False

    def _key(self):
        raise NotImplementedError

    @classmethod
    def parse(cls, text: str) -> "IndexValue":
        raise NotImplementedError

    def to_text(self) -> str:
        """Text form accepted back by :meth:`parse` (used for CSV)."""
        return str(self)

    def to_number(self) -> float:
        raise CapabilityError(f"{self.kind_name} index has no numeric projection")

    def shift(self, offset: float) -> "IndexValue":
        raise CapabilityError(f"{self.kind_name} index does not support shifting")

    def _check(self, other):
        if type(other) is not type(self):
            raise KindMismatch(
                f"cannot compare {self.kind_name} with "
                f"{getattr(other, 'kind_name', type(other).__name__)}")

    def __lt__(self, other):
        self._check(other)
        return self._key() < other._key()

    def __le__(self, other):
        self._check(other)
        return self._key() <= other._key()

    def __gt__(self, other):
        self._check(other)
        return self._key() > other._key()

    def __ge__(self, other):
        self._check(other)
        return self._key() >= other._key()

    def __eq__(self, other):
        return type(other) is type(self) and self._key() == other._key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((type(self).__name__, self._key()))

    def __repr__(self):
        return f"{type(self).__name__}({self.to_text()!r})"


def _integral_steps(offset: float, grain: int) -> int:
    steps = offset * grain
    if not math.isfinite(steps):
        raise DomainError(f"non-finite shift {offset!r}")
    k = round(steps)
    if abs(steps - k) > REAL_EPS * max(1.0, abs(steps)):
        raise DomainError(f"shift {offset!r} is not a whole number of steps (grain 1/{grain})")
    return int(k)


_DATE_RE = re.compile(r"(\d{4})-(\d{2})-(\d{2})", re.ASCII)
_TS_RE = re.compile(r"(\d{4})-(\d{2})-(\d{2})[T ](\d{2}):(\d{2}):(\d{2})", re.ASCII)
_YM_RE = re.compile(r"(\d{4})-(\d{2})", re.ASCII)
_YQ_RE = re.compile(r"(\d{4})-Q([1-4])", re.ASCII)
_INT_RE = re.compile(r"[+-]?\d+", re.ASCII)
_REAL_RE = re.compile(r"[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?", re.ASCII)


def _make_date(y: str, m: str, d: str, text: str) -> _dt.date:
    try:
        return _dt.date(int(y), int(m), int(d))
    except ValueError as exc:
        raise ParseError(f"invalid date {text!r}: {exc}") from None


class DateIndex(IndexValue):
    """Calendar day, stored as days since 1970-01-01."""

    __slots__ = ("days",)
    kind_name = "date"
    has_projection = True
    has_shift = True

    def __init__(self, days: int):
        days = int(days)
        if not _MIN_DAY <= days <= _MAX_DAY:
            raise DomainError(f"day count {days} outside years 1..9999")
        object.__setattr__(self, "days", days)

    def __setattr__(self, name, value):
        raise AttributeError("index values are immutable")

    @classmethod
    def from_ymd(cls, year: int, month: int, day: int) -> "DateIndex":
        return cls(_dt.date(year, month, day).toordinal() - _EPOCH_ORDINAL)

    @classmethod
    def from_date(cls, d: _dt.date) -> "DateIndex":
        return cls(d.toordinal() - _EPOCH_ORDINAL)

    @classmethod
    def parse(cls, text: str) -> "DateIndex":
        m = _DATE_RE.fullmatch(text)
        if m is None:
            raise ParseError(f"not a date (YYYY-MM-DD): {text!r}")
        return cls.from_date(_make_date(*m.groups(), text))

    def to_date(self) -> _dt.date:
        return _dt.date.fromordinal(self.days + _EPOCH_ORDINAL)

    def _key(self):
        return self.days

    def __str__(self):
        return self.to_date().isoformat()

    def to_number(self) -> float:
        return float(self.days)

    def shift(self, offset: float) -> "DateIndex":
        return DateIndex(self.days + _integral_steps(offset, 1))


class TimestampIndex(IndexValue):
    """UTC instant with whole-second resolution, stored as seconds since the epoch."""

    __slots__ = ("seconds",)
    kind_name = "timestamp"
    has_projection = True
    has_shift = True

    def __init__(self, seconds: int):
        seconds = int(seconds)
        if not _MIN_DAY * 86400 <= seconds < (_MAX_DAY + 1) * 86400:
            raise DomainError(f"second count {seconds} outside years 1..9999")
        object.__setattr__(self, "seconds", seconds)

    def __setattr__(self, name, value):
        raise AttributeError("index values are immutable")

    @classmethod
    def from_parts(cls, year, month, day, hour=0, minute=0, second=0) -> "TimestampIndex":
        days = _dt.date(year, month, day).toordinal() - _EPOCH_ORDINAL
        if not (0 <= hour < 24 and 0 <= minute < 60 and 0 <= second < 60):
            raise DomainError("time of day out of range")
        return cls(days * 86400 + hour * 3600 + minute * 60 + second)

    @classmethod
    def parse(cls, text: str) -> "TimestampIndex":
        m = _TS_RE.fullmatch(text)
        if m is None:
            raise ParseError(f"not a timestamp (YYYY-MM-DDTHH:MM:SS): {text!r}")
        y, mo, d, hh, mm, ss = m.groups()
        date = _make_date(y, mo, d, text)
        hh, mm, ss = int(hh), int(mm), int(ss)
        if hh > 23 or mm > 59 or ss > 59:
            raise ParseError(f"invalid time of day in {text!r}")
        return cls((date.toordinal() - _EPOCH_ORDINAL) * 86400 + hh * 3600 + mm * 60 + ss)

    def _key(self):
        return self.seconds

    def _parts(self):
        days, rem = divmod(self.seconds, 86400)
        date = _dt.date.fromordinal(days + _EPOCH_ORDINAL)
        return date, rem // 3600, rem % 3600 // 60, rem % 60

    def __str__(self):
        date, hh, mm, ss = self._parts()
        if hh == mm == ss == 0:
            return date.isoformat()
        return f"{date.isoformat()}T{hh:02d}:{mm:02d}:{ss:02d}"

    def to_text(self) -> str:
        date, hh, mm, ss = self._parts()
        return f"{date.isoformat()}T{hh:02d}:{mm:02d}:{ss:02d}"

    def to_number(self) -> float:
        return float(self.seconds)

    def shift(self, offset: float) -> "TimestampIndex":
        return TimestampIndex(self.seconds + _integral_steps(offset, 1))


class _Period(IndexValue):
    """Shared machinery of the calendar period kinds (months, quarters)."""

    __slots__ = ("count",)
    has_projection = True
    has_shift = True
    per_year: ClassVar[int] = 1

    def __init__(self, count: int):
        count = int(count)
        if not 0 <= count // self.per_year <= 9999:
            raise DomainError(f"{self.kind_name} out of years 0..9999")
        object.__setattr__(self, "count", count)

    def __setattr__(self, name, value):
        raise AttributeError("index values are immutable")

    @classmethod
    def from_real(cls, x: float):
        if not math.isfinite(x):
            raise DomainError(f"non-finite value {x!r}")
        return cls(math.floor(cls.per_year * x + 0.0001))

    @property
    def year(self) -> int:
        return self.count // self.per_year

    @property
    def period(self) -> int:
        """1-based position within the year."""
        return self.count % self.per_year + 1

    def _key(self):
        return self.count

    def to_number(self) -> float:
        return self.count / self.per_year

    def shift(self, offset: float):
        return type(self)(self.count + _integral_steps(offset, self.per_year))


class YearMonth(_Period):
    """A calendar month; ``count`` is months since January of year 0."""

    __slots__ = ()
    kind_name = "yearmonth"
    per_year = 12

    @classmethod
    def from_ym(cls, year: int, month: int) -> "YearMonth":
        if not 1 <= month <= 12:
            raise DomainError(f"month {month} out of range")
        return cls(year * 12 + month - 1)

    @property
    def months(self) -> int:
        return self.count

    @property
    def month(self) -> int:
        return self.period

    @classmethod
    def parse(cls, text: str) -> "YearMonth":
        m = _YM_RE.fullmatch(text)
        if m is None:
            raise ParseError(f"not a year-month (YYYY-MM): {text!r}")
        month = int(m.group(2))
        if not 1 <= month <= 12:
            raise ParseError(f"invalid month in {text!r}")
        return cls.from_ym(int(m.group(1)), month)

    def __str__(self):
        return f"{_MONTH_ABBR[self.month - 1]} {self.year}"

    def to_text(self) -> str:
        return f"{self.year:04d}-{self.month:02d}"


class YearQuarter(_Period):
    """A calendar quarter; ``count`` is quarters since Q1 of year 0."""

    __slots__ = ()
    kind_name = "yearquarter"
    per_year = 4

    @classmethod
    def from_yq(cls, year: int, quarter: int) -> "YearQuarter":
        if not 1 <= quarter <= 4:
            raise DomainError(f"quarter {quarter} out of range")
        return cls(year * 4 + quarter - 1)

    @property
    def quarters(self) -> int:
        return self.count

    @property
    def quarter(self) -> int:
        return self.period

    @classmethod
    def parse(cls, text: str) -> "YearQuarter":
        m = _YQ_RE.fullmatch(text)
        if m is None:
            raise ParseError(f"not a year-quarter (YYYY-Qk): {text!r}")
        return cls.from_yq(int(m.group(1)), int(m.group(2)))

    def __str__(self):
        return f"{self.year} Q{self.quarter}"

    def to_text(self) -> str:
        return f"{self.year:04d}-Q{self.quarter}"


class IntIndex(IndexValue):
    __slots__ = ("value",)
    kind_name = "int"
    has_projection = True
    has_shift = True

    def __init__(self, value: int):
        if isinstance(value, float) and not value.is_integer():
            raise DomainError(f"non-integral value {value!r}")
        object.__setattr__(self, "value", int(value))

    def __setattr__(self, name, value):
        raise AttributeError("index values are immutable")

    @classmethod
    def parse(cls, text: str) -> "IntIndex":
        if _INT_RE.fullmatch(text) is None:
            raise ParseError(f"not an integer: {text!r}")
        return cls(int(text))

    def _key(self):
        return self.value

    def __str__(self):
        return str(self.value)

    def to_number(self) -> float:
        return float(self.value)

    def shift(self, offset: float) -> "IntIndex":
        return IntIndex(self.value + _integral_steps(offset, 1))


class RealIndex(IndexValue):
    """A finite real number.  Ordering and matching are exact."""

    __slots__ = ("value",)
    kind_name = "real"
    has_projection = True
    has_shift = True

    def __init__(self, value: float):
        value = float(value)
        if not math.isfinite(value):
            raise DomainError(f"non-finite real index {value!r}")
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("index values are immutable")

    @classmethod
    def parse(cls, text: str) -> "RealIndex":
        if _REAL_RE.fullmatch(text) is None:
            raise ParseError(f"not a decimal number: {text!r}")
        return cls(float(text))

    def _key(self):
        return self.value

    def __str__(self):
        return f"{self.value:.15g}"

    def to_text(self) -> str:
        return repr(self.value)

    def to_number(self) -> float:
        return self.value

    def shift(self, offset: float) -> "RealIndex":
        return RealIndex(self.value + offset)


KINDS: dict[str, type[IndexValue]] = {
    "date": DateIndex,
    "timestamp": TimestampIndex,
    "yearmonth": YearMonth,
    "yearquarter": YearQuarter,
    "int": IntIndex,
    "real": RealIndex,
}
AUTODETECT_ORDER = ("date", "timestamp", "yearmonth", "yearquarter", "int", "real")


def as_index(value) -> IndexValue:
    """Coerce a plain Python value to an index value.

    ``datetime`` becomes a timestamp, ``date`` a date, ``int`` an
    :class:`IntIndex` and ``float`` a :class:`RealIndex`.
    """
    if isinstance(value, IndexValue):
        return value
    if isinstance(value, _dt.datetime):
        if value.tzinfo is not None:
            value = value.astimezone(_dt.timezone.utc).replace(tzinfo=None)
        return TimestampIndex.from_parts(value.year, value.month, value.day,
                                         value.hour, value.minute, value.second)
    if isinstance(value, _dt.date):
        return DateIndex.from_date(value)
    if isinstance(value, bool):
        raise KindMismatch("booleans are not index values")
    if isinstance(value, int):
        return IntIndex(value)
    if isinstance(value, float):
        return RealIndex(value)
    raise KindMismatch(f"cannot use {type(value).__name__} as an index value")


def kind_of(values) -> type[IndexValue] | None:
    """Return the common kind of ``values`` (``None`` when empty)."""
    kind = None
    for v in values:
        if kind is None:
            kind = type(v)
            if not issubclass(kind, IndexValue):
                raise KindMismatch(f"{kind.__name__} is not an index value")
        elif type(v) is not kind:
            raise KindMismatch(f"mixed index kinds: {kind.kind_name} and "
                               f"{getattr(v, 'kind_name', type(v).__name__)}")
    return kind


def yearmonth_from_real(x: float) -> YearMonth:
    """Snap a real year value to its month: ``floor(12*x + 0.0001)`` months."""
    return YearMonth.from_real(x)


def yearquarter_from_real(x: float) -> YearQuarter:
    return YearQuarter.from_real(x)


def _days_in_month(year: int, month: int) -> int:
    return calendar.monthrange(year, month)[1]


def yearmonth_to_date(ym: YearMonth, frac: float = 0.0) -> DateIndex:
    """Day within the month: ``frac=0`` is the first day, ``frac=1`` the last."""
    if not 0.0 <= frac <= 1.0:
        raise DomainError(f"frac must lie in [0, 1], got {frac!r}")
    if ym.year < 1:
        raise DomainError("year 0 has no calendar date")
    first = DateIndex.from_ymd(ym.year, ym.month, 1)
    return DateIndex(first.days + math.floor(frac * (_days_in_month(ym.year, ym.month) - 1)))


def yearquarter_to_date(yq: YearQuarter, frac: float = 0.0) -> DateIndex:
    if not 0.0 <= frac <= 1.0:
        raise DomainError(f"frac must lie in [0, 1], got {frac!r}")
    if yq.year < 1:
        raise DomainError("year 0 has no calendar date")
    first = DateIndex.from_ymd(yq.year, 3 * yq.quarter - 2, 1)
    last_month = 3 * yq.quarter
    last = DateIndex.from_ymd(yq.year, last_month, _days_in_month(yq.year, last_month))
    return DateIndex(first.days + math.floor(frac * (last.days - first.days)))


def yearmonth_to_quarter(ym: YearMonth) -> YearQuarter:
    return YearQuarter.from_yq(ym.year, (ym.month - 1) // 3 + 1)


def date_to_yearmonth(d: DateIndex) -> YearMonth:
    cal = d.to_date()
    return YearMonth.from_ym(cal.year, cal.month)


def date_to_yearquarter(d: DateIndex) -> YearQuarter:
    return yearmonth_to_quarter(date_to_yearmonth(d))


def first_of_month(d: DateIndex | TimestampIndex) -> DateIndex:
    """First day of the month containing ``d`` (grouping helper for aggregation)."""
    if isinstance(d, TimestampIndex):
        d = DateIndex(d.seconds // 86400)
    cal = d.to_date()
    return DateIndex.from_ymd(cal.year, cal.month, 1)
