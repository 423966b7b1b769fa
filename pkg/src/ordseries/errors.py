"""Exception hierarchy shared by every module."""


class OrdSeriesError(Exception):
    """Base class for all library errors."""


class ParseError(OrdSeriesError, ValueError):
    pass


class DomainError(OrdSeriesError, ValueError):
    pass


class KindMismatch(OrdSeriesError, TypeError):
    pass


class CapabilityError(OrdSeriesError, TypeError):
    """The index kind lacks a capability (numeric projection or shift)."""


class DuplicateIndex(OrdSeriesError, ValueError):
    pass


class OrderError(OrdSeriesError, ValueError):
    pass


class ShapeError(OrdSeriesError, ValueError):
    pass


class BoundsError(OrdSeriesError, IndexError):
    pass


class EmptyError(OrdSeriesError, ValueError):
    pass


class FrequencyMismatch(OrdSeriesError, ValueError):
    pass


class NotRegular(OrdSeriesError, ValueError):
    pass


class OverlapError(OrdSeriesError, ValueError):
    pass
