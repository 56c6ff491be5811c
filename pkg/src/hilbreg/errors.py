"""Exception types raised by the library.

Every error derives from :class:`HilbregError`, itself a ``ValueError``, so
callers that only care about "bad input" can catch one thing.
"""


class HilbregError(ValueError):
    pass


class SegmentTooLarge(HilbregError):
    pass


class NotALexSegment(HilbregError):
    pass


class ZeroSeries(HilbregError):
    pass


class InvalidSeries(HilbregError):
    pass


class DimensionZero(HilbregError):
    pass


class UnitIdeal(HilbregError):
    pass


class NotAdmissible(HilbregError):
    pass


class LevelOutOfRange(HilbregError):
    pass


class IndexOutOfRange(HilbregError):
    pass


class TooManyForms(HilbregError):
    pass


class NotAnOSequence(HilbregError):
    pass


class TruncationUnsound(HilbregError):
    pass


class NotStronglyStable(HilbregError):
    pass


class InvalidSpec(HilbregError):
    pass
