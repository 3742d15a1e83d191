"""Exception hierarchy shared by every module of the package."""


class LaminationError(Exception):
    """Base class for all domain errors raised by this package."""


class DivisionByZero(LaminationError, ZeroDivisionError):
    pass


class PrecisionExhausted(LaminationError):
    """A leading term could not be certified inside the truncation window.

    Callers may retry at a larger truncation, see
    :func:`laminations.laurent.retry_with_precision`.
    """


class ZeroValuation(LaminationError, ValueError):
    """Valuation (or sign) requested on the exact zero series."""


class IndexOutOfRange(LaminationError, IndexError):
    pass


class KindMismatch(LaminationError, ValueError):
    pass


class DegenerateConfiguration(LaminationError):
    pass


class DegenerateSystem(LaminationError):
    pass


class Unsupported(LaminationError):
    pass


class MinusInfinity(LaminationError):
    """Every determinant considered by a tropical coordinate vanished."""


class SearchExhausted(LaminationError):
    pass


class EdgeMismatch(LaminationError):
    pass


class NotInternal(LaminationError, ValueError):
    pass


class IncompatibleGluing(LaminationError):
    pass


class NonIntegralSlopes(LaminationError):
    pass


class NonConvergent(LaminationError):
    pass


class ParseError(LaminationError, ValueError):
    pass
