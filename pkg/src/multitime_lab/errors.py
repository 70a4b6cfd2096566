"""Exception hierarchy shared by all modules."""


class MultitimeError(Exception):
    """Base class for every error raised by this package."""


class DimensionMismatch(MultitimeError, ValueError):
    pass


class DimensionOverflow(MultitimeError, ValueError):
    pass


class NumericalFailure(MultitimeError, ArithmeticError):
    pass


class RankDeficient(MultitimeError, ValueError):
    pass


class ArityMismatch(MultitimeError, ValueError):
    pass


class IndexOutOfRange(MultitimeError, IndexError):
    pass


class PathStartMismatch(MultitimeError, ValueError):
    pass


class EndpointMismatch(MultitimeError, ValueError):
    pass


class NotHermitian(MultitimeError, ValueError):
    pass


class TrivialPartition(MultitimeError, ValueError):
    pass


class ResolventSingular(MultitimeError, ArithmeticError):
    pass


class NotInSubspace(MultitimeError, ValueError):
    pass


class NotNormalized(MultitimeError, ValueError):
    pass


class ParseError(MultitimeError, ValueError):
    pass


class SchemaError(MultitimeError, ValueError):
    pass


class GateRefusal(MultitimeError):
    pass
