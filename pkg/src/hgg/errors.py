"""Exception hierarchy shared by every module of the toolkit."""


class HggError(Exception):
    """Base class for all toolkit errors."""


class NotGaloisClosed(HggError):
    pass


class NotCyclotomicProduct(HggError):
    pass


class SharedEntry(HggError):
    pass


class InvalidPair(HggError):
    pass


class ZeroDifference(HggError):
    pass


class NotMonic(HggError):
    pass


class Singular(HggError):
    pass


class UnboundName(HggError):
    pass


class OrbitDegenerate(HggError):
    pass


class InvarianceFailed(HggError):
    pass


class SolutionSpaceNotLine(HggError):
    pass


class Degenerate(HggError):
    pass


class UnknownLabel(HggError):
    pass


class ParseError(HggError):
    """Malformed textual input; carries a 1-based line and column."""

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(message + where)
