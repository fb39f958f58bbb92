class AxilabError(Exception):
    """Base class for every error raised by axilab."""


class DimensionError(AxilabError):
    pass


class FieldMismatch(AxilabError):
    pass


class UnsupportedCharacteristic(AxilabError):
    pass


class InvalidSpectrum(AxilabError):
    pass


class NotIdempotent(AxilabError):
    pass


class NotAnAxis(AxilabError):
    pass


class TypeShapeError(AxilabError):
    """Declared type has more than one eigenvalue on a side."""


class SingularMatrix(AxilabError):
    pass


class HypothesisFailure(AxilabError):
    """A theorem's hypothesis does not hold, so nothing is asserted."""

    def __init__(self, clause, message=None):
        self.clause = clause
        super().__init__(message or f"hypothesis not met: {clause}")


class BadParams(AxilabError):
    pass


class SearchSpaceTooLarge(AxilabError):
    pass


class RationalsUnsupported(AxilabError):
    """Exhaustive search was requested over Q."""


class ParseError(AxilabError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}: "
        if column is not None:
            where += f"column {column}: "
        super().__init__(where + message)
