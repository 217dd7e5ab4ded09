"""Exception hierarchy shared by every module of the package."""


class CosetPosetError(ValueError):
    """Base class for all errors raised by :mod:`cosetposet`."""


class LengthMismatch(CosetPosetError):
    pass


class RankDeficient(CosetPosetError):
    """The generator rows are linearly dependent over GF(2).

    ``row`` holds the 1-based index of the first row that lies in the span of
    the rows before it, when known.
    """

    def __init__(self, message: str, row: int | None = None):
        super().__init__(message)
        self.row = row


class NotStandardForm(CosetPosetError):
    pass


class NotProperSubspace(CosetPosetError):
    pass


class TooLarge(CosetPosetError):
    pass


class TableMismatch(CosetPosetError):
    pass


class Disconnected(CosetPosetError):
    pass


class SizeMismatch(CosetPosetError):
    pass


class ParseError(CosetPosetError):
    def __init__(self, message: str, line: int, column: int | None = None):
        where = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{where}: {message}")
        self.line = line
        self.column = column


class BudgetExceeded(CosetPosetError):
    pass
