"""Exception hierarchy shared by every module."""


class LabError(Exception):
    pass


class TableFormatError(LabError):
    """Malformed table file; carries the 1-based line and column of the fault."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class NotApplicable(LabError):
    """The hypotheses of a check are not met, which is distinct from the check failing."""


class CategoryError(NotApplicable):
    """A morphism whose codomain is not a group."""


class BudgetExceeded(LabError):
    pass


class QuotientError(LabError):
    """Coset partition or induced product is ill-defined; ``witness`` shows where."""

    def __init__(self, message: str, witness: tuple):
        super().__init__(message)
        self.witness = witness
