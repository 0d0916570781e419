"""Exception hierarchy shared across the engine."""


class CatQueryError(Exception):
    """Base class for all errors raised by this package."""


class KindError(CatQueryError):
    """Cross-kind value comparison, or a value used where another kind is required."""


class CategoryError(CatQueryError):
    """Unknown names or structurally invalid data in an instance category."""


class RelationError(CatQueryError):
    """Malformed relation or incompatible relation arguments to an operator."""


class ParseError(CatQueryError):
    """Syntax error in a calculus query, with source position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class SafetyError(CatQueryError):
    """A query failed the range-restriction checks (carries the violation list)."""

    def __init__(self, violations):
        super().__init__("; ".join(violations))
        self.violations = list(violations)


class NormalizeError(CatQueryError):
    """Normalization failure, e.g. the DNF clause-count guard tripped."""


class CompileError(CatQueryError):
    """The reduction algorithm rejected the query or produced an ill-typed plan."""


class EvalError(CatQueryError):
    """Runtime failure while evaluating a plan; names the offending node."""


class EnumerationLimitError(CatQueryError):
    """Oracle enumeration would exceed the configured bound."""


class StorageError(CatQueryError):
    """A data file could not be loaded, with file/path context."""
