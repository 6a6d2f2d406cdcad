"""Exception hierarchy shared by all modules."""


class Cell24Error(Exception):
    """Base class for every error raised by this package."""


class ParseError(Cell24Error):
    def __init__(self, message, line=None, source=None):
        self.line = line
        self.source = source
        where = []
        if source:
            where.append(str(source))
        if line is not None:
            where.append(f"line {line}")
        prefix = ":".join(where)
        super().__init__(f"{prefix}: {message}" if prefix else message)


class ValidationError(Cell24Error):
    """Input data parsed but violates a structural rule."""


class UnknownVertexError(Cell24Error):
    pass


class NotSidePreservingError(Cell24Error):
    pass


class CycleError(Cell24Error):
    """Ridge cycle failed to close, or its relator moved a vertex."""


class CuspError(Cell24Error):
    """Internal inconsistency or non-crystallographic data in a cusp."""


class FibreError(Cell24Error):
    def __init__(self, message, failures=()):
        self.failures = tuple(failures)
        super().__init__(message)
