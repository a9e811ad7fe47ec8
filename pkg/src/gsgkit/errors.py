"""Exception hierarchy shared by all gsgkit modules."""


class GsgError(Exception):
    """Base class for all gsgkit errors."""


class ParameterError(GsgError, ValueError):
    """A constructor or analysis parameter violates its documented range."""


class SizeError(GsgError, ValueError):
    """Input exceeds a hard size cap (dense storage, enumeration explosion)."""


class DomainError(GsgError, ValueError):
    """The operation is only defined for a narrower class of graphs."""


class ContractError(GsgError, ValueError):
    """Input breaks a numerical precondition, e.g. a non-symmetric matrix."""


class InsufficientSpectrumError(GsgError, ValueError):
    """Fewer eigenvalues than the requested quantity needs."""


class DisconnectedGraphError(DomainError):
    """The graph is disconnected where connectivity is required."""


class NotAvailableError(GsgError, LookupError):
    """No closed form (or constructor) exists for the requested family."""


class ConvergenceError(GsgError, RuntimeError):
    """An iterative routine hit its iteration cap."""


class ParseError(GsgError, ValueError):
    """Malformed graph file content.

    ``line`` and ``offset`` locate the problem when known (1-based line,
    0-based byte offset within the line).
    """

    def __init__(self, message, *, line=None, offset=None, source=None):
        self.line = line
        self.offset = offset
        self.source = source
        where = []
        if source is not None:
            where.append(str(source))
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"byte {offset}")
        prefix = ", ".join(where)
        super().__init__(f"{prefix}: {message}" if prefix else message)
