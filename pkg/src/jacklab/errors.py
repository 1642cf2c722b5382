"""Exception hierarchy shared by all jacklab modules."""


class JacklabError(Exception):
    pass


class DomainError(JacklabError, ValueError):
    """An argument lies outside the domain of the operation."""


class DegreeOverflowError(DomainError):
    pass


class NotInSpanError(DomainError):
    pass


class ResourceError(JacklabError):
    """A requested enumeration exceeds its configured bound."""


class InternalInconsistencyError(JacklabError):
    """Two exact computations that must agree did not.

    This signals an arithmetic or logic bug and should never fire.
    """
