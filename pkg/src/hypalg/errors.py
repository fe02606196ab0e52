"""Shared exception types."""


class HypergraphError(ValueError):
    """Invalid hypergraph construction or malformed operation argument."""


class PreconditionError(HypergraphError):
    """An operation precondition was violated by the caller."""


class ResourceLimitError(RuntimeError):
    """An enumeration bound was exceeded; we refuse rather than truncate."""
