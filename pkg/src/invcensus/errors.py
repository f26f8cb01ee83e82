"""Exception types shared across the package."""


class InvcensusError(Exception):
    """Base class for all errors raised by this package."""


class PartitionParseError(InvcensusError, ValueError):
    """Malformed partition text."""


class WeightMismatchError(InvcensusError, ValueError):
    """Partitions that must partition the same integer do not."""


class ConsistencyError(InvcensusError, RuntimeError):
    """An exactness check failed; signals a bug, not bad input."""


class ResourceLimitError(InvcensusError, RuntimeError):
    """A computation was refused because it exceeds a configured size limit."""


class SeriesFormatError(InvcensusError, ValueError):
    """Malformed series document or file."""
