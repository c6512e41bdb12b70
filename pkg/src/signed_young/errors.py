"""Exception hierarchy shared by every module of the package."""


class SignedYoungError(Exception):
    """Base class for all package errors."""


class PartitionError(SignedYoungError, ValueError):
    """A sequence is not a partition (negative or increasing parts)."""


class SizeMismatchError(SignedYoungError, ValueError):
    """Two partitions that must have equal size do not."""


class ModulusError(SignedYoungError, ValueError):
    """The modulus is out of range (p < 2, or not prime where a field is needed)."""


class ConfigurationError(SignedYoungError, ValueError):
    """Bad abacus bead count or similar configuration."""


class DomainError(SignedYoungError, ValueError):
    """Input lies outside the domain of the operation."""


class PreconditionError(SignedYoungError, ValueError):
    """A documented precondition is violated."""


class NotDecomposableError(PreconditionError):
    """A Rouquier-block partition has a nonempty middle quotient component."""


class DimensionMismatchError(SignedYoungError, ValueError):
    """Matrix or representation dimensions are incompatible."""


class InconclusiveError(SignedYoungError):
    """A bounded search ran out of budget without reaching a verdict."""


class InternalConsistencyError(SignedYoungError, AssertionError):
    """A theorem-backed runtime assertion failed; signals a convention bug."""
