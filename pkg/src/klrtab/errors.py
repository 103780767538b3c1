class DomainError(ValueError):
    """An input lies outside the domain of an operation."""


class ReconstructionError(DomainError):
    """Partition data does not come from any semistandard tableau."""


class NoDescentError(DomainError):
    """Raised for a highest weight element, which has no raising step."""
