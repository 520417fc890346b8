class DomainError(ValueError):
    """Argument outside the domain of the function (e.g. on the branch cut)."""
