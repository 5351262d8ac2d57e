class ParameterError(ValueError):
    """Invalid parameters or malformed input."""


class DomainError(ArithmeticError):
    """An operation was applied outside its mathematical domain."""
