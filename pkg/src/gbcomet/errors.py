"""Exception types shared across the package."""


class OutOfRangeError(ValueError):
    """A value lies outside the range a table or record set covers."""


class DomainError(ValueError):
    """An argument is outside the mathematical domain of a function."""


class NumericError(ArithmeticError):
    """A numeric routine encountered a non-finite or unusable value."""


class FormatError(ValueError):
    """A file or CSV payload does not match the expected schema."""
