"""Exception types shared across the package."""


class SetLiteralError(ValueError):
    """A set literal string could not be parsed."""


class RangeError(ValueError):
    """An exhaustive-enumeration parameter exceeds its desk-scale cap."""
