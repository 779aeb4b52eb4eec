"""Exception types shared across the package."""


class UserInputError(ValueError):
    """Invalid input supplied by the caller (bad instance, bad format)."""


class InternalCheckError(RuntimeError):
    """A consistency assertion failed; indicates a bug or an input that
    slipped past validation, never a condition the caller should handle."""
