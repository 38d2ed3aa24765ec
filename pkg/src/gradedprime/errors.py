"""Exception types shared across the package."""


class SpecError(ValueError):
    """Malformed or invalid input: spec text, raw tables, gradings, filters."""


class CapError(RuntimeError):
    """A configured resource cap would be exceeded; nothing was truncated."""
