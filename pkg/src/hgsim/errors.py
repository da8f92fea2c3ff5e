"""Shared exception types."""


class FormatError(ValueError):
    """A text input does not conform to one of the package file formats."""
