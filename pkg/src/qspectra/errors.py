"""Exception types shared across the library."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class PoleError(ValueError):
    """An evaluation point coincides with, or sits too close to, a pole."""


class UnsupportedModelError(ValueError):
    """A transformation would leave the family of supported model spectra."""
