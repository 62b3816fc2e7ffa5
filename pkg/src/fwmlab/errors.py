"""Exception types shared across the package."""


class FwmlabError(Exception):
    """Base class for all package errors."""


class DomainError(FwmlabError, ValueError):
    """A physical quantity is outside the range the model supports."""


class ConfigError(FwmlabError, ValueError):
    """A configuration file, key, or value is invalid."""


class NumericsError(FwmlabError, RuntimeError):
    """A numerical computation produced non-finite values."""
