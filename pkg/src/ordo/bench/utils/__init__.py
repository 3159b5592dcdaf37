from .console import configure_logging, get_console
from .exceptions import (
    BenchException,
    ConfigurationError,
    InstanceLoadError,
    ValidationError,
)

__all__ = [
    "BenchException",
    "ConfigurationError",
    "InstanceLoadError",
    "ValidationError",
    "configure_logging",
    "get_console",
]
