"""
Custom exceptions for the ordo command-line tool.

Every exception carries the process exit code the CLI terminates with. They
derive from ``click.ClickException`` so click prints them and exits with that
code whether the command runs from ``cli_main`` or from a test runner.
"""

from typing import Optional

import click

EXIT_SOLVED = 0
EXIT_ERROR = 1
EXIT_NO_SOLUTION = 2
EXIT_TIMEOUT = 3
EXIT_INVALID_SOLUTION = 4


class BenchException(click.ClickException):
    """Base exception for all CLI errors."""

    def __init__(self, message: str, exit_code: int = EXIT_ERROR) -> None:
        super().__init__(message)
        self.message = message
        self.exit_code = exit_code


class ConfigurationError(BenchException):
    """Raised when an experiment config file or option is invalid."""

    def __init__(self, message: str, config_file: Optional[str] = None) -> None:
        if config_file:
            full_message = f"Configuration error in '{config_file}': {message}"
        else:
            full_message = f"Configuration error: {message}"
        super().__init__(full_message, exit_code=EXIT_ERROR)


class InstanceLoadError(BenchException):
    """Raised when a map, scenario, fixture or solution file cannot be loaded."""

    def __init__(self, path: str, reason: str) -> None:
        super().__init__(f"Cannot load '{path}': {reason}", exit_code=EXIT_ERROR)
        self.path = path


class ValidationError(BenchException):
    """Raised when a solution file does not solve its instance."""

    def __init__(self, what: str, reason: str) -> None:
        message = f"Validation failed for {what}: {reason}"
        super().__init__(message, exit_code=EXIT_INVALID_SOLUTION)


def handle_exception(exc: BaseException) -> int:
    """Exit code for an exception that escaped a command."""
    if isinstance(exc, click.ClickException):
        return exc.exit_code if isinstance(exc, BenchException) else EXIT_ERROR
    if isinstance(exc, (KeyboardInterrupt, click.Abort)):
        return 130
    return EXIT_ERROR
