from typing import Any, Optional


class OrdoError(Exception):
    def __init__(
        self,
        message: str,
        error_code: Optional[str] = None,
        details: Optional[Any] = None,
    ):
        super().__init__(message)
        self.message = message
        self.error_code = error_code
        self.details = details

    def __str__(self) -> str:
        if self.error_code:
            return f"[{self.error_code}] {self.message}"
        return self.message


class DisconnectedMapError(OrdoError):
    def __init__(
        self,
        message: str = "Graph is not connected",
        components: Optional[int] = None,
    ):
        super().__init__(message, error_code="DISCONNECTED_MAP")
        self.components = components


class CycleError(OrdoError):
    def __init__(self, lo: int, hi: int):
        super().__init__(
            f"Adding {lo} < {hi} would create a cycle: {hi} already precedes {lo}",
            error_code="ORDERING_CYCLE",
        )
        self.lo = lo
        self.hi = hi


class MalformedHeaderError(OrdoError):
    def __init__(self, message: str, line: Optional[int] = None):
        super().__init__(message, error_code="MALFORMED_HEADER")
        self.line = line


class DimensionMismatchError(OrdoError):
    def __init__(self, message: str, expected: Any = None, found: Any = None):
        super().__init__(message, error_code="DIMENSION_MISMATCH")
        self.expected = expected
        self.found = found


class BadEntryError(OrdoError):
    def __init__(self, message: str, line: Optional[int] = None):
        super().__init__(message, error_code="BAD_ENTRY")
        self.line = line


class DuplicateEndpointError(OrdoError):
    def __init__(self, message: str, vertex: Optional[str] = None):
        super().__init__(message, error_code="DUPLICATE_ENDPOINT")
        self.vertex = vertex


class InfeasibleParametersError(OrdoError):
    def __init__(self, message: str, attempts: Optional[int] = None):
        super().__init__(message, error_code="INFEASIBLE_PARAMETERS")
        self.attempts = attempts


class RefusedTooLargeError(OrdoError):
    def __init__(self, num_agents: int, max_agents: int):
        super().__init__(
            f"Refusing to enumerate {num_agents}! orderings (limit is {max_agents} agents)",
            error_code="REFUSED_TOO_LARGE",
        )
        self.num_agents = num_agents
        self.max_agents = max_agents


class InvalidInstanceError(OrdoError):
    def __init__(self, message: str, field: Optional[str] = None):
        super().__init__(message, error_code="INVALID_INSTANCE")
        self.field = field


class FixtureFormatError(OrdoError):
    def __init__(self, message: str, line: Optional[int] = None):
        super().__init__(message, error_code="FIXTURE_FORMAT")
        self.line = line


class SolverTimeoutError(OrdoError):
    def __init__(self, elapsed: float, limit: float):
        super().__init__(
            f"Time limit of {limit:.2f}s exceeded after {elapsed:.2f}s",
            error_code="TIMEOUT",
        )
        self.elapsed = elapsed
        self.limit = limit
