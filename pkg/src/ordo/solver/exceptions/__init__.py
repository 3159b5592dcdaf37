from .exceptions import (
    BadEntryError,
    CycleError,
    DimensionMismatchError,
    DisconnectedMapError,
    DuplicateEndpointError,
    FixtureFormatError,
    InfeasibleParametersError,
    InvalidInstanceError,
    MalformedHeaderError,
    OrdoError,
    RefusedTooLargeError,
    SolverTimeoutError,
)

__all__ = [
    "OrdoError",
    "DisconnectedMapError",
    "CycleError",
    "MalformedHeaderError",
    "DimensionMismatchError",
    "BadEntryError",
    "DuplicateEndpointError",
    "InfeasibleParametersError",
    "RefusedTooLargeError",
    "InvalidInstanceError",
    "FixtureFormatError",
    "SolverTimeoutError",
]
