"""Exception types shared across the package."""


class CoalitionsError(Exception):
    """Base class for all package-specific errors."""


class Graph6Error(CoalitionsError):
    """Malformed or unsupported graph6 input/output."""


class InadmissibleModeError(CoalitionsError):
    """The graph's minimum degree is too small for the requested mode."""


class NotConnectedError(CoalitionsError):
    """An operation that requires a connected graph got a disconnected one."""


class GuardExceededError(CoalitionsError):
    """Instance size exceeds an exact-search guard (pass force=True to override)."""


class ConstructionError(CoalitionsError):
    """Family/partition construction parameters out of range, or a construction
    failed its own verification."""


class CertificationError(CoalitionsError):
    """A certificate's lower bound exceeded its upper bound; this signals either
    an implementation bug or a refuted theorem and must never be swallowed."""


class SolveError(CoalitionsError):
    """The exact solver could not produce a value (e.g. no coalition partition
    exists for the instance)."""


class FixtureError(CoalitionsError):
    """A shipped fixture file failed its validation on load."""
