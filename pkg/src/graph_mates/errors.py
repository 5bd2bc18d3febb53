"""Typed errors raised by the census engine."""

from typing import Optional


class GraphMatesError(Exception):
    """Base class for every data error the package raises."""


class MalformedGraph6(GraphMatesError):
    """A graph6 record could not be decoded."""

    def __init__(self, message: str, record: Optional[bytes] = None):
        self.record = record
        self.reason = message
        if record is not None:
            message = f"{message} (record {record!r})"
        super().__init__(message)

    def __reduce__(self):
        return type(self), (self.reason, self.record)


class UnsupportedGraph(GraphMatesError):
    """The graph is outside what the short graph6 form can carry."""


class DisconnectedGraph(GraphMatesError):
    """A distance-based quantity was requested for a disconnected graph."""

    def __init__(self, graph6: Optional[str] = None):
        self.graph6 = graph6
        message = "graph is disconnected; distances and transmissions are undefined"
        if graph6:
            message = f"{message} ({graph6})"
        super().__init__(message)

    def __reduce__(self):
        return type(self), (self.graph6,)


class InternalDivisionInexact(GraphMatesError):
    """Faddeev-LeVerrier hit a non-exact division. Indicates a bug, never bad input."""


class TooLarge(GraphMatesError):
    """The requested order exceeds what an exhaustive routine supports."""


class MixedOrder(GraphMatesError):
    """A census stream contained graphs of different orders."""

    def __init__(self, expected: int, found: int):
        self.expected = expected
        self.found = found
        super().__init__(f"stream mixes orders: expected n={expected}, found n={found}")

    def __reduce__(self):
        return type(self), (self.expected, self.found)


class MembersNotCollected(GraphMatesError):
    """Mate classes were requested from a census run without member collection."""


class CensusConfigError(GraphMatesError):
    """Inconsistent census configuration."""


class UnknownInvariant(GraphMatesError, ValueError):
    """An invariant or matrix token did not parse."""
