"""Laplacian matching polynomial CLI Exceptions."""

from __future__ import annotations

import json
from typing import IO, Any, Dict, Optional

import click
from click import ClickException


class LapPolyException(ClickException):
    """Base lappoly exception."""

    def __init__(
        self: LapPolyException, message: str, payload: Optional[Dict[str, Any]] = None
    ) -> None:
        """
        Initialize a LapPolyException.

        Args:
            message: The human-readable error message.
            payload: Extra machine-readable data to include in the error object.
        """
        super().__init__(message)
        self.payload: Dict[str, Any] = payload or {}

    def to_dict(self: LapPolyException) -> Dict[str, Any]:
        """
        Convert the exception to the JSON error object printed by the CLI.

        Returns:
            The error object.
        """
        return {
            **self.payload,
            "error": type(self).__name__,
            "message": self.format_message(),
        }

    def show(self: LapPolyException, file: Optional[IO[Any]] = None) -> None:
        """
        Print the machine-readable error object to stderr.

        Args:
            file: Where to write the error object. Defaults to stderr.
        """
        click.echo(json.dumps(self.to_dict(), sort_keys=True), file=file, err=True)


class InputException(LapPolyException):
    """Exception thrown for unusable input: bad graph text, bad parameters."""

    exit_code = 1


class MalformedGraph6(InputException):
    """The graph6 string could not be decoded."""

    pass


class MalformedEdgeList(InputException):
    """An edge-list line could not be parsed."""

    pass


class EndpointOutOfRange(InputException):
    """An edge endpoint is not a vertex of the graph."""

    pass


class DuplicateEdge(InputException):
    """The same edge appears twice."""

    pass


class LoopEdge(InputException):
    """An edge joins a vertex to itself."""

    pass


class BadParameter(InputException):
    """A generator or CLI parameter is out of range."""

    pass


class VertexOutOfRange(InputException):
    """A vertex set mentions a vertex the graph does not have."""

    pass


class NonpositiveWeight(InputException):
    """An edge weight is zero or negative."""

    pass


class NotSquare(InputException):
    """A characteristic polynomial was requested for a non-square matrix."""

    pass


class NotSymmetric(InputException):
    """A spectrum was requested for a non-symmetric matrix."""

    pass


class PreconditionException(LapPolyException):
    """
    Exception thrown when a check does not apply to its input graph.

    `verify` and `batch` report these as skips rather than failures.
    """

    exit_code = 1


class NotConnected(PreconditionException):
    """The check requires a connected graph."""

    pass


class NoEdges(PreconditionException):
    """The check requires at least one edge."""

    pass


class TooLarge(PreconditionException):
    """The graph is beyond the size an enumeration-heavy check accepts."""

    pass


class MinDegreeNotOne(PreconditionException):
    """The check requires minimum degree 1."""

    pass


class MaxDegreeTooSmall(PreconditionException):
    """The check requires maximum degree at least 2."""

    pass


class NotTreeOrUnicyclic(PreconditionException):
    """The check requires a tree or a connected unicyclic graph."""

    pass


class NotTuSubgraph(PreconditionException):
    """Some component of the edge set has more edges than vertices."""

    pass


class VertexNotInH(PreconditionException):
    """The deleted vertex is not a member of the vertex set H."""

    pass


class DegreeMismatch(PreconditionException):
    """Interlacing needs root lists whose sizes differ by exactly one."""

    pass


class LengthMismatch(PreconditionException):
    """Majorization needs sequences of equal length."""

    pass


class VerificationException(LapPolyException):
    """Exception thrown when a guaranteed identity or property does not hold."""

    exit_code = 2


class NotDivisible(VerificationException):
    """The polynomial is not divisible by the requested power of x."""

    pass


class OddCoefficientPresent(VerificationException):
    """The polynomial has a nonzero odd-power coefficient."""

    pass


class NotRealRooted(VerificationException):
    """The Sturm count of real roots is smaller than the degree."""

    pass


class InternalInvariantViolation(VerificationException):
    """An internal invariant that a theorem guarantees was violated."""

    pass


class VerificationFailed(VerificationException):
    """One or more checks failed; the payload carries the counterexample."""

    pass
