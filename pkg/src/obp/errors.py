"""Exception types shared across the package."""

from __future__ import annotations


class ObpError(Exception):
    """Base class for all package-specific errors."""


class ParseError(ObpError):
    """An instance file could not be parsed or validated."""


class TopStrandMissing(ObpError):
    """The top strand of a block does not occur in its orbit."""


class BottomStrandMissing(ObpError):
    """The bottom strand of a block does not occur in its orbit."""


class NotIrreducible(ObpError):
    """The transition matrix is not irreducible."""


class NoConvergence(ObpError):
    """Power iteration did not converge within the iteration cap."""


class InadmissibleInstance(ObpError):
    """A pipeline step that needs an admissible instance received one that is not."""


class NotRightAdmissible(ObpError):
    """Geometry was requested on data that is not right-admissible."""


class InconsistentY(ObpError):
    """The doubly-defined horizontal edge lengths disagree beyond tolerance."""


class NonIntegerGenus(ObpError):
    """The singularity multiplicities sum to an odd number."""


class OutOfChart(ObpError):
    """A surface point lies outside its rectangle."""


class EmptySearchSpace(ObpError):
    """A search range contains no admissible instance."""
