"""Exception taxonomy shared across the package.

The CLI maps these onto exit codes: CapacityError -> 2, DomainError -> 3,
ParseError -> 4.
"""


class BoxprimeError(Exception):
    """Base class for all package errors."""


class CapacityError(BoxprimeError):
    """A request exceeds a configured size limit (enumeration order, horizon, ...)."""


class DomainError(BoxprimeError):
    """Input is structurally invalid for the operation (disconnected, empty, ...)."""


class ParseError(BoxprimeError):
    """Malformed textual input (graph6 strings, range expressions)."""
