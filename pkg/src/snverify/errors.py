"""Exception hierarchy shared by all modules.

Each exception maps to a CLI exit code; see cli.py.
"""


class SnverifyError(Exception):
    """Base class for all library errors."""

    exit_code = 1


class InvalidArgumentError(SnverifyError):
    """Malformed or out-of-domain input."""

    exit_code = 2


class DegenerateInputError(InvalidArgumentError):
    """Input is structurally valid but degenerate (e.g. zero component)."""


class ResourceLimitError(SnverifyError):
    """A size cap would be exceeded; the message names the bound."""

    exit_code = 3


class NumericalConsistencyError(SnverifyError):
    """A quantity that must be integral (or otherwise exact) drifted
    beyond tolerance; signals a bug rather than a rounding choice."""

    exit_code = 4
