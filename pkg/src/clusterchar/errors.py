"""Exception hierarchy shared across the package.

Three failure classes matter to callers (and map to CLI exit codes):
input problems (`InputError`, exit 2), violated internal cross-checks
(`ConsistencyError`, exit 3), and exhausted resource caps
(`ResourceLimitError`, exit 3).  A failed *verification* is a result,
not an exception.
"""


class ClusterCharError(Exception):
    """Base class for all package errors."""


class DimensionError(ClusterCharError):
    """Operands live in different ambient spaces (variable counts, shapes)."""


class InputError(ClusterCharError):
    """Malformed file, unknown name, or data violating a format contract."""


class AlgebraBuildError(InputError):
    """The presented algebra is invalid or not finite-dimensional at the cap."""


class ConsistencyError(ClusterCharError):
    """Two independent computations of the same quantity disagree.

    Reaching this signals a bug (or a convention mismatch in input data),
    never a legitimate mathematical outcome.
    """


class NonPolynomialCountError(ClusterCharError):
    """Point counts failed the polynomial-interpolation verification."""


class LaurentDivisionError(ClusterCharError):
    """Exact Laurent division left a nonzero remainder."""


class ResourceLimitError(ClusterCharError):
    """A configured enumeration budget or cap was exceeded."""


class NotFiniteTypeError(ResourceLimitError):
    """Seed enumeration did not close up within the seed cap."""
