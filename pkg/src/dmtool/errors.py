"""Exception hierarchy shared by all dmtool modules."""


class DmtoolError(Exception):
    """Base class for every error raised by the library."""


class FieldError(DmtoolError, ValueError):
    """Domain error in field arithmetic (e.g. inverse of zero, bad automorphism)."""


class PivotError(DmtoolError, ValueError):
    """The principal submatrix selected for a pivot is singular."""

    def __init__(self, subset):
        self.subset = tuple(subset)
        super().__init__(f"principal submatrix on {{{' '.join(map(str, self.subset))}}} is singular")


class SubsetError(DmtoolError, ValueError):
    """A subset or element does not belong to the ground set."""


class CapacityError(DmtoolError, ValueError):
    """The requested enumeration exceeds the supported ground-set size."""


class CapacityWarning(UserWarning):
    """An enumeration is large enough to be slow."""


class ValidationError(DmtoolError, ValueError):
    """A family of sets fails the matroid / delta-matroid axioms."""


class NotVfSafeError(DmtoolError, ValueError):
    """A computation certified that its input is not a vf-safe delta-matroid."""


class RepresentationError(DmtoolError, ValueError):
    """A matrix representation is required but missing or inconsistent."""


class ParseError(DmtoolError, ValueError):
    def __init__(self, message, line=None, path=None):
        self.line = line
        self.path = path
        where = ""
        if path is not None:
            where += f"{path}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}".strip())
