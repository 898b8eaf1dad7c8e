"""Exception types raised across the package."""


class UcycleError(Exception):
    pass


class DuplicateValue(UcycleError, ValueError):
    pass


class LengthMismatch(UcycleError, ValueError):
    pass


class InvalidPerm(UcycleError, ValueError):
    pass


class InvalidLabel(UcycleError, ValueError):
    pass


class NotLinkableLabels(UcycleError, ValueError):
    pass


class NotATree(UcycleError, ValueError):
    pass


class BaseCaseNotFound(UcycleError):
    pass


class InvalidCopyIndex(UcycleError, ValueError):
    pass


class InductionInvariantViolated(UcycleError):
    """The inductive surgery hit a missing vertex, leaf or edge. Always a bug."""


class UnsupportedN(UcycleError, ValueError):
    pass


class SplicePositionClash(UcycleError):
    pass


class CycleMergeFailure(UcycleError):
    pass
