"""Exception types shared across the package."""


class InputError(Exception):
    """Malformed or inconsistent user input: files, tables, scalar literals."""


class NoFactorization(Exception):
    """A map does not factor through the given monomorphism."""


class NotInvertible(Exception):
    """A map expected to be invertible is not."""


class InducedMapMismatch(Exception):
    """A coaction is not reproduced by the comonoid map extracted from it."""


class CheckFailed(Exception):
    """A structural law that a construction relies on does not hold.

    Carries the report of the failed check when one is available.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class EqualizingConditionFails(CheckFailed):
    """A map handed to an equalizer's universal property does not equalize."""
