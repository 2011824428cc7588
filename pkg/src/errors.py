"""
Errors - Exception Hierarchy of the Workbench
=============================================

Every failure the library can raise derives from WorkbenchError, so the
command line can map them onto exit codes in one place.
"""


class WorkbenchError(Exception):
    """Base class for all workbench failures."""


class RingMismatchError(WorkbenchError):
    """Operands live in different intersection rings."""


class NonHomogeneousError(WorkbenchError):
    """A polynomial handed to a degree evaluator is not homogeneous."""


class InconsistentChernDataError(WorkbenchError):
    """Chern data produced a non-integral Euler characteristic or class."""


class NotExceptionalError(WorkbenchError):
    """A mutation was requested across a class with chi(e, e) != 1."""


class KClassError(WorkbenchError):
    """A class does not lie in the requested integer lattice."""


class UnknownBundleError(WorkbenchError):
    """A bundle name is missing from the catalog."""


class BundleSpecError(WorkbenchError):
    """A bundle spec string could not be parsed."""


class RepresentationError(WorkbenchError):
    """Kronecker maps have the wrong shape or could not be read."""


class ResolutionFailure(WorkbenchError):
    """A resolution in a strict suite run did not validate."""

    def __init__(self, case_id: str, message: str):
        super().__init__(f"{case_id}: {message}")
        self.case_id = case_id


class LinesRingMismatch(WorkbenchError):
    """A lines-ring identity did not hold."""

    def __init__(self, check: str, message: str):
        super().__init__(f"{check}: {message}")
        self.check = check
