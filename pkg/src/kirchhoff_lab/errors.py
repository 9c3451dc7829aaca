"""Typed errors shared across the package."""


class KirchhoffError(Exception):
    """Base class for all errors raised by kirchhoff_lab."""


class DuplicateLabel(KirchhoffError):
    pass


class UnknownLabel(KirchhoffError):
    pass


class NonPositiveResistance(KirchhoffError):
    pass


class SelfLoop(KirchhoffError):
    pass


class ParseError(KirchhoffError):
    pass


class NonIntegerMatrix(KirchhoffError):
    pass


class ConvergenceFailure(KirchhoffError):
    pass


class SingularShift(KirchhoffError):
    """The shifted Laplacian L + J/n failed to invert; the graph is disconnected."""


class Disconnected(KirchhoffError):
    pass


class SameVertex(KirchhoffError):
    pass


class NotATree(KirchhoffError):
    pass


class SingularA(KirchhoffError):
    pass


class NotSymmetricBlocks(KirchhoffError):
    pass


class NotYangYuForm(KirchhoffError):
    pass


class InvalidParameter(KirchhoffError):
    pass
