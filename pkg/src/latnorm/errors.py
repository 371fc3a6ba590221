"""Exception hierarchy shared by every module."""


class LatticeError(Exception):
    pass


# construction / validation
class DuplicateLabel(LatticeError):
    pass


class UnknownLabel(LatticeError):
    def __init__(self, message, line=None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class CycleDetected(LatticeError):
    pass


class NotALattice(LatticeError):
    pass


class IntervalEmpty(LatticeError):
    pass


class NotACoveringSquare(LatticeError):
    pass


# operation tables
class LatticeMismatch(LatticeError):
    pass


class SubsetSweepTooLarge(LatticeError):
    pass


class NotAnOrdinalCut(LatticeError):
    pass


class PreconditionFailed(LatticeError):
    def __init__(self, clause, message):
        super().__init__(f"{clause}: {message}")
        self.clause = clause


class PostVerificationFailed(LatticeError):
    pass


# search / enumeration
class TooLarge(LatticeError):
    pass


# file formats
class LatSyntaxError(LatticeError):
    def __init__(self, message, line=None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class ShapeMismatch(LatticeError):
    pass
