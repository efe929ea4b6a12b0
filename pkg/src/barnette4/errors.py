"""Exception hierarchy shared by all modules."""


class Barnette4Error(Exception):
    """Base class for every error raised by this package."""


class ParseError(Barnette4Error, ValueError):
    pass


# planar_core
class GraphError(Barnette4Error, ValueError):
    pass


class NonSimple(GraphError):
    pass


class NotSymmetric(GraphError):
    pass


class NotConnected(GraphError):
    pass


class NotPlanarEmbedding(GraphError):
    pass


class DualNotSimple(GraphError):
    pass


class InducedCycleViolation(GraphError):
    pass


class NotThreeConnected(GraphError):
    pass


# e4_membership
class NotThreeColourable(GraphError):
    pass


class NoAllDegree4Class(GraphError):
    pass


# alpha_generator
class InvalidAlphaTriple(GraphError):
    pass


# tree_pair
class NotAPath(GraphError):
    pass


class CenterIsRed(GraphError):
    pass


class SeedConflict(Barnette4Error):
    pass


class DistanceViolation(Barnette4Error, ValueError):
    pass


class NotClosedInput(Barnette4Error, ValueError):
    pass


class ExtensionFailure(Barnette4Error):
    """Acyclicity broke while extending a closed pair.

    Means the red placement rule failed on a closed pair; never expected.
    """


# stein_duality
class DegreeViolation(Barnette4Error):
    pass


class NotHamiltonian(Barnette4Error, ValueError):
    pass


# oracle
class CapExceeded(Barnette4Error):
    pass


class PipelineFailure(Barnette4Error):
    def __init__(self, stage: str, message: str):
        super().__init__(f"[{stage}] {message}")
        self.stage = stage
