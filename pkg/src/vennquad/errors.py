"""Exception hierarchy shared across the package."""


class VennError(Exception):
    """Base class for all package-specific errors."""


class NotHypercubeEdge(VennError):
    """Two labels do not differ in exactly one bit."""


class NotLexMin(VennError):
    """Type sequence is not in first-occurrence relabeled form."""


class DimensionTooSmall(VennError):
    pass


class BadLabelLength(VennError):
    pass


class NotSpanning(VennError):
    pass


class NotConnected(VennError):
    pass


class NonQuadFace(VennError):
    """A traced face is not a 4-cycle; carries the offending face."""

    def __init__(self, face):
        super().__init__(f"face of length {len(face)} is not a quadrilateral: {face}")
        self.face = face


class HalfspaceDisconnected(VennError):
    """Vertices with bit i = b induce a disconnected subgraph."""

    def __init__(self, i, b):
        super().__init__(f"subgraph induced by bit {i} = {b} is disconnected")
        self.position = i
        self.bit = b


class BrokenEmbedding(VennError):
    """Rotation system does not describe a sphere embedding."""


class BoundaryMismatch(VennError):
    pass


class NotBipartite(VennError):
    pass


class HasPerfectMatching(VennError):
    pass


class NotHamiltonian(VennError):
    pass


class NotALadder(VennError):
    pass


class NotDisjoint(VennError):
    pass


class NoViolatorFound(VennError):
    pass


class NotIndependent(VennError):
    pass


class InconsistentSignature(VennError):
    pass


class MalformedGraph6(VennError):
    pass


class LabelRecoveryFailed(VennError):
    pass


class MalformedBinary(VennError):
    pass


class VersionMismatch(VennError):
    pass


class MissingPriorCensus(VennError):
    pass


class StageDependencyError(VennError):
    pass
