"""Exception types shared across the package."""


class GraphError(Exception):
    """Base class for every error raised by this package."""


class LoopEdgeError(GraphError):
    """An edge was given two identical endpoints."""


class VertexOutOfRangeError(GraphError):
    """An endpoint index falls outside 0..n-1."""


class NotAMatchingError(GraphError):
    """Two of the given edges share an endpoint."""


class InvalidTrailError(GraphError):
    """A dart sequence is not a closed trail (repeated edge or broken continuity)."""


class TrailNotInGraphError(GraphError):
    """A trail references darts that do not exist in the host graph."""


class NotACycleError(GraphError):
    """A closed trail revisits a vertex where a cycle was required."""


class MalformedGraph6Error(GraphError):
    """Input is not a valid graph6 string for n <= 62."""


class MultiEdgeInGraph6Error(GraphError):
    """graph6 cannot represent parallel edges."""


class MalformedGraphFileError(GraphError):
    """A .mg / .ts / .trail / matching file violates its line format."""


class NotSimpleError(GraphError):
    pass


class DisconnectedError(GraphError):
    pass


class NoTwoDisjointCyclesError(GraphError):
    """Cyclic edge connectivity is undefined without two vertex-disjoint cycles."""


class TooLargeError(GraphError):
    """Instance exceeds the exhaustive-enumeration bound for this operation."""


class NotFourRegularError(GraphError):
    pass


class InvalidTransitionSystemError(GraphError):
    """The per-vertex pairing does not partition the four darts at some vertex."""


class NotDominatingError(GraphError):
    """The cycle misses both endpoints of some required edge."""


class NotDominatingInImageError(GraphError):
    """The given cycle is not a dominating cycle of the contracted graph."""


class InvalidTTrailError(GraphError):
    """The trail violates the transition rules of the given system."""


class NoFourValentVertexError(GraphError):
    """The trail is already a Hamiltonian cycle; nothing to reduce."""


class NotHamiltonianError(GraphError):
    pass


class OverlappingTrianglesError(GraphError):
    """Two triangles share a vertex, so triangle contraction is not well defined."""


class PreconditionViolatedError(GraphError):
    pass


class BudgetExceededError(GraphError):
    pass
