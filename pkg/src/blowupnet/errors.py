"""Error types raised by the network, construction and formula layers.

Everything derives from NetworkError so callers can catch broadly; the CLI
maps NetworkError subclasses to usage-level exit codes.
"""


class NetworkError(Exception):
    """Base class for all domain errors in this package."""


# --- core network / solver errors -----------------------------------------

class Disconnected(NetworkError):
    """The operation needs a connected network but got a disconnected one."""


class DisconnectedPair(NetworkError):
    """The two vertices lie in different connected components."""


class SingularSystem(NetworkError):
    """The grounded Laplacian is singular, so resistances are undefined.

    With signed conductances this happens exactly when the weighted
    spanning-tree sum of the (component of the) network vanishes.
    """


# --- blow-up construction errors -------------------------------------------

class DimensionMismatch(NetworkError):
    """Per-part data does not match the number of host vertices."""


class IsolatedHostVertex(NetworkError):
    """A host vertex has no neighbour, so its per-part rates are undefined."""


class DisconnectedHost(NetworkError):
    """The host graph must be connected for this construction."""


# --- rewrite (transform) errors ---------------------------------------------

class DegreeNotTwo(NetworkError):
    """Series elimination needs a vertex with exactly two incident edges."""


class VertexIsTerminal(NetworkError):
    """The vertex to be eliminated is a terminal and must be kept."""


class ZeroResistanceEdge(NetworkError):
    """A rewrite produced an edge of zero resistance (infinite conductance)."""


class TotalConductanceZero(NetworkError):
    """Parallel edges sum to conductance zero, leaving no replacement edge."""


class SumZero(NetworkError):
    """A triangle with resistance sum zero has no star equivalent."""


class CenterIsTerminal(NetworkError):
    """The star centre to be eliminated is a terminal."""


class ZeroArm(NetworkError):
    """A star arm of zero resistance cannot be turned into a triangle."""


class NotAUnitClique(NetworkError):
    """The given vertices do not carry a complete set of unit-resistance edges."""


class NonUniformWeights(NetworkError):
    """The complete bipartite block does not match the declared weights."""


class ZeroA(NetworkError):
    """A double-star rewrite needs a nonzero total weight on each side."""


class DenominatorZero(NetworkError):
    """A closed form hit a vanishing denominator for these parameters."""


class NotAPendantBlock(NetworkError):
    """The block touches the rest of the network other than via its cut vertex."""


class TerminalInsideBlock(NetworkError):
    """A terminal other than the cut vertex sits inside the block."""


# --- closed-form / family errors --------------------------------------------

class NonCompleteHost(NetworkError):
    """This closed form is only valid over a complete host graph."""


class SameVertex(NetworkError):
    """Resistance distance needs two distinct vertices."""


class InvalidFamilyParams(NetworkError):
    """Family-specific parameters (matching, star size, ...) are malformed."""
