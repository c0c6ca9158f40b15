"""Exception hierarchy shared by every module."""


class HypergraphError(ValueError):
    """Base class for all errors raised by hypercut."""


class EmptyVertexSet(HypergraphError):
    pass


class DuplicateId(HypergraphError):
    pass


class UnknownVertexInEdge(HypergraphError):
    pass


class UnknownVertex(HypergraphError):
    pass


class UnknownEdge(HypergraphError):
    pass


class EmptyEdgeCollection(HypergraphError):
    pass


class MalformedMatrix(HypergraphError):
    pass


class LastVertex(HypergraphError):
    """Deleting the only vertex would leave no hypergraph."""


class ResultHasNoVertices(HypergraphError):
    pass


class EmptySelection(HypergraphError):
    pass


class IncidenceDisagreement(HypergraphError):
    """A shared edge id carries different vertex sets in the two operands."""


class NotASubgraph(HypergraphError):
    pass


class BadLevel(HypergraphError):
    pass


class UnknownToken(HypergraphError):
    pass


class MalformedAlternation(HypergraphError):
    pass


class NotAWalk(HypergraphError):
    pass


class EndpointMismatch(HypergraphError):
    pass


class NotClosed(HypergraphError):
    pass


class ConsecutiveEdgeRepeat(HypergraphError):
    pass


class NotConnected(HypergraphError):
    pass


class HasEmptyEdges(HypergraphError):
    pass


class PreconditionUnmet(HypergraphError):
    pass


class TooLarge(HypergraphError):
    pass


class InvariantViolation(HypergraphError):
    """An internal consistency check failed; indicates a bug, not bad input."""


class ParseError(HypergraphError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.reason = message
