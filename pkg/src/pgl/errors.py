"""Exception types shared across the library."""


class GraphError(Exception):
    """Base class for all graph-library errors."""


class SelfLoopError(GraphError):
    """An edge (v, v) was supplied; simple graphs have no self-loops."""


class DanglingEdgeError(GraphError):
    """An edge endpoint is not a member of the node set."""


class NotSubsetError(GraphError):
    """A vertex set that must be contained in the node set is not."""


class VertexNotFoundError(GraphError):
    """A named vertex is not present in the graph."""


class PartialMapError(GraphError):
    """A vertex mapping is undefined on part of its required domain."""


class ZeroMultiplicityError(GraphError):
    """Expansion multiplicities must be at least one."""


class EmptyGraphError(GraphError):
    """The operation requires a nonempty node set."""


class InvalidColoringError(GraphError):
    """The supplied assignment is not a proper coloring of the graph."""


class NotAStableCoverError(GraphError):
    """The supplied cover is not a stable cover of the graph."""


class TooLargeError(GraphError):
    """Input exceeds the size cap of an enumerative routine."""


class ParseError(GraphError):
    """Malformed graph document."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
