"""Exception hierarchy for 2-digraph operations."""


class GraphError(ValueError):
    """Base class for every error raised by this package."""


class DegreeViolation(GraphError):
    def __init__(self, vertex, indeg, outdeg):
        self.vertex, self.indeg, self.outdeg = vertex, indeg, outdeg
        super().__init__(f"vertex {vertex} has (in, out) = ({indeg}, {outdeg})")


class DanglingEndpoint(GraphError):
    def __init__(self, arc):
        self.arc = arc
        super().__init__(f"arc {arc} references an unlisted vertex")


class DuplicateArcId(GraphError):
    pass


class NotSaturated(GraphError):
    def __init__(self, vertex=None, msg=None):
        self.vertex = vertex
        super().__init__(msg or f"vertex {vertex} is not saturated")


class NotEntry(GraphError):
    pass


class NotExit(GraphError):
    pass


class EmptySelection(GraphError):
    pass


class LengthMismatch(GraphError):
    pass


class CapExceeded(GraphError):
    """A search would exceed a configured size cap."""


class TooManyACs(CapExceeded):
    def __init__(self, n, cap):
        self.n, self.cap = n, cap
        super().__init__(f"{n} alternating cycles exceeds the enumeration cap {cap}")


class BudgetExceeded(CapExceeded):
    pass


class SaturatedGraph(GraphError):
    pass


class MixedParityFound(GraphError):
    pass


class NotClosed(GraphError):
    pass


class NotASplitSet(GraphError):
    pass


class NotMinimalPair(GraphError):
    pass


class PreconditionViolated(GraphError):
    pass


class NotEven(GraphError):
    pass


class RouteNotOpen(GraphError):
    pass


class KNotProper(GraphError):
    pass


class NotSixArcs(GraphError):
    pass


class NotFamilyF6(GraphError):
    pass


class CountMismatch(GraphError):
    pass


class RouteNotUnique(GraphError):
    pass


class NotNonHamiltonian(GraphError):
    pass


class NotInC6(GraphError):
    pass


class ArcListSyntaxError(GraphError):
    def __init__(self, line, msg, column=None):
        self.line, self.column = line, column
        where = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{where}: {msg}")
