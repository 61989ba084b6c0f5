"""Exception hierarchy shared by every submanet module."""


class GraphError(Exception):
    """Base class for all errors raised by submanet."""


class LoopArc(GraphError):
    def __init__(self, vertex):
        super().__init__(f"loop arc at {vertex!r}: simple digraphs only")
        self.vertex = vertex


class DanglingEndpoint(GraphError):
    def __init__(self, arc):
        super().__init__(f"arc {arc!r} has an undeclared endpoint")
        self.arc = arc


class InvalidLabel(GraphError):
    pass


class UnknownVertex(GraphError, KeyError):
    def __init__(self, vertex):
        GraphError.__init__(self, f"unknown vertex {vertex!r}")
        self.vertex = vertex

    def __str__(self):
        return self.args[0]


class UnknownArc(GraphError, KeyError):
    def __init__(self, arc):
        GraphError.__init__(self, f"unknown arc {arc!r}")
        self.arc = arc

    def __str__(self):
        return self.args[0]


class NotAWalk(GraphError):
    pass


class ClosedWalkInput(GraphError):
    pass


class NotClosed(GraphError):
    pass


class NoCycleExtractable(GraphError):
    pass


class CyclicGraph(GraphError):
    def __init__(self, cycle):
        super().__init__("graph has a cycle: " + " -> ".join(cycle))
        self.cycle = list(cycle)


class TooLargeForExhaustive(GraphError):
    pass


class NoEligibleVertex(GraphError):
    pass


class NotAPartition(GraphError):
    pass


class NoArborescence(GraphError):
    pass


class UnknownFixture(GraphError, KeyError):
    def __init__(self, name):
        GraphError.__init__(self, f"unknown fixture {name!r}")
        self.name = name

    def __str__(self):
        return self.args[0]


class ParseError(GraphError):
    def __init__(self, message, line=None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line


class CertificateError(GraphError):
    """A certificate failed independent re-validation."""
