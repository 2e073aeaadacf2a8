class CollapseError(Exception):
    """Base class for every error raised by this package."""


class GraphError(CollapseError, ValueError):
    pass


class SelfLoopError(GraphError):
    def __init__(self, u: int):
        super().__init__(f"self-loop at vertex {u}")
        self.u = u


class DuplicateEdgeError(GraphError):
    def __init__(self, u: int, v: int):
        super().__init__(f"duplicate edge ({u}, {v})")
        self.u, self.v = u, v


class VertexOutOfRangeError(GraphError):
    def __init__(self, u: int, n: int):
        super().__init__(f"vertex {u} out of range 0..{n - 1}")
        self.u, self.n = u, n


class ParseError(CollapseError, ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class TooLargeError(CollapseError):
    """Brute-force enumeration would exceed the configured limits."""


class IncompatibleAlgorithmError(CollapseError, ValueError):
    pass


class PreconditionError(CollapseError, ValueError):
    pass


class WitnessError(CollapseError, AssertionError):
    """A solver produced a witness that fails re-verification (a search bug)."""
