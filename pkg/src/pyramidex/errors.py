"""Exception types shared across the package."""


class GraphError(ValueError):
    """Invalid graph construction (self-loop, out-of-range endpoint, ...)."""


class CapabilityError(ValueError):
    """Request exceeds a documented size limit of an algorithm."""


class Graph6Error(ValueError):
    """Malformed graph6 input. ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class EdgeListError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"{message} (line {line})")
        self.line = line


class BudgetExceeded(RuntimeError):
    """A search ran out of node expansions before reaching a verdict."""

    def __init__(self, nodes: int, best=None):
        super().__init__(f"search budget exhausted after {nodes} node expansions")
        self.nodes = nodes
        self.best = best


class ConstructionInvalid(RuntimeError):
    """A constructed graph failed its own verification gate."""


class ConsistencyError(RuntimeError):
    """An internal search failed in a way that contradicts a proven fact."""


class ValidationError(ValueError):
    pass
