"""Exception hierarchy shared by all lichor modules."""


class LichorError(Exception):
    """Base class for all lichor errors."""


class InputError(LichorError, ValueError):
    """An argument is out of range or structurally invalid."""


class ContractError(LichorError):
    """A caller violated an API precondition (bug in the calling code)."""


class NotLinePerfectError(LichorError):
    """A biconnected block matches none of the supported shapes.

    Raised when a block is neither bipartite, nor a graph on four
    vertices, nor a double-apex triangle fan; the input graph is then
    outside the class this solver handles.
    """

    def __init__(self, message: str, block_vertices=None):
        super().__init__(message)
        self.block_vertices = tuple(block_vertices) if block_vertices else ()


class ListTooSmallError(LichorError):
    """Some edge list is smaller than the chromatic index of the graph."""

    def __init__(self, edge: int, size: int, required: int):
        super().__init__(
            f"list of edge {edge} has {size} colors, need at least {required}"
        )
        self.edge = edge
        self.size = size
        self.required = required


class InvariantError(LichorError):
    """An internal solver invariant failed.

    The solvers re-check, at every recursion level, properties that the
    underlying theory guarantees.  This error always signals a bug in
    the solver (or an input that slipped past validation), never an
    expected outcome on valid inputs.
    """


class ParseError(LichorError):
    """An instance or report document is malformed."""


class OracleSizeError(LichorError):
    """A brute-force oracle refused an instance above its size cap."""
