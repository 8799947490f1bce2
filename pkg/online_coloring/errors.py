"""Exception hierarchy shared by every layer of the package."""


class ColoringError(Exception):
    """Raised when a graph, instance, colorer or oracle encounters an error."""

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class GraphValidationError(ColoringError):
    """Raised when an edge list cannot describe a simple undirected graph."""

    def __init__(self, message: str, pair: tuple[int, int] | None = None):
        super().__init__(message)
        self.pair = pair


class UncoloredVertexError(ColoringError):
    def __init__(self, vertex: int):
        super().__init__(f"vertex {vertex} is uncolored")
        self.vertex = vertex


class InstanceFormatError(ColoringError):
    """Raised when a JSON instance document violates the canonical format."""

    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{path}: {message}")
        self.reason = message
        self.path = path


class OracleLimitError(ColoringError):
    """Raised instead of silently approximating on graphs above the oracle limit."""

    def __init__(
        self, n: int, limit: int, what: str = "oracle", quantity: str = "n"
    ):
        super().__init__(
            f"oracle size limit: {what} supports {quantity} <= {limit}, got {quantity}={n}"
        )
        self.n = n
        self.limit = limit


class MissingPredictionError(ColoringError):
    def __init__(self, vertex: int | None = None):
        if vertex is None:
            super().__init__("instance carries no predictions")
        else:
            super().__init__(f"missing prediction for vertex {vertex}")
        self.vertex = vertex


class ImproperStepError(ColoringError):
    """Raised when a colorer reuses the color of an already revealed neighbor."""

    def __init__(self, vertex: int, neighbor: int, algorithm: int | None = None):
        where = "" if algorithm is None else f"A{algorithm}: "
        super().__init__(
            f"{where}improper step: vertex {vertex} got the color of revealed neighbor {neighbor}"
        )
        self.vertex = vertex
        self.neighbor = neighbor
        self.algorithm = algorithm


class ScriptExhaustedError(ColoringError):
    def __init__(self, step: int, length: int):
        super().__init__(f"script exhausted at step {step} (script length {length})")
        self.step = step


class SubColorerError(ColoringError):
    """Wraps an error raised inside one simulated sub-colorer of a combination."""

    def __init__(self, algorithm: int, cause: ColoringError):
        super().__init__(f"A{algorithm}: {cause.message}")
        self.algorithm = algorithm
        self.cause = cause


class StructuralViolationError(ColoringError):
    """Raised when a run contradicts the FirstFit clique-partition structure."""


class InvalidInstanceError(ColoringError):
    """Raised when an online instance breaks its order or prediction invariants."""
