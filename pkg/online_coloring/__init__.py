from .config import OracleLimits
from .errors import ColoringError
from .graph import (
    Color,
    ColorLabel,
    Coloring,
    Graph,
    OnlineInstance,
    build_graph,
    distinct_colors,
    is_proper,
    suffix_instance,
)

__all__ = [
    "Color",
    "ColorLabel",
    "Coloring",
    "ColoringError",
    "Graph",
    "OnlineInstance",
    "OracleLimits",
    "build_graph",
    "distinct_colors",
    "is_proper",
    "suffix_instance",
]
