"""Graphs, structured colors and online instances (G, pi, P)."""

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field, replace

import networkx as nx

from .errors import (
    ColoringError,
    GraphValidationError,
    InvalidInstanceError,
    MissingPredictionError,
    UncoloredVertexError,
)

ColorLabel = str
PALETTE_SEPARATOR = "#"


def validate_label(label: object) -> ColorLabel:
    """Return `label` if it can serve as a palette tag, raise ValueError otherwise."""
    if not isinstance(label, str) or not label:
        raise ValueError(f"color label must be a non-empty string, got {label!r}")
    if PALETTE_SEPARATOR in label:
        raise ValueError(f"color label {label!r} must not contain {PALETTE_SEPARATOR!r}")
    return label


@dataclass(frozen=True, order=True)
class Color:
    """A color c_i^rank: the rank-th color of the palette tagged `palette`."""

    palette: ColorLabel
    rank: int

    def __post_init__(self):
        validate_label(self.palette)
        if not isinstance(self.rank, int) or self.rank < 0:
            raise ValueError(f"color rank must be a non-negative integer, got {self.rank!r}")

    def __str__(self) -> str:
        return f"{self.palette}{PALETTE_SEPARATOR}{self.rank}"

    @classmethod
    def parse(cls, token: str) -> "Color":
        """Parse the `<palette>#<rank>` serialization."""
        palette, separator, rank = token.rpartition(PALETTE_SEPARATOR)
        if not separator or not rank.isdigit():
            raise ValueError(f"invalid color token {token!r}, expected '<palette>#<rank>'")
        return cls(palette, int(rank))

    def with_prefix(self, prefix: str) -> "Color":
        return Color(prefix + self.palette, self.rank)


Coloring = Mapping[int, Color]


def distinct_colors(coloring: Coloring) -> int:
    return len(set(coloring.values()))


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on the vertices 0..n-1.

    Edges are stored as normalized pairs (u, v) with u < v; the adjacency sets are
    derived once at construction time.
    """

    n: int
    edges: frozenset[tuple[int, int]] = frozenset()
    _adjacency: tuple[frozenset[int], ...] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise GraphValidationError(f"vertex count must be a non-negative integer, got {self.n!r}")
        normalized = frozenset(_normalize_pair(pair, self.n) for pair in self.edges)
        adjacency: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in normalized:
            adjacency[u].add(v)
            adjacency[v].add(u)
        object.__setattr__(self, "edges", normalized)
        object.__setattr__(
            self, "_adjacency", tuple(frozenset(neighbors) for neighbors in adjacency)
        )

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    @property
    def max_degree(self) -> int:
        return max((len(neighbors) for neighbors in self._adjacency), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjacency[u]

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def induced_subgraph(
        self, vertices: Sequence[int]
    ) -> tuple["Graph", tuple[int, ...]]:
        """Return the subgraph induced by `vertices`, relabeled so that vertices[j] becomes j.

        The second element maps every new id back to the id it had in this graph.
        """
        index = {v: j for j, v in enumerate(vertices)}
        if len(index) != len(vertices):
            raise GraphValidationError("induced subgraph vertices must be distinct")
        edges = frozenset(
            (min(index[u], index[v]), max(index[u], index[v]))
            for u, v in self.edges
            if u in index and v in index
        )
        return Graph(len(vertices), edges), tuple(vertices)

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "Graph":
        """Build a Graph from a networkx graph, numbering nodes in sorted order."""
        g = nx.convert_node_labels_to_integers(g, ordering="sorted")
        return build_graph(g.number_of_nodes(), g.edges())

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edge_list())
        return g


def _normalize_pair(pair: Sequence[int], n: int) -> tuple[int, int]:
    if len(pair) != 2:
        raise GraphValidationError(f"edge {tuple(pair)} must have exactly two endpoints")
    u, v = pair
    if not isinstance(u, int) or not isinstance(v, int):
        raise GraphValidationError(f"edge ({u!r}, {v!r}) endpoints must be integers")
    if u == v:
        raise GraphValidationError(f"self-loop ({u}, {v})", (u, v))
    if not (0 <= u < n and 0 <= v < n):
        raise GraphValidationError(
            f"endpoint out of range in edge ({u}, {v}) for n={n}", (u, v)
        )
    return (u, v) if u < v else (v, u)


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Validate an edge list and build a Graph; duplicate edges collapse."""
    return Graph(n, frozenset(tuple(pair) for pair in edges))


def is_proper(graph: Graph, coloring: Coloring) -> bool:
    """True iff every vertex is colored and no edge has equal endpoint colors."""
    for v in range(graph.n):
        if v not in coloring:
            raise UncoloredVertexError(v)
    return all(coloring[u] != coloring[v] for u, v in graph.edges)


@dataclass(frozen=True, kw_only=True)
class OnlineInstance:
    """An online graph with optional predictions.

    `order` lists the vertices in reveal order; `source_ids` maps every vertex back
    to its id in the instance this one was derived from (identity by default).
    """

    graph: Graph
    order: tuple[int, ...]
    predictions: Mapping[int, ColorLabel] | None = None
    source_ids: tuple[int, ...] = ()
    _positions: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.graph.n
        order = tuple(self.order)
        if sorted(order) != list(range(n)):
            raise InvalidInstanceError("order is not a permutation of the vertex set")
        positions = [0] * n
        for index, v in enumerate(order):
            positions[v] = index
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "_positions", tuple(positions))

        if self.predictions is not None:
            if set(self.predictions) != set(range(n)):
                raise InvalidInstanceError("predictions must cover exactly the vertex set")
            try:
                predictions = {
                    v: validate_label(self.predictions[v]) for v in range(n)
                }
            except ValueError as e:
                raise InvalidInstanceError(str(e)) from None
            object.__setattr__(self, "predictions", predictions)

        source_ids = tuple(self.source_ids) or tuple(range(n))
        if len(source_ids) != n:
            raise InvalidInstanceError("source_ids must name every vertex exactly once")
        object.__setattr__(self, "source_ids", source_ids)

    @property
    def n(self) -> int:
        return self.graph.n

    def position(self, v: int) -> int:
        """1-based reveal position of vertex v."""
        return self._positions[v] + 1

    def vertex_at(self, i: int) -> int:
        """Vertex revealed at 1-based position i."""
        return self.order[i - 1]

    def require_predictions(self) -> Mapping[int, ColorLabel]:
        if self.predictions is None:
            raise MissingPredictionError()
        return self.predictions

    @property
    def labels(self) -> list[ColorLabel]:
        """Distinct predicted labels, sorted."""
        return sorted(set(self.require_predictions().values()))

    def with_predictions(
        self, predictions: Mapping[int, ColorLabel] | None
    ) -> "OnlineInstance":
        return replace(self, predictions=predictions)


def suffix_instance(instance: OnlineInstance, i: int) -> OnlineInstance:
    """Return (G(i), pi(i)): the instance induced by the vertices revealed at positions >= i.

    Vertices are relabeled 0..m-1 in reveal order, so the suffix order is the
    identity; `source_ids` keeps the ids of the input instance.
    """
    if not 1 <= i <= instance.n:
        raise ColoringError(f"suffix position {i} outside 1..{instance.n}")
    kept = instance.order[i - 1 :]
    subgraph, _ = instance.graph.induced_subgraph(kept)
    predictions = None
    if instance.predictions is not None:
        predictions = {j: instance.predictions[v] for j, v in enumerate(kept)}
    return OnlineInstance(
        graph=subgraph,
        order=tuple(range(len(kept))),
        predictions=predictions,
        source_ids=tuple(instance.source_ids[v] for v in kept),
    )
