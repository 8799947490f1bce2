"""Clique partitions hidden in every FirstFit coloring.

If FirstFit uses x >= 2 colors, some x + q vertices split into q + 1 cliques of size
at least two, with 0 <= q <= x - 2. `extract_clique_partition` builds that partition
from a FirstFit run; `verify_partition` checks it independently.
"""

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field

from .colorers.base import RunResult
from .errors import ColoringError, StructuralViolationError
from .graph import Color, ColorLabel, Graph

logger = logging.getLogger(__name__)


@dataclass(frozen=True, kw_only=True)
class CliquePartition:
    cliques: tuple[frozenset[int], ...]
    x: int

    @property
    def q(self) -> int:
        return len(self.cliques) - 1

    @property
    def size(self) -> int:
        return sum(len(clique) for clique in self.cliques)


@dataclass(frozen=True)
class PartitionCheck:
    reasons: tuple[str, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.reasons

    def __bool__(self):
        return self.ok


def verify_partition(graph: Graph, partition: CliquePartition) -> PartitionCheck:
    reasons: list[str] = []
    seen: set[int] = set()
    for clique in partition.cliques:
        if seen & clique:
            reasons.append(f"overlapping parts at {sorted(seen & clique)}")
        seen |= clique
        if len(clique) < 2:
            reasons.append(f"trivial part {sorted(clique)}")
        members = sorted(clique)
        missing = [
            (u, v)
            for i, u in enumerate(members)
            for v in members[i + 1 :]
            if not graph.has_edge(u, v)
        ]
        if missing:
            reasons.append(f"not a clique: {sorted(clique)} misses edge {missing[0]}")
    if partition.size != partition.x + partition.q:
        reasons.append(
            f"size mismatch: parts hold {partition.size} vertices, x + q = {partition.x + partition.q}"
        )
    if not 0 <= partition.q <= partition.x - 2:
        reasons.append(f"q={partition.q} outside 0..x-2 for x={partition.x}")
    return PartitionCheck(tuple(reasons))


def _extract(
    graph: Graph, ranks: Mapping[int, int], order: Sequence[int]
) -> CliquePartition:
    """Core extraction over the vertices of `order`, all FirstFit-colored with `ranks`."""
    x = len(set(ranks.values()))
    if x < 2:
        raise ColoringError(f"clique partition needs a run with x >= 2 colors, got x={x}")
    if set(ranks.values()) != set(range(x)):
        raise StructuralViolationError(
            f"FirstFit ranks must be 0..{x - 1}, got {sorted(set(ranks.values()))}"
        )
    position = {v: index for index, v in enumerate(order)}

    def earliest(candidates) -> int | None:
        return min(candidates, key=position.__getitem__, default=None)

    top = earliest(v for v in order if ranks[v] == x - 1)
    assert top is not None
    witnesses: list[int] = []
    for color in range(x - 1):
        t = earliest(u for u in graph.neighbors(top) if u in ranks and ranks[u] == color)
        if t is None:
            raise StructuralViolationError(
                f"vertex {top} of color {x - 1} has no neighbor of color {color}"
            )
        witnesses.append(t)
    witnesses.append(top)
    in_s = set(witnesses)

    base = frozenset(
        t
        for i, t in enumerate(witnesses)
        if all(graph.has_edge(t, witnesses[j]) for j in range(i))
    )
    cliques: list[set[int]] = [set(base)]
    claimed: dict[int, int] = {}

    for color, u in enumerate(witnesses):
        if u in base:
            continue
        # alpha: the largest smaller color whose witness is not adjacent to u
        alpha = max(j for j in range(color) if not graph.has_edge(u, witnesses[j]))
        beta = earliest(
            w
            for w in graph.neighbors(u)
            if w in ranks and w not in in_s and ranks[w] == alpha
        )
        if beta is None:
            raise StructuralViolationError(
                f"vertex {u} of color {color} has no neighbor of color {alpha} outside the witnesses"
            )
        if beta not in claimed:
            claimed[beta] = len(cliques)
            cliques.append({beta, u})
            continue
        clique = cliques[claimed[beta]]
        if any(not graph.has_edge(u, w) for w in clique) or color <= ranks[beta]:
            raise StructuralViolationError(
                f"vertex {u} cannot extend clique {sorted(clique)} anchored at {beta}"
            )
        clique.add(u)

    partition = CliquePartition(
        cliques=tuple(frozenset(clique) for clique in cliques), x=x
    )
    logger.debug("extracted q=%d cliques from a run with x=%d", partition.q, x)
    return partition


def _single_palette(run: RunResult) -> ColorLabel:
    palettes = {color.palette for color in run.coloring.values()}
    if len(palettes) != 1:
        raise StructuralViolationError(
            f"a FirstFit run uses a single palette, got {sorted(palettes)}"
        )
    return palettes.pop()


def extract_clique_partition(graph: Graph, run: RunResult) -> CliquePartition:
    """Extract the clique partition of a FirstFit run on `graph`."""
    if not run.coloring:
        raise ColoringError("clique partition needs a run with x >= 2 colors, got x=0")
    _single_palette(run)
    order = [record.vertex for record in run.per_step]
    ranks = {v: color.rank for v, color in run.coloring.items()}
    return _extract(graph, ranks, order)


def extract_palette_partitions(
    graph: Graph, run: RunResult
) -> dict[ColorLabel, CliquePartition]:
    """Clique partitions of every palette with at least two colors in a FirstFitPredictions run.

    Each palette is FirstFit on the subgraph induced by the vertices holding it, so
    the extraction applies palette by palette; vertex ids stay those of `graph`.
    """
    order = [record.vertex for record in run.per_step]
    by_palette: dict[ColorLabel, list[int]] = {}
    for v in order:
        by_palette.setdefault(run.coloring[v].palette, []).append(v)

    partitions: dict[ColorLabel, CliquePartition] = {}
    for palette, members in sorted(by_palette.items()):
        colors: dict[int, Color] = {v: run.coloring[v] for v in members}
        if len(set(colors.values())) < 2:
            continue
        subgraph, ids = graph.induced_subgraph(members)
        local = _extract(
            subgraph,
            {j: colors[v].rank for j, v in enumerate(ids)},
            list(range(len(ids))),
        )
        partitions[palette] = CliquePartition(
            cliques=tuple(frozenset(ids[j] for j in clique) for clique in local.cliques),
            x=local.x,
        )
    return partitions
