"""
Online driver that reveals an instance vertex by vertex to a colorer.
"""

import logging
from collections.abc import Callable

from ..errors import ImproperStepError
from ..graph import Color, OnlineInstance, suffix_instance
from .base import BaseOnlineColorer, Reveal, RunResult, StepRecord

logger = logging.getLogger(__name__)


def run(
    colorer: BaseOnlineColorer,
    instance: OnlineInstance,
    *,
    step_callback: Callable[[StepRecord], None] | None = None,
) -> RunResult:
    """
    Reveal the vertices of `instance` in order, passing each step only the revealed
    neighbors and the vertex's prediction, and record the irrevocable colors.
    Every returned color is checked against the revealed neighbors before the next
    vertex is revealed.
    """
    graph = instance.graph
    coloring: dict[int, Color] = {}
    per_step: list[StepRecord] = []
    prefix_counts: list[int] = []
    used: set[Color] = set()

    for step, vertex in enumerate(instance.order):
        neighbors = {u: coloring[u] for u in graph.neighbors(vertex) if u in coloring}
        prediction = (
            instance.predictions[vertex] if instance.predictions is not None else None
        )
        color = colorer(
            Reveal(step=step, vertex=vertex, neighbors=neighbors, prediction=prediction)
        )
        for neighbor, neighbor_color in sorted(neighbors.items()):
            if neighbor_color == color:
                raise ImproperStepError(vertex, neighbor)

        coloring[vertex] = color
        used.add(color)
        record = StepRecord(step=step, vertex=vertex, color=color)
        per_step.append(record)
        prefix_counts.append(len(used))
        logger.debug("step %d: vertex %d -> %s", step + 1, vertex, color)
        if step_callback is not None:
            step_callback(record)

    return RunResult(
        coloring=coloring,
        per_step=tuple(per_step),
        prefix_counts=tuple(prefix_counts),
    )


def suffix_profile(
    factory: Callable[[], BaseOnlineColorer], instance: OnlineInstance
) -> list[int]:
    """Distinct colors of a fresh run on every suffix instance (G(i), pi(i)), i = 1..n."""
    return [
        run(factory(), suffix_instance(instance, i)).distinct_colors
        for i in range(1, instance.n + 1)
    ]


def monotonicity_ratio(
    factory: Callable[[], BaseOnlineColorer], instance: OnlineInstance
) -> float:
    """max_i A(G(i), pi(i)) / A(G, pi); 1.0 means no suffix needs more colors."""
    if instance.n == 0:
        return 1.0
    profile = suffix_profile(factory, instance)
    return max(profile) / profile[0]
