"""Combining several online colorers that run on disjoint palettes."""

import logging
from collections.abc import Callable, Sequence
from dataclasses import replace

from ..errors import ColoringError, ImproperStepError, MissingPredictionError, SubColorerError
from ..graph import Color, ColorLabel, OnlineInstance
from .base import BaseOnlineColorer, Reveal, RunResult, StepRecord
from .driver import run
from .first_fit import FirstFitPredictions

logger = logging.getLogger(__name__)

ColorerFactory = Callable[[], BaseOnlineColorer]


class CombinedColorer(BaseOnlineColorer):
    """
    t online colorers simulated in lockstep, each on its own palettes.

    Sub-colorer j only ever sees the colors it assigned itself. Its colors are
    emitted with the prefix "<base><j>/"; the text between the base and the first
    "/" identifies j, so colors of different sub-colorers never coincide. Each step
    follows the sub-colorer with the fewest distinct colors so far (the current
    vertex included), ties going to the lowest index.
    """

    name = "combine"

    def __init__(self, *factories: ColorerFactory, prefix_base: str = "A"):
        if not factories:
            raise ValueError("combining needs at least one colorer")
        self.colorers = tuple(factory() for factory in factories)
        self.prefixes = tuple(
            f"{prefix_base}{index}/" for index in range(1, len(self.colorers) + 1)
        )
        self.needs_predictions = any(c.needs_predictions for c in self.colorers)
        self.chosen_log: list[int] = []
        self._colorings: tuple[dict[int, Color], ...] = tuple(
            {} for _ in self.colorers
        )
        self._used: tuple[set[Color], ...] = tuple(set() for _ in self.colorers)

    @property
    def sub_counts(self) -> tuple[int, ...]:
        """Distinct colors used so far by every simulated sub-colorer."""
        return tuple(len(used) for used in self._used)

    def __call__(self, reveal: Reveal) -> Color:
        choices: list[Color] = []
        for index, colorer in enumerate(self.colorers, start=1):
            own = self._colorings[index - 1]
            sub_reveal = replace(
                reveal, neighbors={u: own[u] for u in reveal.neighbors}
            )
            try:
                color = colorer(sub_reveal)
            except ColoringError as e:
                raise SubColorerError(index, e) from e
            for neighbor, neighbor_color in sorted(sub_reveal.neighbors.items()):
                if neighbor_color == color:
                    raise ImproperStepError(reveal.vertex, neighbor, algorithm=index)
            own[reveal.vertex] = color
            self._used[index - 1].add(color)
            choices.append(color)

        counts = self.sub_counts
        best = min(range(len(counts)), key=lambda j: (counts[j], j))
        self.chosen_log.append(best + 1)
        logger.debug(
            "step %d: following A%d, simulated counts %s", reveal.step + 1, best + 1, counts
        )
        return choices[best].with_prefix(self.prefixes[best])


def combine(
    colorers: Sequence[ColorerFactory],
    instance: OnlineInstance,
    *,
    step_callback: Callable[[StepRecord], None] | None = None,
) -> RunResult:
    """Run the combination of `colorers` on `instance`.

    Uses at most t * min_j A_j(G) colors, where A_j(G) is what colorer j uses alone.
    """
    colorer = CombinedColorer(*colorers)
    result = run(colorer, instance, step_callback=step_callback)
    return result.replace(
        chosen_log=tuple(colorer.chosen_log), sub_counts=colorer.sub_counts
    )


def _prefix_clear_of(labels: set[ColorLabel], base: str = "A") -> str:
    while any(label.startswith(base) for label in labels):
        base = "~" + base
    return base


class APrimeColorer(BaseOnlineColorer):
    """
    Follows the predictions for as long as that is safe for a k-chromatic input.

    Every vertex v is colored with rank 0 of palette P(v) until, at some v_i, either
    k+1 distinct labels have been predicted or following P(v_i) would repeat a
    revealed neighbor's color. From v_i on (v_i included) it runs the combination
    of FirstFitPredictions and the classical colorer on the suffix-induced online
    graph only, with palettes no earlier label can produce.
    """

    name = "aprime"
    needs_predictions = True

    def __init__(self, k: int, classical: ColorerFactory):
        if k < 1:
            raise ValueError(f"chromatic number k must be positive, got {k}")
        self.k = k
        self.classical = classical
        self.switch_step: int | None = None
        self._labels: set[ColorLabel] = set()
        self._phase_one: set[int] = set()
        self._phase_two: CombinedColorer | None = None

    @property
    def chosen_log(self) -> tuple[int, ...]:
        return () if self._phase_two is None else tuple(self._phase_two.chosen_log)

    @property
    def sub_counts(self) -> tuple[int, ...]:
        return () if self._phase_two is None else self._phase_two.sub_counts

    def __call__(self, reveal: Reveal) -> Color:
        if reveal.prediction is None:
            raise MissingPredictionError(reveal.vertex)
        if self._phase_two is None:
            followed = Color(reveal.prediction, 0)
            labels = self._labels | {reveal.prediction}
            conflict = followed in reveal.neighbors.values()
            if len(labels) <= self.k and not conflict:
                self._labels = labels
                self._phase_one.add(reveal.vertex)
                return followed
            self.switch_step = reveal.step
            self._phase_two = CombinedColorer(
                FirstFitPredictions,
                self.classical,
                prefix_base=_prefix_clear_of(self._labels),
            )
            logger.debug(
                "switching at step %d (%s)",
                reveal.step + 1,
                "improper prediction" if conflict else f"{len(labels)} labels > k",
            )

        assert self.switch_step is not None
        return self._phase_two(
            replace(
                reveal,
                step=reveal.step - self.switch_step,
                neighbors={
                    u: color
                    for u, color in reveal.neighbors.items()
                    if u not in self._phase_one
                },
            )
        )


def a_prime(
    k: int,
    classical: ColorerFactory,
    instance: OnlineInstance,
    *,
    step_callback: Callable[[StepRecord], None] | None = None,
) -> RunResult:
    """Run A' for a k-chromatic instance with predictions.

    `switch_position` in the result is the 1-based position of the vertex that
    triggered phase two, or None if the predictions were followed throughout.
    """
    instance.require_predictions()
    colorer = APrimeColorer(k, classical)
    result = run(colorer, instance, step_callback=step_callback)
    return result.replace(
        chosen_log=colorer.chosen_log,
        sub_counts=colorer.sub_counts,
        switch_position=None if colorer.switch_step is None else colorer.switch_step + 1,
    )
