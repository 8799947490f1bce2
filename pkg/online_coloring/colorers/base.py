from abc import ABCMeta, abstractmethod
from collections import Counter
from collections.abc import Mapping
from dataclasses import dataclass, replace

from ..graph import Color, ColorLabel


@dataclass(kw_only=True, frozen=True)
class Reveal:
    """Everything an online colorer may know when vertex `vertex` arrives.

    `neighbors` holds only the already revealed neighbors and their colors; the
    driver builds it, so a colorer never sees the unrevealed part of the graph.
    """

    step: int
    vertex: int
    neighbors: Mapping[int, Color]
    prediction: ColorLabel | None = None


class BaseOnlineColorer(metaclass=ABCMeta):
    """Abstract base class for deterministic online colorers."""

    name: str
    needs_predictions: bool = False

    @abstractmethod
    def __call__(self, reveal: Reveal) -> Color:
        """Irrevocably colors the revealed vertex."""
        ...


@dataclass(kw_only=True, frozen=True)
class StepRecord:
    step: int
    vertex: int
    color: Color


@dataclass(kw_only=True, frozen=True)
class RunResult:
    """Represents the outcome of one online run."""

    coloring: Mapping[int, Color]
    per_step: tuple[StepRecord, ...]
    prefix_counts: tuple[int, ...]
    chosen_log: tuple[int, ...] = ()
    sub_counts: tuple[int, ...] = ()
    switch_position: int | None = None

    @property
    def distinct_colors(self) -> int:
        return len(set(self.coloring.values()))

    @property
    def per_palette_counts(self) -> dict[ColorLabel, int]:
        """Distinct colors per palette (x_i for FirstFitPredictions)."""
        return dict(Counter(color.palette for color in set(self.coloring.values())))

    def ranks(self) -> list[int]:
        """Ranks in reveal order."""
        return [record.color.rank for record in self.per_step]

    def replace(self, **kwargs):
        """Returns a new RunResult with the given fields replaced."""
        return replace(self, **kwargs)
