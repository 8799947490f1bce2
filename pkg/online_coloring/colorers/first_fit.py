from ..errors import MissingPredictionError
from ..graph import Color, ColorLabel
from .base import BaseOnlineColorer, Reveal

FIRST_FIT_PALETTE: ColorLabel = "ff"


def lowest_free_color(palette: ColorLabel, reveal: Reveal) -> Color:
    """The smallest-rank color of `palette` not used by any revealed neighbor."""
    taken = set(reveal.neighbors.values())
    rank = 0
    while Color(palette, rank) in taken:
        rank += 1
    return Color(palette, rank)


class FirstFit(BaseOnlineColorer):
    """Greedy online colorer: the lowest rank of a single reserved palette."""

    name = "ff"

    def __init__(self, palette: ColorLabel = FIRST_FIT_PALETTE):
        self.palette = palette

    def __call__(self, reveal: Reveal) -> Color:
        return lowest_free_color(self.palette, reveal)


class FirstFitPredictions(BaseOnlineColorer):
    """
    FirstFit run separately inside one palette per predicted label.
    A vertex predicted c gets the lowest-rank color of palette c that none of its
    revealed neighbors holds; neighbors in other palettes can never collide.
    """

    name = "ffp"
    needs_predictions = True

    def __call__(self, reveal: Reveal) -> Color:
        if reveal.prediction is None:
            raise MissingPredictionError(reveal.vertex)
        return lowest_free_color(reveal.prediction, reveal)


def first_fit() -> FirstFit:
    return FirstFit()


def first_fit_predictions() -> FirstFitPredictions:
    return FirstFitPredictions()
