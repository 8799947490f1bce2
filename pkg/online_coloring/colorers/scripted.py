from collections.abc import Sequence

from ..errors import MissingPredictionError, ScriptExhaustedError
from ..graph import Color
from .base import BaseOnlineColorer, Reveal


class ScriptedColorer(BaseOnlineColorer):
    """Returns script[step] at every step; used to build adversarial sub-algorithms."""

    name = "scripted"

    def __init__(self, script: Sequence[Color]):
        self.script = tuple(script)

    def __call__(self, reveal: Reveal) -> Color:
        if reveal.step >= len(self.script):
            raise ScriptExhaustedError(reveal.step + 1, len(self.script))
        return self.script[reveal.step]


class FollowPredictions(BaseOnlineColorer):
    """Colors every vertex with rank 0 of its predicted palette.

    Optimal when the predictions form an optimal coloring, improper as soon as
    two adjacent vertices share a prediction.
    """

    name = "fp"
    needs_predictions = True

    def __call__(self, reveal: Reveal) -> Color:
        if reveal.prediction is None:
            raise MissingPredictionError(reveal.vertex)
        return Color(reveal.prediction, 0)


def scripted_colorer(script: Sequence[Color]) -> ScriptedColorer:
    return ScriptedColorer(script)


def follow_predictions() -> FollowPredictions:
    return FollowPredictions()
