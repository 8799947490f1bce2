from collections.abc import Callable
from dataclasses import dataclass
from typing import Literal

from .base import BaseOnlineColorer
from .first_fit import FirstFit, FirstFitPredictions
from .scripted import FollowPredictions

ColorerName = Literal["ff", "ffp", "fp"]


@dataclass(frozen=True, kw_only=True)
class ColorerSpec:
    name: ColorerName
    factory: Callable[[], BaseOnlineColorer]
    needs_predictions: bool = False
    description: str = ""


COLORERS: list[ColorerSpec] = [
    ColorerSpec(
        name="ff",
        factory=FirstFit,
        description="FirstFit: lowest rank unused by revealed neighbors",
    ),
    ColorerSpec(
        name="ffp",
        factory=FirstFitPredictions,
        needs_predictions=True,
        description="FirstFit inside one palette per predicted label",
    ),
    ColorerSpec(
        name="fp",
        factory=FollowPredictions,
        needs_predictions=True,
        description="rank 0 of the predicted palette (fails on conflicting predictions)",
    ),
]

COLORERS_BY_NAME = {spec.name: spec for spec in COLORERS}


def make_colorer(name: str) -> BaseOnlineColorer:
    return colorer_factory(name)()


def colorer_factory(name: str) -> Callable[[], BaseOnlineColorer]:
    spec = COLORERS_BY_NAME.get(name)  # pyright: ignore[reportArgumentType]
    if spec is None:
        raise KeyError(
            f"unknown colorer {name!r}, expected one of {', '.join(COLORERS_BY_NAME)}"
        )
    return spec.factory
