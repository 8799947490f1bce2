from .base import BaseOnlineColorer, Reveal, RunResult, StepRecord
from .combiner import APrimeColorer, CombinedColorer, a_prime, combine
from .driver import monotonicity_ratio, run, suffix_profile
from .first_fit import FirstFit, FirstFitPredictions, first_fit, first_fit_predictions
from .groups import COLORERS_BY_NAME, ColorerName, colorer_factory, make_colorer
from .scripted import (
    FollowPredictions,
    ScriptedColorer,
    follow_predictions,
    scripted_colorer,
)

__all__ = [
    "APrimeColorer",
    "BaseOnlineColorer",
    "COLORERS_BY_NAME",
    "ColorerName",
    "CombinedColorer",
    "FirstFit",
    "FirstFitPredictions",
    "FollowPredictions",
    "Reveal",
    "RunResult",
    "ScriptedColorer",
    "StepRecord",
    "a_prime",
    "colorer_factory",
    "combine",
    "first_fit",
    "first_fit_predictions",
    "follow_predictions",
    "make_colorer",
    "monotonicity_ratio",
    "run",
    "scripted_colorer",
    "suffix_profile",
]
