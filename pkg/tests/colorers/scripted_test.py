import pytest

from online_coloring.colorers import (
    FirstFit,
    FollowPredictions,
    colorer_factory,
    make_colorer,
    run,
    scripted_colorer,
)
from online_coloring.colorers.groups import COLORERS_BY_NAME
from online_coloring.errors import ImproperStepError, ScriptExhaustedError
from online_coloring.generators import gen_singletons
from online_coloring.graph import Color


def test_scripted_colorer_replays_script(path_instance):
    script = [Color("s", 0), Color("s", 1), Color("s", 2)]
    result = run(scripted_colorer(script), path_instance)
    assert [record.color for record in result.per_step] == script


def test_scripted_colorer_exhausted(path_instance):
    with pytest.raises(ScriptExhaustedError, match="step 3 \\(script length 2\\)"):
        run(scripted_colorer([Color("s", 0), Color("s", 1)]), path_instance)


def test_singleton_scripts_standalone():
    instance, scripts = gen_singletons(4)
    counts = [run(scripted_colorer(script), instance).distinct_colors for script in scripts]
    assert counts == [4, 3, 2, 1]


def test_follow_predictions(path_instance):
    result = run(FollowPredictions(), path_instance)
    assert result.coloring == {0: Color("a", 0), 1: Color("b", 0), 2: Color("a", 0)}


def test_follow_predictions_fails_on_adjacent_equal_labels(path_instance):
    same = path_instance.with_predictions({0: "a", 1: "a", 2: "a"})
    with pytest.raises(ImproperStepError, match="vertex 1 got the color of revealed neighbor 0"):
        run(FollowPredictions(), same)


def test_registry():
    assert set(COLORERS_BY_NAME) == {"ff", "ffp", "fp"}
    assert isinstance(make_colorer("ff"), FirstFit)
    assert COLORERS_BY_NAME["ffp"].needs_predictions
    assert not COLORERS_BY_NAME["ff"].needs_predictions
    with pytest.raises(KeyError, match="unknown colorer 'bicolormax'"):
        colorer_factory("bicolormax")
