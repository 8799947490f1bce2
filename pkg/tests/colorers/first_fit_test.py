import networkx as nx
import pytest

from online_coloring.colorers import FirstFit, FirstFitPredictions, run
from online_coloring.colorers.base import Reveal
from online_coloring.colorers.first_fit import lowest_free_color
from online_coloring.errors import MissingPredictionError
from online_coloring.generators import PredictionModel, attach_predictions, gen_random
from online_coloring.graph import Color, Graph, OnlineInstance
from online_coloring.oracle import prediction_error


@pytest.fixture(params=[FirstFit, FirstFitPredictions])
def colorer(request):
    return request.param()


@pytest.fixture(params=range(10))
def predicted_instance(request):
    instance = gen_random(9, 0.35, request.param)
    return attach_predictions(
        instance, PredictionModel.corrupted(0.4), seed=request.param
    )


def test_first_fit_on_path(path_instance):
    result = run(FirstFit(), path_instance)
    assert result.coloring == {0: Color("ff", 0), 2: Color("ff", 0), 1: Color("ff", 1)}
    assert result.distinct_colors == 2
    assert result.ranks() == [0, 0, 1]


def test_lowest_free_color_fills_gaps():
    reveal = Reveal(
        step=3,
        vertex=3,
        neighbors={0: Color("ff", 0), 1: Color("ff", 2), 2: Color("x", 1)},
    )
    assert lowest_free_color("ff", reveal) == Color("ff", 1)
    assert lowest_free_color("x", reveal) == Color("x", 0)


def test_first_fit_predictions_uses_one_palette_per_label(path_instance):
    result = run(FirstFitPredictions(), path_instance)
    assert result.coloring == {0: Color("a", 0), 2: Color("a", 0), 1: Color("b", 0)}
    assert result.per_palette_counts == {"a": 1, "b": 1}


def test_first_fit_predictions_within_a_palette(path_instance):
    same = path_instance.with_predictions({0: "a", 1: "a", 2: "a"})
    result = run(FirstFitPredictions(), same)
    assert result.coloring[1] == Color("a", 1)
    assert result.per_palette_counts == {"a": 2}


def test_first_fit_predictions_needs_predictions(path_instance):
    with pytest.raises(MissingPredictionError, match="vertex 0"):
        run(FirstFitPredictions(), path_instance.with_predictions(None))


def test_clique_needs_n_colors(colorer):
    k5 = Graph.from_networkx(nx.complete_graph(5))
    instance = OnlineInstance(
        graph=k5, order=(4, 2, 0, 1, 3), predictions={v: "p" for v in range(5)}
    )
    result = run(colorer, instance)
    assert result.distinct_colors == 5
    assert result.prefix_counts == (1, 2, 3, 4, 5)


def test_edgeless_graph_needs_one_color(colorer):
    instance = OnlineInstance(
        graph=Graph(4), order=(0, 1, 2, 3), predictions={v: "p" for v in range(4)}
    )
    assert run(colorer, instance).distinct_colors == 1


def test_palette_counts_exceed_palette_errors_by_at_most_one(predicted_instance):
    predictions = predicted_instance.require_predictions()
    result = run(FirstFitPredictions(), predicted_instance)
    errors = prediction_error(predicted_instance).errors_by_label(predictions)
    for palette, count in result.per_palette_counts.items():
        assert count <= errors[palette] + 1


@pytest.mark.parametrize("seed", range(8))
def test_constant_predictions_reduce_to_first_fit(seed):
    instance = gen_random(12, 0.3, seed)
    constant = instance.with_predictions({v: "p" for v in range(instance.n)})
    assert run(FirstFitPredictions(), constant).ranks() == run(FirstFit(), instance).ranks()


@pytest.mark.parametrize("seed", range(8))
def test_first_fit_rank_is_the_lowest_free_one(seed):
    instance = gen_random(14, 0.3, seed)
    result = run(FirstFit(), instance)
    for record in result.per_step:
        position = instance.position(record.vertex)
        earlier = {
            result.coloring[u].rank
            for u in instance.graph.neighbors(record.vertex)
            if instance.position(u) < position
        }
        assert set(range(record.color.rank)) <= earlier
        assert record.color.rank not in earlier


@pytest.mark.parametrize("factory", [FirstFit, FirstFitPredictions])
def test_runs_are_deterministic(factory, predicted_instance):
    first = run(factory(), predicted_instance)
    assert run(factory(), predicted_instance).per_step == first.per_step
