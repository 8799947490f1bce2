import networkx as nx
import pytest

from online_coloring.colorers import first_fit, run
from online_coloring.generators import (
    PredictionModel,
    attach_predictions,
    gen_complete,
    gen_crown,
    gen_cycle,
    gen_kk_blocks,
    gen_random,
    gen_random_bipartite,
    gen_singletons,
    generate,
)
from online_coloring.graph import Color, Graph
from online_coloring.oracle import chromatic_number, is_optimal_labeling, prediction_error


def test_crown_shapes():
    a, b = gen_crown(3, "a"), gen_crown(3, "b")
    assert a.n == b.n == 6
    assert len(a.graph.edges) == 6
    assert b.graph.edges == a.graph.edges | {(0, 1)}
    assert a.order == tuple(range(6))
    assert nx.is_bipartite(a.graph.to_networkx())


@pytest.mark.parametrize("n, variant", [(1, "a"), (0, "b"), (3, "c")])
def test_crown_rejects_bad_parameters(n, variant):
    with pytest.raises(ValueError):
        gen_crown(n, variant)


def test_kk_blocks_shape():
    instance = gen_kk_blocks(2)
    assert instance.n == 4
    assert instance.graph.edge_list() == [(0, 1), (0, 2), (2, 3)]
    assert instance.predictions == {0: "c1", 1: "c1", 2: "c2", 3: "c2"}
    with pytest.raises(ValueError):
        gen_kk_blocks(1)


def test_singletons():
    instance, scripts = gen_singletons(1)
    assert instance.n == 1 and not instance.graph.edges
    assert scripts == [[Color("c1", 0)]]

    _, scripts = gen_singletons(3)
    assert scripts[0] == [Color("c1", 0), Color("c1", 1), Color("c1", 2)]
    assert scripts[2] == [Color("c3", 0)] * 3
    with pytest.raises(ValueError):
        gen_singletons(0)


def test_random_is_deterministic():
    assert gen_random(12, 0.3, 7) == gen_random(12, 0.3, 7)
    assert gen_random_bipartite(4, 5, 0.5, 2) == gen_random_bipartite(4, 5, 0.5, 2)
    assert gen_random(12, 0.3, 7) != gen_random(12, 0.3, 8)


def test_random_extremes():
    assert gen_random(0, 0.5, 1).n == 0
    edgeless = gen_random(6, 0.0, 1)
    assert not edgeless.graph.edges
    assert run(first_fit(), edgeless).distinct_colors == 1
    complete = gen_random(6, 1.0, 1)
    assert len(complete.graph.edges) == 15
    assert run(first_fit(), complete).distinct_colors == 6
    with pytest.raises(ValueError):
        gen_random(5, 1.5, 0)


@pytest.mark.parametrize("seed", range(5))
def test_random_bipartite_is_two_colorable(seed, limits):
    instance = gen_random_bipartite(5, 6, 0.5, seed)
    assert instance.n == 11
    assert chromatic_number(instance.graph, limits) <= 2


def test_convenience_families(limits):
    assert chromatic_number(gen_cycle(5).graph, limits) == 3
    assert chromatic_number(gen_complete(4).graph, limits) == 4
    with pytest.raises(ValueError):
        gen_cycle(2)


def test_perfect_predictions_have_zero_error(limits):
    instance = attach_predictions(gen_cycle(6), PredictionModel.perfect(), limits=limits)
    assert is_optimal_labeling(instance.graph, instance.predictions, limits)
    assert prediction_error(instance, limits).eta == 0


def test_zero_rate_corruption_is_perfect(limits):
    base = gen_random(10, 0.4, 5)
    perfect = attach_predictions(base, PredictionModel.perfect(), limits=limits)
    corrupted = attach_predictions(base, PredictionModel.corrupted(0.0), seed=9, limits=limits)
    assert corrupted.predictions == perfect.predictions


def test_full_corruption_on_triangle(limits):
    triangle = gen_complete(3)
    perfect = attach_predictions(triangle, PredictionModel.perfect(), limits=limits)
    corrupted = attach_predictions(triangle, PredictionModel.corrupted(1.0), seed=4, limits=limits)
    assert all(corrupted.predictions[v] != perfect.predictions[v] for v in range(3))
    assert set(corrupted.predictions.values()) <= {"c0", "c1", "c2", "c3"}
    assert prediction_error(corrupted, limits).eta <= 3


def test_corruption_rate_matches_on_average(limits):
    base = gen_random(10, 0.3, 0)
    perfect = attach_predictions(base, PredictionModel.perfect(), limits=limits).predictions
    changed = 0
    for seed in range(120):
        corrupted = attach_predictions(
            base, PredictionModel.corrupted(0.3), seed=seed, limits=limits
        ).predictions
        changed += sum(corrupted[v] != perfect[v] for v in range(10))
    assert abs(changed / 1200 - 0.3) <= 0.1


def test_blockwise_and_none_models():
    base = gen_cycle(4)
    labels = {0: "x", 1: "y", 2: "x", 3: "y"}
    assert attach_predictions(base, PredictionModel.blockwise(labels)).predictions == labels
    assert attach_predictions(base, PredictionModel.none()).predictions is None
    with pytest.raises(ValueError):
        PredictionModel(kind="blockwise")
    with pytest.raises(ValueError):
        PredictionModel.corrupted(1.5)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("perfect", PredictionModel.perfect()),
        ("none", PredictionModel.none()),
        ("corrupted:0.25", PredictionModel.corrupted(0.25)),
    ],
)
def test_prediction_model_parse(text, expected):
    assert PredictionModel.parse(text) == expected


@pytest.mark.parametrize("text", ["corrupted", "corrupted:x", "perfect:1", "noisy"])
def test_prediction_model_parse_rejects(text):
    with pytest.raises(ValueError):
        PredictionModel.parse(text)


def test_generate_by_family_name():
    instance, scripts = generate("kkblocks", {"k": "3"})
    assert instance.n == 9 and scripts is None
    instance, scripts = generate("singletons", {"t": 2})
    assert instance.n == 2 and len(scripts) == 2
    assert generate("random", {"n": "8", "p": "0.5", "seed": "3"})[0] == gen_random(8, 0.5, 3)
    with pytest.raises(ValueError, match="unknown family"):
        generate("petersen", {})
    with pytest.raises(ValueError, match="missing k"):
        generate("kkblocks", {})
    with pytest.raises(ValueError, match="got n"):
        generate("kkblocks", {"k": "2", "n": "3"})


def test_from_networkx_accepts_generated_graphs():
    assert Graph.from_networkx(nx.cycle_graph(4)).edge_list() == [(0, 1), (0, 3), (1, 2), (2, 3)]
