"""End-to-end checks of the proven bounds and the tightness constructions."""

import io

import pytest

from online_coloring.colorers import (
    a_prime,
    combine,
    first_fit,
    first_fit_predictions,
    run,
    scripted_colorer,
)
from online_coloring.config import OracleLimits
from online_coloring.experiment import (
    AlgorithmSpec,
    ExperimentConfig,
    InstanceSource,
    run_experiment,
    write_report,
)
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
)
from online_coloring.graph import suffix_instance
from online_coloring.instance_io import dump_instance
from online_coloring.oracle import (
    chromatic_number,
    is_optimal_labeling,
    prediction_error,
    prediction_error_bruteforce,
)
from online_coloring.structure import extract_clique_partition, verify_partition

RATES = [0.0, 0.3, 0.7]


def _random_case(seed: int):
    return gen_random(10 + seed % 21, [0.2, 0.5, 0.8][seed % 3], seed)


def _family_cases():
    cases = [gen_crown(n, variant) for n in range(2, 7) for variant in ("a", "b")]
    cases += [gen_kk_blocks(k) for k in (2, 3, 4)]
    cases += [gen_cycle(n) for n in (5, 6, 9)]
    cases += [gen_complete(n) for n in (2, 5)]
    return cases


@pytest.mark.parametrize(
    "instance",
    [_random_case(seed) for seed in range(200)] + _family_cases(),
)
def test_first_fit_clique_partition(instance):
    result = run(first_fit(), instance)
    if result.distinct_colors < 2:
        return
    partition = extract_clique_partition(instance.graph, result)
    check = verify_partition(instance.graph, partition)
    assert check.ok, check.reasons
    assert 0 <= partition.q <= partition.x - 2
    assert partition.size == partition.x + partition.q


def _predicted_case(seed: int):
    rate = RATES[seed % 3]
    base = gen_random(6 + seed % 7, 0.4, seed)
    model = PredictionModel.perfect() if rate == 0 else PredictionModel.corrupted(rate)
    return attach_predictions(base, model, seed=seed), rate


@pytest.mark.parametrize("seed", range(100))
def test_first_fit_predictions_within_eta_plus_chi(seed):
    instance, rate = _predicted_case(seed)
    chi = chromatic_number(instance.graph)
    eta = prediction_error(instance).eta
    colors = run(first_fit_predictions(), instance).distinct_colors
    assert colors <= eta + chi
    if rate == 0:
        assert eta == 0
        assert colors == chi


@pytest.mark.parametrize("k", [2, 3, 4])
def test_block_construction_is_tight(k):
    instance = gen_kk_blocks(k)
    limits = OracleLimits(chromatic=20, enumeration=16)
    assert run(first_fit_predictions(), instance).distinct_colors == k * k
    assert chromatic_number(instance.graph, limits) == k
    assert prediction_error(instance, limits).eta == k * (k - 1)


@pytest.mark.parametrize("seed", range(100))
def test_combination_within_twice_the_best(seed):
    instance, _ = _predicted_case(seed)
    ffp = run(first_fit_predictions(), instance).distinct_colors
    ff = run(first_fit(), instance).distinct_colors
    combined = combine([first_fit_predictions, first_fit], instance)
    assert combined.distinct_colors <= 2 * min(ffp, ff)
    assert combined.sub_counts == (ffp, ff)


@pytest.mark.parametrize("t", [2, 3, 4, 5])
def test_combination_bound_is_tight(t):
    instance, scripts = gen_singletons(t)
    factories = [lambda script=script: scripted_colorer(script) for script in scripts]
    standalone = [run(factory(), instance).distinct_colors for factory in factories]
    assert min(standalone) == 1
    assert combine(factories, instance).distinct_colors == t * min(standalone)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_first_fit_is_not_monotone(n):
    instance = gen_crown(n, "b")
    assert run(first_fit(), instance).distinct_colors == 2
    assert run(first_fit(), suffix_instance(instance, 3)).distinct_colors == n - 1


@pytest.mark.parametrize("n", range(2, 7))
def test_first_fit_worst_case_on_crowns(n):
    instance = gen_crown(n, "a")
    assert run(first_fit(), instance).distinct_colors == n
    assert chromatic_number(instance.graph) == 2


def _bipartite_cases():
    cases = [gen_crown(n, "a") for n in range(2, 7)]
    cases += [gen_random_bipartite(5, 6, 0.4, seed) for seed in range(25)]
    return [case for case in cases if case.graph.edges]


@pytest.mark.parametrize("instance", _bipartite_cases())
def test_a_prime_is_optimal_with_perfect_predictions(instance):
    predicted = attach_predictions(instance, PredictionModel.perfect())
    assert len(predicted.labels) == 2
    result = a_prime(2, first_fit, predicted)
    assert result.switch_position is None
    assert result.distinct_colors == 2


@pytest.mark.parametrize("seed", range(40))
def test_a_prime_bound_with_corrupted_predictions(seed):
    instance = attach_predictions(
        gen_random_bipartite(5, 6, 0.4, seed), PredictionModel.corrupted(0.4), seed=seed
    )
    k = max(chromatic_number(instance.graph), 1)
    result = a_prime(k, first_fit, instance)
    if result.switch_position is None:
        assert result.distinct_colors <= k
        return
    suffix = suffix_instance(instance, result.switch_position)
    best_on_suffix = min(
        run(first_fit_predictions(), suffix).distinct_colors,
        run(first_fit(), suffix).distinct_colors,
    )
    assert result.distinct_colors <= k + 2 * best_on_suffix


def test_a_prime_within_three_times_the_best_on_blocks():
    instance = gen_kk_blocks(2)
    result = a_prime(2, first_fit, instance)
    best = min(
        run(first_fit_predictions(), instance).distinct_colors,
        run(first_fit(), instance).distinct_colors,
    )
    assert result.switch_position == 2
    assert result.distinct_colors <= 3 * best


def _eta_cases():
    cases = []
    for seed in range(40):
        rate = [0.0, 0.2, 0.5][seed % 3]
        base = gen_random(6 + seed % 5, 0.45, 1000 + seed)
        model = PredictionModel.perfect() if rate == 0 else PredictionModel.corrupted(rate)
        cases.append(attach_predictions(base, model, seed=seed))
    return cases


@pytest.mark.parametrize("instance", _eta_cases())
def test_eta_paths_agree(instance):
    if chromatic_number(instance.graph) > 4:
        pytest.skip("brute force restricted to chi <= 4 here")
    eta = prediction_error(instance).eta
    assert eta == prediction_error_bruteforce(instance).eta
    assert (eta == 0) == is_optimal_labeling(instance.graph, instance.predictions)


def test_generation_and_reports_are_reproducible():
    assert dump_instance(gen_random(12, 0.3, 42)) == dump_instance(gen_random(12, 0.3, 42))
    specs = ["random:n=9,p=0.4,seed=2", "kkblocks:k=2", "crown-b:n=4"]

    def report() -> str:
        config = ExperimentConfig(
            sources=tuple(
                InstanceSource.from_generator(spec, predictions=PredictionModel.corrupted(0.3), seed=7)
                for spec in specs
            ),
            algorithms=tuple(AlgorithmSpec.parse(a) for a in ["ff", "ffp", "combine:ffp+ff", "aprime:ff"]),
        )
        out = io.StringIO()
        write_report(run_experiment(config), out)
        return out.getvalue()

    assert report() == report()
