"""Exact ground truth for small graphs.

Everything here is exhaustive search: the chromatic number, every optimal
partition (up to relabeling) and the prediction error eta. Graphs above the
configured limits are rejected with OracleLimitError, never approximated.
"""

import functools
import itertools
import logging
from collections.abc import Iterator, Mapping
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linear_sum_assignment

from .config import OracleLimits
from .errors import OracleLimitError
from .graph import ColorLabel, Graph, OnlineInstance

logger = logging.getLogger(__name__)

FRESH_LABEL_PREFIX = "~fresh"


@dataclass(frozen=True)
class OptimalPartition:
    """A partition of V into chi(G) independent sets, ordered by smallest member."""

    classes: tuple[frozenset[int], ...]

    @property
    def chi(self) -> int:
        return len(self.classes)

    def class_of(self, v: int) -> int:
        for index, members in enumerate(self.classes):
            if v in members:
                return index
        raise KeyError(v)


@dataclass(frozen=True, kw_only=True)
class EtaResult:
    """The prediction error together with the optimal coloring that realizes it."""

    eta: int
    witness_partition: OptimalPartition
    witness_assignment: Mapping[int, ColorLabel]

    def label_of(self, v: int) -> ColorLabel:
        return self.witness_assignment[self.witness_partition.class_of(v)]

    def witness_coloring(self) -> dict[int, ColorLabel]:
        return {
            v: self.witness_assignment[index]
            for index, members in enumerate(self.witness_partition.classes)
            for v in members
        }

    def errors_by_label(
        self, predictions: Mapping[int, ColorLabel]
    ) -> dict[ColorLabel, int]:
        """Wrong predictions per predicted label under the witness coloring."""
        witness = self.witness_coloring()
        errors = {label: 0 for label in predictions.values()}
        for v, label in predictions.items():
            if witness[v] != label:
                errors[label] += 1
        return errors


def _limits(limits: OracleLimits | None) -> OracleLimits:
    return limits if limits is not None else OracleLimits.from_env()


def _masks(graph: Graph) -> list[int]:
    masks = [0] * graph.n
    for u, v in graph.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def _members(mask: int) -> frozenset[int]:
    return frozenset(v for v in range(mask.bit_length()) if mask >> v & 1)


def greedy_clique(graph: Graph) -> frozenset[int]:
    """Grow a clique greedily, trying vertices by decreasing degree."""
    clique: list[int] = []
    for v in sorted(range(graph.n), key=lambda u: (-graph.degree(u), u)):
        if all(graph.has_edge(v, u) for u in clique):
            clique.append(v)
    return frozenset(clique)


def _k_coloring(graph: Graph, k: int) -> list[int] | None:
    """DSATUR-ordered backtracking for a proper k-coloring, or None."""
    n = graph.n
    if n == 0:
        return []
    if k <= 0:
        return None
    masks = _masks(graph)
    classes = [0] * k
    colors = [-1] * n

    def saturation(v: int, used: int) -> int:
        return sum(1 for c in range(used) if masks[v] & classes[c])

    def place(colored: int, used: int) -> bool:
        if colored == n:
            return True
        v = max(
            (u for u in range(n) if colors[u] < 0),
            key=lambda u: (saturation(u, used), graph.degree(u), -u),
        )
        # opening color `used` stands in for every unused color
        for c in range(min(used + 1, k)):
            if masks[v] & classes[c] == 0:
                classes[c] |= 1 << v
                colors[v] = c
                if place(colored + 1, max(used, c + 1)):
                    return True
                classes[c] &= ~(1 << v)
                colors[v] = -1
        return False

    return colors if place(0, 0) else None


@functools.lru_cache(maxsize=512)
def _solve(graph: Graph) -> tuple[int, tuple[int, ...]]:
    k = len(greedy_clique(graph))
    while True:
        colors = _k_coloring(graph, k)
        if colors is not None:
            logger.debug("chromatic number %d for n=%d, m=%d", k, graph.n, len(graph.edges))
            return k, tuple(colors)
        k += 1


def chromatic_number(graph: Graph, limits: OracleLimits | None = None) -> int:
    limits = _limits(limits)
    if graph.n > limits.chromatic:
        raise OracleLimitError(graph.n, limits.chromatic, "chromatic number")
    return _solve(graph)[0]


def optimal_coloring(
    graph: Graph, limits: OracleLimits | None = None
) -> dict[int, int]:
    """One proper chi(G)-coloring, colors numbered 0..chi-1."""
    limits = _limits(limits)
    if graph.n > limits.chromatic:
        raise OracleLimitError(graph.n, limits.chromatic, "chromatic number")
    return dict(enumerate(_solve(graph)[1]))


def enumerate_optimal_partitions(
    graph: Graph, limits: OracleLimits | None = None
) -> Iterator[OptimalPartition]:
    """Yield every partition of V into chi(G) independent sets exactly once.

    Vertices are placed in increasing id order and a new class may only be opened
    by its smallest vertex, so label permutations are never produced twice.
    """
    limits = _limits(limits)
    if graph.n > limits.enumeration:
        raise OracleLimitError(graph.n, limits.enumeration, "partition enumeration")
    chi = chromatic_number(graph, limits)
    n = graph.n
    masks = _masks(graph)
    classes: list[int] = []

    def extend(v: int) -> Iterator[OptimalPartition]:
        if chi - len(classes) > n - v:
            return
        if v == n:
            yield OptimalPartition(classes=tuple(_members(mask) for mask in classes))
            return
        for index, mask in enumerate(classes):
            if masks[v] & mask == 0:
                classes[index] = mask | 1 << v
                yield from extend(v + 1)
                classes[index] = mask
        if len(classes) < chi:
            classes.append(1 << v)
            yield from extend(v + 1)
            classes.pop()

    return extend(0)


def _fresh_labels(labels: list[ColorLabel], count: int) -> list[ColorLabel]:
    prefix = FRESH_LABEL_PREFIX
    while any(label.startswith(prefix) for label in labels):
        prefix = "~" + prefix
    return [f"{prefix}{j}" for j in range(count)]


def _candidate_columns(
    instance: OnlineInstance, chi: int
) -> tuple[list[ColorLabel], list[int]]:
    """Candidate labels (predicted ones plus chi fresh ones) and each vertex's predicted column."""
    predictions = instance.require_predictions()
    labels = instance.labels
    candidates = labels + _fresh_labels(labels, chi)
    column = {label: j for j, label in enumerate(candidates)}
    return candidates, [column[predictions[v]] for v in range(instance.n)]


def _agreement(
    partition: OptimalPartition, predicted: list[int], width: int
) -> np.ndarray:
    agreement = np.zeros((partition.chi, width), dtype=np.int64)
    for index, members in enumerate(partition.classes):
        for v in members:
            agreement[index, predicted[v]] += 1
    return agreement


def prediction_error(
    instance: OnlineInstance, limits: OracleLimits | None = None
) -> EtaResult:
    """eta(G): fewest wrong predictions over all optimal colorings and label choices.

    For every optimal partition the best injective class -> label assignment is a
    maximum-weight assignment on the class x label agreement matrix. Labels absent
    from the predictions all score zero, so chi fresh labels represent them.
    """
    instance.require_predictions()
    limits = _limits(limits)
    chi = chromatic_number(instance.graph, limits)
    candidates, predicted = _candidate_columns(instance, chi)

    best: EtaResult | None = None
    for partition in enumerate_optimal_partitions(instance.graph, limits):
        if partition.chi == 0:
            return EtaResult(eta=0, witness_partition=partition, witness_assignment={})
        agreement = _agreement(partition, predicted, len(candidates))
        rows, cols = linear_sum_assignment(agreement, maximize=True)
        eta = instance.n - int(agreement[rows, cols].sum())
        if best is None or eta < best.eta:
            best = EtaResult(
                eta=eta,
                witness_partition=partition,
                witness_assignment={
                    int(row): candidates[col] for row, col in zip(rows, cols, strict=True)
                },
            )
            if eta == 0:
                break
    assert best is not None
    return best


def prediction_error_bruteforce(
    instance: OnlineInstance, limits: OracleLimits | None = None
) -> EtaResult:
    """eta(G) by trying every injective class -> label assignment on every partition."""
    instance.require_predictions()
    limits = _limits(limits)
    chi = chromatic_number(instance.graph, limits)
    if chi > limits.assignment_chi:
        raise OracleLimitError(
            chi, limits.assignment_chi, "injective assignment search", quantity="chi"
        )
    candidates, predicted = _candidate_columns(instance, chi)

    best: EtaResult | None = None
    for partition in enumerate_optimal_partitions(instance.graph, limits):
        counts = _agreement(partition, predicted, len(candidates)).tolist()
        for choice in itertools.permutations(range(len(candidates)), chi):
            eta = instance.n - sum(counts[index][col] for index, col in enumerate(choice))
            if best is None or eta < best.eta:
                best = EtaResult(
                    eta=eta,
                    witness_partition=partition,
                    witness_assignment={
                        index: candidates[col] for index, col in enumerate(choice)
                    },
                )
    assert best is not None
    return best


def is_optimal_labeling(
    graph: Graph,
    predictions: Mapping[int, ColorLabel],
    limits: OracleLimits | None = None,
) -> bool:
    """True iff the predictions, read as a coloring, are proper and use chi(G) labels."""
    if any(predictions[u] == predictions[v] for u, v in graph.edges):
        return False
    return len(set(predictions.values())) == chromatic_number(graph, limits)
