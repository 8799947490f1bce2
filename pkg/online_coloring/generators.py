"""Instance families.

The adversarial families are exact constructions. Random instances draw from
`numpy.random.default_rng(seed)` (PCG64): the first draw seeds the networkx edge
sampler, the following draws give the reveal order, so the same parameters and
seed always give the same instance.
"""

from collections.abc import Callable, Mapping
from dataclasses import dataclass
from typing import Any, Literal

import networkx as nx
import numpy as np

from .config import OracleLimits
from .graph import Color, ColorLabel, Graph, OnlineInstance, build_graph
from .oracle import enumerate_optimal_partitions

CrownVariant = Literal["a", "b"]
PredictionKind = Literal["perfect", "corrupted", "blockwise", "none"]
Script = list[Color]


def _identity_order(graph: Graph) -> OnlineInstance:
    return OnlineInstance(graph=graph, order=tuple(range(graph.n)))


def gen_crown(n: int, variant: CrownVariant = "a") -> OnlineInstance:
    """K_{n,n} minus a perfect matching, revealed v_1, u_1, v_2, u_2, ...

    v_i is vertex 2(i-1) and u_i is vertex 2(i-1)+1, so the order is the identity.
    Variant "a" makes FirstFit use n colors: every pair (v_i, u_i) is non-adjacent
    and sees every color used by earlier pairs. Variant "b" adds the edge v_1 u_1,
    after which FirstFit needs only 2 colors, while the suffix without v_1, u_1 is
    variant "a" on n-1 pairs.
    """
    if n < 2:
        raise ValueError(f"crown instances need n >= 2, got {n}")
    if variant not in ("a", "b"):
        raise ValueError(f"unknown crown variant {variant!r}")
    edges = [
        (2 * i, 2 * j + 1) for i in range(n) for j in range(n) if i != j
    ]
    if variant == "b":
        edges.append((0, 1))
    return _identity_order(build_graph(2 * n, edges))


def gen_kk_blocks(k: int) -> OnlineInstance:
    """k disjoint copies of K_k whose first vertices are joined to the first block's.

    Revealed block by block; every vertex of block i is predicted "c<i>".
    """
    if k < 2:
        raise ValueError(f"block instances need k >= 2, got {k}")
    edges = [
        (block * k + a, block * k + b)
        for block in range(k)
        for a in range(k)
        for b in range(a + 1, k)
    ]
    edges += [(0, block * k) for block in range(1, k)]
    predictions = {v: f"c{v // k + 1}" for v in range(k * k)}
    return _identity_order(build_graph(k * k, edges)).with_predictions(predictions)


def gen_singletons(t: int) -> tuple[OnlineInstance, list[Script]]:
    """tK_1 plus t scripts: script i uses c_i^0 on the first i vertices, then fresh colors."""
    if t < 1:
        raise ValueError(f"singleton instances need t >= 1, got {t}")
    scripts = [
        [Color(f"c{i}", 0)] * i + [Color(f"c{i}", rank) for rank in range(1, t - i + 1)]
        for i in range(1, t + 1)
    ]
    return _identity_order(build_graph(t, [])), scripts


def _shuffled(graph: Graph, rng: np.random.Generator) -> OnlineInstance:
    order = tuple(int(v) for v in rng.permutation(graph.n))
    return OnlineInstance(graph=graph, order=order)


def _edge_seed(rng: np.random.Generator) -> int:
    return int(rng.integers(2**32))


def gen_random(n: int, p: float, seed: int) -> OnlineInstance:
    """G(n, p) with a uniformly shuffled reveal order."""
    if not 0 <= p <= 1:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    graph = Graph.from_networkx(nx.gnp_random_graph(n, p, seed=_edge_seed(rng)))
    return _shuffled(graph, rng)


def gen_random_bipartite(left: int, right: int, p: float, seed: int) -> OnlineInstance:
    """Random bipartite graph on left + right vertices with a shuffled reveal order."""
    if not 0 <= p <= 1:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    g = nx.bipartite.random_graph(left, right, p, seed=_edge_seed(rng))
    return _shuffled(Graph.from_networkx(g), rng)


def gen_cycle(n: int) -> OnlineInstance:
    if n < 3:
        raise ValueError(f"cycles need n >= 3, got {n}")
    return _identity_order(Graph.from_networkx(nx.cycle_graph(n)))


def gen_complete(n: int) -> OnlineInstance:
    return _identity_order(Graph.from_networkx(nx.complete_graph(n)))


@dataclass(frozen=True, kw_only=True)
class PredictionModel:
    kind: PredictionKind
    rate: float = 0.0
    labels: Mapping[int, ColorLabel] | None = None

    def __post_init__(self):
        if not 0 <= self.rate <= 1:
            raise ValueError(f"corruption rate must lie in [0, 1], got {self.rate}")
        if self.kind == "blockwise" and self.labels is None:
            raise ValueError("blockwise predictions need an explicit label map")

    @classmethod
    def perfect(cls) -> "PredictionModel":
        return cls(kind="perfect")

    @classmethod
    def corrupted(cls, rate: float) -> "PredictionModel":
        return cls(kind="corrupted", rate=rate)

    @classmethod
    def blockwise(cls, labels: Mapping[int, ColorLabel]) -> "PredictionModel":
        return cls(kind="blockwise", labels=labels)

    @classmethod
    def none(cls) -> "PredictionModel":
        return cls(kind="none")

    @classmethod
    def parse(cls, text: str) -> "PredictionModel":
        """Parse "perfect", "none" or "corrupted:<rate>"."""
        kind, _, rate = text.partition(":")
        if kind == "corrupted" and rate:
            try:
                return cls.corrupted(float(rate))
            except ValueError as e:
                raise ValueError(f"invalid prediction model {text!r}: {e}") from None
        if kind == "perfect" and not rate:
            return cls.perfect()
        if kind == "none" and not rate:
            return cls.none()
        raise ValueError(
            f"invalid prediction model {text!r}, expected perfect, none or corrupted:<rate>"
        )


def attach_predictions(
    instance: OnlineInstance,
    model: PredictionModel,
    seed: int = 0,
    limits: OracleLimits | None = None,
) -> OnlineInstance:
    """
    Return `instance` carrying predictions drawn from `model`.

    Perfect predictions label class j of the first enumerated optimal partition
    "c<j>". Corrupted predictions start from those and replace each label, with
    probability `rate`, by a uniformly chosen different label among c0..c<chi-1>
    and the fresh label c<chi>.
    """
    if model.kind == "none":
        return instance.with_predictions(None)
    if model.kind == "blockwise":
        assert model.labels is not None
        return instance.with_predictions(dict(model.labels))

    partition = next(enumerate_optimal_partitions(instance.graph, limits))
    predictions = {
        v: f"c{index}"
        for index, members in enumerate(partition.classes)
        for v in members
    }
    if model.kind == "corrupted":
        palette = [f"c{index}" for index in range(partition.chi + 1)]
        rng = np.random.default_rng(seed)
        for v in range(instance.n):
            if rng.random() < model.rate:
                alternatives = [label for label in palette if label != predictions[v]]
                predictions[v] = alternatives[int(rng.integers(len(alternatives)))]
    return instance.with_predictions(predictions)


FAMILIES: dict[str, tuple[Callable[..., Any], dict[str, type]]] = {
    "crown-a": (lambda n: gen_crown(n, "a"), {"n": int}),
    "crown-b": (lambda n: gen_crown(n, "b"), {"n": int}),
    "kkblocks": (gen_kk_blocks, {"k": int}),
    "singletons": (gen_singletons, {"t": int}),
    "random": (gen_random, {"n": int, "p": float, "seed": int}),
    "random-bipartite": (
        gen_random_bipartite,
        {"left": int, "right": int, "p": float, "seed": int},
    ),
    "cycle": (gen_cycle, {"n": int}),
    "complete": (gen_complete, {"n": int}),
}


def generate(
    family: str, params: Mapping[str, str | int | float]
) -> tuple[OnlineInstance, list[Script] | None]:
    """Build a family member from (possibly textual) parameters; returns scripts for singletons."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}, expected one of {', '.join(FAMILIES)}")
    builder, types = FAMILIES[family]
    unknown = set(params) - set(types)
    if unknown:
        raise ValueError(f"family {family!r} takes {', '.join(types)}, got {', '.join(sorted(unknown))}")
    missing = set(types) - set(params)
    if missing:
        raise ValueError(f"family {family!r} is missing {', '.join(sorted(missing))}")
    built = builder(**{name: types[name](params[name]) for name in types})
    if isinstance(built, tuple):
        return built
    return built, None
