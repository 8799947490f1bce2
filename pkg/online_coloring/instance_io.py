"""Canonical JSON instance documents.

    {"n": 3, "edges": [[0, 1]], "order": [2, 0, 1],
     "predictions": {"0": "c0", "1": "c1", "2": "c0"} | null,
     "scripts": [["c1#0", "c1#1", "c1#2"], ...]}

`predictions` and `scripts` are optional. The shape is checked with jsonschema,
the graph and permutation semantics afterwards; every error names the offending
JSON path.
"""

import json
from collections.abc import Sequence
from dataclasses import dataclass

from jsonschema import Draft202012Validator
from jsonschema.exceptions import best_match

from .errors import GraphValidationError, InstanceFormatError
from .graph import PALETTE_SEPARATOR, Color, OnlineInstance, build_graph

INSTANCE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["n", "edges", "order"],
    "additionalProperties": False,
    "properties": {
        "n": {"type": "integer", "minimum": 0},
        "edges": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {"type": "integer"},
                "minItems": 2,
                "maxItems": 2,
            },
        },
        "order": {"type": "array", "items": {"type": "integer"}},
        "predictions": {
            "type": ["object", "null"],
            "additionalProperties": {"type": "string", "minLength": 1},
        },
        "scripts": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "string"}},
        },
    },
}

_validator = Draft202012Validator(INSTANCE_SCHEMA)


@dataclass(frozen=True, kw_only=True)
class InstanceDocument:
    instance: OnlineInstance
    scripts: tuple[tuple[Color, ...], ...] | None = None


def _load(data: bytes | str) -> dict:
    try:
        document = json.loads(data)
    except json.JSONDecodeError as e:
        raise InstanceFormatError(
            f"invalid JSON: {e.msg} at line {e.lineno} column {e.colno}"
        ) from None
    error = best_match(_validator.iter_errors(document))
    if error is not None:
        raise InstanceFormatError(error.message, error.json_path)
    return document


def _graph(n: int, edges: list[list[int]]):
    pairs = [(int(u), int(v)) for u, v in edges]
    try:
        return build_graph(n, pairs)
    except GraphValidationError as e:
        index = pairs.index(e.pair) if e.pair in pairs else 0
        raise InstanceFormatError(
            f"invalid edge: {e.message}", f"$.edges[{index}]"
        ) from None


def _order(n: int, order: list[int]) -> tuple[int, ...]:
    if sorted(order) != list(range(n)):
        raise InstanceFormatError(
            f"order not a permutation of 0..{n - 1}", "$.order"
        )
    return tuple(int(v) for v in order)


def _predictions(n: int, raw: dict[str, str] | None) -> dict[int, str] | None:
    if raw is None:
        return None
    predictions: dict[int, str] = {}
    for key, label in raw.items():
        path = f"$.predictions['{key}']"
        if not key.isdecimal() or str(int(key)) != key or int(key) >= n:
            raise InstanceFormatError(f"prediction for unknown vertex {key!r}", path)
        if PALETTE_SEPARATOR in label:
            raise InstanceFormatError(
                f"prediction label {label!r} must not contain {PALETTE_SEPARATOR!r}",
                path,
            )
        predictions[int(key)] = label
    for v in range(n):
        if v not in predictions:
            raise InstanceFormatError(f"missing prediction for vertex {v}", "$.predictions")
    return predictions


def _scripts(raw: list[list[str]] | None) -> tuple[tuple[Color, ...], ...] | None:
    if raw is None:
        return None
    scripts = []
    for i, script in enumerate(raw):
        colors = []
        for j, token in enumerate(script):
            try:
                colors.append(Color.parse(token))
            except ValueError as e:
                raise InstanceFormatError(str(e), f"$.scripts[{i}][{j}]") from None
        scripts.append(tuple(colors))
    return tuple(scripts)


def parse_document(data: bytes | str) -> InstanceDocument:
    """Parse an instance document, scripts included."""
    document = _load(data)
    n = int(document["n"])
    instance = OnlineInstance(
        graph=_graph(n, document["edges"]),
        order=_order(n, document["order"]),
        predictions=_predictions(n, document.get("predictions")),
    )
    return InstanceDocument(instance=instance, scripts=_scripts(document.get("scripts")))


def parse_instance(data: bytes | str) -> OnlineInstance:
    return parse_document(data).instance


def dump_instance(
    instance: OnlineInstance, scripts: Sequence[Sequence[Color]] | None = None
) -> str:
    """Serialize `instance` (and optional scripts) to the canonical one-line document."""
    document: dict = {
        "n": instance.n,
        "edges": [list(edge) for edge in instance.graph.edge_list()],
        "order": list(instance.order),
        "predictions": None
        if instance.predictions is None
        else {str(v): instance.predictions[v] for v in range(instance.n)},
    }
    if scripts is not None:
        document["scripts"] = [[str(color) for color in script] for script in scripts]
    return json.dumps(document) + "\n"
