"""Experiment runner: every algorithm on every instance, with oracle quantities and bounds."""

import csv
import logging
from collections.abc import Iterable, Sequence
from dataclasses import asdict, dataclass, field, fields
from enum import IntEnum
from pathlib import Path
from typing import Literal, TextIO

from .colorers import (
    COLORERS_BY_NAME,
    RunResult,
    a_prime,
    colorer_factory,
    combine,
    make_colorer,
    run,
    scripted_colorer,
)
from .config import OracleLimits
from .errors import ColoringError
from .generators import FAMILIES, PredictionModel, attach_predictions, generate
from .graph import Color, OnlineInstance, suffix_instance
from .instance_io import parse_document
from .oracle import chromatic_number, prediction_error

logger = logging.getLogger(__name__)


class ExitCode(IntEnum):
    OK = 0
    BOUND_VIOLATED = 1
    USAGE = 2
    INVALID_INPUT = 3
    IO_ERROR = 4
    ROW_ERRORS = 5


AlgorithmKind = Literal["single", "combine", "scripts", "aprime"]


@dataclass(frozen=True)
class AlgorithmSpec:
    """One report algorithm: `ff`, `combine:ffp+ff`, `combine:scripts` or `aprime:ff`."""

    text: str
    kind: AlgorithmKind
    names: tuple[str, ...] = ()

    @classmethod
    def parse(cls, text: str) -> "AlgorithmSpec":
        head, _, tail = text.partition(":")
        if head == "combine" and tail == "scripts":
            return cls(text, "scripts")
        if head == "combine" and tail:
            names = tuple(tail.split("+"))
            kind: AlgorithmKind = "combine"
        elif head == "aprime" and tail:
            names = (tail,)
            kind = "aprime"
        elif not tail:
            names = (head,)
            kind = "single"
        else:
            raise ValueError(f"invalid algorithm {text!r}")
        for name in names:
            if name not in COLORERS_BY_NAME:
                raise ValueError(
                    f"unknown colorer {name!r} in {text!r}, expected one of {', '.join(COLORERS_BY_NAME)}"
                )
        return cls(text, kind, names)


@dataclass(frozen=True, kw_only=True)
class InstanceSource:
    name: str
    instance: OnlineInstance
    scripts: tuple[tuple[Color, ...], ...] | None = None

    @classmethod
    def from_file(cls, path: str | Path) -> "InstanceSource":
        document = parse_document(Path(path).read_bytes())
        return cls(name=str(path), instance=document.instance, scripts=document.scripts)

    @classmethod
    def from_generator(
        cls,
        spec: str,
        *,
        predictions: PredictionModel | None = None,
        seed: int = 0,
        limits: OracleLimits | None = None,
    ) -> "InstanceSource":
        """Build `<family>:key=value,...`; random families without a seed use `seed`."""
        family, params = parse_generator_spec(spec)
        if family in FAMILIES and "seed" in FAMILIES[family][1]:
            params.setdefault("seed", str(seed))
        instance, scripts = generate(family, params)
        if predictions is not None:
            instance = attach_predictions(instance, predictions, seed, limits)
        return cls(
            name=spec,
            instance=instance,
            scripts=None if scripts is None else tuple(tuple(s) for s in scripts),
        )


def parse_generator_spec(spec: str) -> tuple[str, dict[str, str]]:
    family, _, rest = spec.partition(":")
    params: dict[str, str] = {}
    for item in filter(None, rest.split(",")):
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise ValueError(f"invalid generator parameter {item!r} in {spec!r}")
        params[key.strip()] = value.strip()
    return family, params


@dataclass(frozen=True, kw_only=True)
class ExperimentConfig:
    sources: tuple[InstanceSource, ...]
    algorithms: tuple[AlgorithmSpec, ...]
    compute_chi: bool = True
    compute_eta: bool = True
    k: int | None = None
    limits: OracleLimits = field(default_factory=OracleLimits.from_env)

    def __post_init__(self):
        if not self.sources:
            raise ColoringError("no instances")
        if not self.algorithms:
            raise ColoringError("no algorithms")


@dataclass(kw_only=True)
class ReportRow:
    instance: str
    n: int
    algorithm: str
    distinct_colors: int | None = None
    chi: int | None = None
    eta: int | None = None
    bound_eta_chi: int | None = None
    bound_combined: int | None = None
    bound_aprime: int | None = None
    competitive_ratio: float | None = None
    ratio_eta_chi: float | None = None
    bound_satisfied: bool | None = None
    error: str | None = None

    def as_csv_dict(self) -> dict[str, str]:
        def cell(value) -> str:
            if value is None:
                return ""
            if isinstance(value, bool):
                return "true" if value else "false"
            if isinstance(value, float):
                return f"{value:.4f}"
            return str(value)

        return {key: cell(value) for key, value in asdict(self).items()}


REPORT_HEADER = [f.name for f in fields(ReportRow)]


@dataclass
class _OracleValues:
    chi: int | None = None
    eta: int | None = None
    error: str | None = None


def _oracle(source: InstanceSource, config: ExperimentConfig) -> _OracleValues:
    values = _OracleValues()
    try:
        if config.compute_chi or config.compute_eta:
            values.chi = chromatic_number(source.instance.graph, config.limits)
        if config.compute_eta and source.instance.predictions is not None:
            values.eta = prediction_error(source.instance, config.limits).eta
    except ColoringError as e:
        values.error = e.message
        logger.warning("%s: %s", source.name, e.message)
    return values


def _standalone(factories, instance: OnlineInstance) -> list[int]:
    return [run(factory(), instance).distinct_colors for factory in factories]


def _run_algorithm(
    spec: AlgorithmSpec,
    source: InstanceSource,
    oracle: _OracleValues,
    config: ExperimentConfig,
    row: ReportRow,
) -> RunResult:
    instance = source.instance
    if spec.kind == "single":
        return run(make_colorer(spec.names[0]), instance)

    if spec.kind in ("combine", "scripts"):
        if spec.kind == "scripts":
            if source.scripts is None:
                raise ColoringError(f"instance {source.name} carries no scripts")
            factories = [
                lambda script=script: scripted_colorer(script) for script in source.scripts
            ]
        else:
            factories = [colorer_factory(name) for name in spec.names]
        result = combine(factories, instance)
        row.bound_combined = len(factories) * min(_standalone(factories, instance))
        return result

    k = config.k if config.k is not None else oracle.chi
    if k is None:
        raise ColoringError("aprime needs --k or an oracle chromatic number")
    classical = colorer_factory(spec.names[0])
    result = a_prime(k, classical, instance)
    pair = [colorer_factory("ffp"), classical]
    if result.switch_position is None:
        row.bound_combined = row.bound_aprime = k
    else:
        row.bound_combined = 3 * min(_standalone(pair, instance))
        suffix = suffix_instance(instance, result.switch_position)
        row.bound_aprime = k + 2 * min(_standalone(pair, suffix))
    return result


def _evaluate(
    spec: AlgorithmSpec,
    source: InstanceSource,
    oracle: _OracleValues,
    config: ExperimentConfig,
) -> ReportRow:
    row = ReportRow(
        instance=source.name,
        n=source.instance.n,
        algorithm=spec.text,
        chi=oracle.chi,
        eta=oracle.eta,
        error=oracle.error,
    )
    try:
        result = _run_algorithm(spec, source, oracle, config, row)
    except (ColoringError, ValueError) as e:
        row.error = str(e)
        logger.warning("%s / %s: %s", source.name, spec.text, e)
        return row

    row.distinct_colors = result.distinct_colors
    if spec.text == "ffp" and oracle.chi is not None and oracle.eta is not None:
        row.bound_eta_chi = oracle.eta + oracle.chi
    if oracle.chi:
        row.competitive_ratio = result.distinct_colors / oracle.chi
        if oracle.eta is not None:
            row.ratio_eta_chi = 1 + oracle.eta / oracle.chi
    # aprime rows are checked against k + 2·min over the suffix, not 3·min
    checked = row.bound_aprime if spec.kind == "aprime" else row.bound_combined
    bounds = [b for b in (row.bound_eta_chi, checked) if b is not None]
    if bounds:
        row.bound_satisfied = all(result.distinct_colors <= b for b in bounds)
    logger.info(
        "%s / %s: %d colors (bound satisfied: %s)",
        source.name,
        spec.text,
        result.distinct_colors,
        row.bound_satisfied,
    )
    return row


def run_experiment(config: ExperimentConfig) -> list[ReportRow]:
    """Rows for every (instance, algorithm) pair, ordered by instance then algorithm.

    Oracle and colorer errors are recorded in the row's `error` column; the run
    always continues with the next pair.
    """
    rows: list[ReportRow] = []
    for source in config.sources:
        oracle = _oracle(source, config)
        rows.extend(_evaluate(spec, source, oracle, config) for spec in config.algorithms)
    rows.sort(key=lambda row: (row.instance, row.algorithm))
    return rows


def write_report(rows: Iterable[ReportRow], out: TextIO) -> None:
    writer = csv.DictWriter(out, fieldnames=REPORT_HEADER, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row.as_csv_dict())


def exit_code(rows: Sequence[ReportRow]) -> ExitCode:
    """BOUND_VIOLATED wins over ROW_ERRORS; OK only when neither occurs."""
    if any(row.bound_satisfied is False for row in rows):
        return ExitCode.BOUND_VIOLATED
    if any(row.error for row in rows):
        return ExitCode.ROW_ERRORS
    return ExitCode.OK
