"""
Command line front end.

Results go to standard output (or --out), diagnostics to standard error. Every
subcommand is deterministic: the same input and flags give byte-identical output.
"""

import argparse
import json
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from dotenv import load_dotenv

from .colorers import (
    COLORERS_BY_NAME,
    RunResult,
    StepRecord,
    a_prime,
    colorer_factory,
    combine,
    first_fit,
    make_colorer,
    run,
    scripted_colorer,
)
from .config import OracleLimits
from .errors import ColoringError
from .experiment import (
    AlgorithmSpec,
    ExitCode,
    ExperimentConfig,
    InstanceSource,
    exit_code,
    run_experiment,
    write_report,
)
from .generators import FAMILIES, PredictionModel
from .instance_io import InstanceDocument, dump_instance, parse_document
from .oracle import chromatic_number, prediction_error
from .structure import extract_clique_partition, verify_partition


def _read_document(path: str) -> InstanceDocument:
    data = sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()
    return parse_document(data)


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _trace_line(record: StepRecord) -> str:
    return json.dumps(
        {"step": record.step + 1, "vertex": record.vertex, "color": str(record.color)}
    )


def _run_output(result: RunResult, trace: bool) -> list[str]:
    lines = [_trace_line(record) for record in result.per_step] if trace else []
    lines.append(f"colors={result.distinct_colors}")
    return lines


def _limits(args: argparse.Namespace) -> OracleLimits:
    return OracleLimits.from_env(args.oracle_limit)


def cmd_gen(args: argparse.Namespace) -> ExitCode:
    model = None if args.predictions is None else PredictionModel.parse(args.predictions)
    source = InstanceSource.from_generator(
        f"{args.family}:{args.params}", predictions=model, seed=args.seed, limits=_limits(args)
    )
    _emit(dump_instance(source.instance, source.scripts), args.out)
    return ExitCode.OK


def cmd_run(args: argparse.Namespace) -> ExitCode:
    instance = _read_document(args.instance).instance
    result = run(make_colorer(args.algo), instance)
    _emit("\n".join(_run_output(result, args.trace)) + "\n", None)
    return ExitCode.OK


def cmd_combine(args: argparse.Namespace) -> ExitCode:
    document = _read_document(args.instance)
    if args.algos == "scripts":
        if document.scripts is None:
            raise ColoringError("the instance document carries no scripts")
        factories = [
            lambda script=script: scripted_colorer(script) for script in document.scripts
        ]
    else:
        factories = [colorer_factory(name) for name in args.algos.split(",")]
    result = combine(factories, document.instance)
    lines = _run_output(result, args.trace)
    lines.append(f"chosen={json.dumps(list(result.chosen_log))}")
    lines.append(f"sub_colors={json.dumps(list(result.sub_counts))}")
    _emit("\n".join(lines) + "\n", None)
    return ExitCode.OK


def cmd_aprime(args: argparse.Namespace) -> ExitCode:
    instance = _read_document(args.instance).instance
    k = args.k if args.k is not None else chromatic_number(instance.graph, _limits(args))
    result = a_prime(k, colorer_factory(args.classical), instance)
    lines = _run_output(result, args.trace)
    switch = "none" if result.switch_position is None else str(result.switch_position)
    lines.append(f"switch={switch}")
    lines.append(f"chosen={json.dumps(list(result.chosen_log))}")
    _emit("\n".join(lines) + "\n", None)
    return ExitCode.OK


def cmd_eta(args: argparse.Namespace) -> ExitCode:
    instance = _read_document(args.instance).instance
    result = prediction_error(instance, _limits(args))
    witness = result.witness_coloring()
    payload = {
        "chi": result.witness_partition.chi,
        "assignment": {
            str(index): label for index, label in sorted(result.witness_assignment.items())
        },
        "witness": {str(v): witness[v] for v in sorted(witness)},
    }
    _emit(f"eta={result.eta}\n{json.dumps(payload)}\n", None)
    return ExitCode.OK


def cmd_extract(args: argparse.Namespace) -> ExitCode:
    instance = _read_document(args.instance).instance
    partition = extract_clique_partition(instance.graph, run(first_fit(), instance))
    check = verify_partition(instance.graph, partition)
    payload = {
        "x": partition.x,
        "q": partition.q,
        "cliques": [sorted(clique) for clique in partition.cliques],
        "verified": check.ok,
        "reasons": list(check.reasons),
    }
    _emit(json.dumps(payload) + "\n", None)
    return ExitCode.OK if check else ExitCode.BOUND_VIOLATED


def cmd_experiment(args: argparse.Namespace) -> ExitCode:
    limits = _limits(args)
    model = None if args.predictions is None else PredictionModel.parse(args.predictions)
    sources = [InstanceSource.from_file(path) for path in args.instance]
    sources += [
        InstanceSource.from_generator(spec, predictions=model, seed=args.seed, limits=limits)
        for spec in args.generate
    ]
    config = ExperimentConfig(
        sources=tuple(sources),
        algorithms=tuple(AlgorithmSpec.parse(text) for text in args.algos.split(",") if text),
        compute_chi=not args.no_chi,
        compute_eta=not args.no_eta,
        k=args.k,
        limits=limits,
    )
    rows = run_experiment(config)
    if args.out is None or args.out == "-":
        write_report(rows, sys.stdout)
    else:
        with open(args.out, "w", newline="") as f:
            write_report(rows, f)
    return exit_code(rows)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--oracle-limit",
        type=int,
        default=None,
        help="largest n the exact oracle accepts (overrides OCL_ORACLE_LIMIT)",
    )
    common.add_argument("--seed", type=int, default=0, help="seed for random families and corruption")
    common.add_argument("-v", "--verbose", action="store_true", help="log every step to stderr")

    parser = argparse.ArgumentParser(
        prog="online_coloring",
        description="Learning-augmented online graph coloring.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", parents=[common], help="generate an instance document")
    gen.add_argument("--family", required=True, choices=sorted(FAMILIES))
    gen.add_argument("--params", default="", help="comma separated key=value pairs")
    gen.add_argument(
        "--predictions", default=None, help="perfect, none or corrupted:<rate>"
    )
    gen.add_argument("--out", default=None)
    gen.set_defaults(handler=cmd_gen)

    run_parser = sub.add_parser("run", parents=[common], help="run one online colorer")
    run_parser.add_argument(
        "--algo",
        required=True,
        choices=sorted(COLORERS_BY_NAME),
        help="; ".join(f"{name}: {spec.description}" for name, spec in COLORERS_BY_NAME.items()),
    )
    run_parser.add_argument("--instance", default="-")
    run_parser.add_argument("--trace", action="store_true")
    run_parser.set_defaults(handler=cmd_run)

    combine_parser = sub.add_parser(
        "combine", parents=[common], help="run the palette-separated combination"
    )
    combine_parser.add_argument(
        "--algos",
        required=True,
        help="comma separated colorer names, or 'scripts' for the document's scripts",
    )
    combine_parser.add_argument("--instance", default="-")
    combine_parser.add_argument("--trace", action="store_true")
    combine_parser.set_defaults(handler=cmd_combine)

    aprime = sub.add_parser(
        "aprime", parents=[common], help="follow predictions, then fall back to a combination"
    )
    aprime.add_argument("--k", type=int, default=None, help="chromatic number (oracle if omitted)")
    aprime.add_argument("--classical", default="ff", choices=sorted(COLORERS_BY_NAME))
    aprime.add_argument("--instance", default="-")
    aprime.add_argument("--trace", action="store_true")
    aprime.set_defaults(handler=cmd_aprime)

    eta = sub.add_parser("eta", parents=[common], help="compute the prediction error")
    eta.add_argument("--instance", default="-")
    eta.set_defaults(handler=cmd_eta)

    extract = sub.add_parser(
        "extract", parents=[common], help="extract the clique partition of a FirstFit run"
    )
    extract.add_argument("--instance", default="-")
    extract.set_defaults(handler=cmd_extract)

    experiment = sub.add_parser(
        "experiment", parents=[common], help="write a CSV report over instances and algorithms"
    )
    experiment.add_argument("--instance", action="append", default=[], help="instance file (repeatable)")
    experiment.add_argument(
        "--generate", action="append", default=[], help="generator spec <family>:key=value,... (repeatable)"
    )
    experiment.add_argument("--algos", default="ff,ffp")
    experiment.add_argument("--predictions", default=None, help="applied to generated instances")
    experiment.add_argument("--k", type=int, default=None)
    experiment.add_argument("--no-chi", action="store_true")
    experiment.add_argument("--no-eta", action="store_true")
    experiment.add_argument("--out", default=None)
    experiment.set_defaults(handler=cmd_experiment)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    load_dotenv()
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return int(args.handler(args))
    except OSError as e:
        sys.stderr.write(f"error: {e}\n")
        return ExitCode.IO_ERROR
    except (ColoringError, ValueError, KeyError) as e:
        message = e.args[0] if isinstance(e, KeyError) else str(e)
        sys.stderr.write(f"error: {message}\n")
        return ExitCode.INVALID_INPUT
