"""Command-line interface.

Exit codes: 0 on success, 1 on runtime failures (I/O, parsing, non-convergence),
2 on usage errors (bad flags, invalid configuration, wrong input arity or range).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from . import encoding, experiments, persistence
from .errors import AQPNNError, ConfigError, LengthMismatch, UnknownDataset
from .inference import MODES, select_response
from .training import TrainConfig

EXIT_OK, EXIT_RUNTIME, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("AQPNN_SEED")
    if env is None or env == "":
        return 0
    try:
        seed = int(env)
    except ValueError:
        raise UsageError(f"AQPNN_SEED must be an integer, got {env!r}") from None
    if seed < 0:
        raise UsageError("AQPNN_SEED must be non-negative")
    return seed


def _emit(payload: dict, table: str, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(table)


def cmd_repro(args) -> int:
    model, report = experiments.repro(
        args.name,
        seed=_seed(args),
        gamma=args.gamma,
        max_epochs=args.max_epochs,
        mode=args.mode,
    )
    if args.out:
        persistence.save_model(model, args.out)
    _emit(report.to_dict(), report.to_table(), args.format)
    return EXIT_OK


def cmd_train(args) -> int:
    dataset = encoding.load_csv(args.data, label_column=args.label_column)
    config = TrainConfig(
        gamma=args.gamma,
        seed=_seed(args),
        max_epochs=args.max_epochs,
        init="uniform",
    )
    model = experiments.train_dataset(dataset, config)
    persistence.save_model(model, args.out)
    report = experiments.evaluate(dataset, model, args.mode or "classify")
    _emit(report.to_dict(), report.to_table(), args.format)
    return EXIT_OK


def cmd_predict(args) -> int:
    model = persistence.load_model(args.model)
    try:
        inputs = encoding.parse_inputs(args.input, basis=args.basis)
    except AQPNNError as exc:
        raise UsageError(str(exc)) from None
    if len(inputs) != model.n:
        raise UsageError(f"model expects {model.n} input value(s), got {len(inputs)}")
    rep = select_response(model, inputs, args.mode)
    label = model.label_for(rep.response) if args.mode == "classify" else None
    payload = {
        "mode": rep.mode,
        "weighted_sum": rep.weighted_sum.tolist(),
        "selected_index": rep.selected_index,
        "response": rep.response.tolist(),
        "label": label,
        "scores": [s for _, s in rep.scores],
    }
    lines = [f"response: [{rep.response[0]:.6f}, {rep.response[1]:.6f}]"]
    if label is not None:
        lines.append(f"label: {label}")
    lines.append(f"selected operator: F{rep.selected_index + 1}")
    lines.append("scores: " + ", ".join(f"F{j + 1}={s:.6g}" for j, s in rep.scores))
    table = "\n".join(lines)
    _emit(payload, table, args.format)
    return EXIT_OK


def cmd_compare(args) -> int:
    source = args.dataset
    if source in encoding.BUILTIN_NAMES:
        dataset = encoding.builtin_dataset(source)
        config = experiments.repro_config(source, _seed(args), args.gamma, args.max_epochs)
    elif Path(source).exists():
        dataset = encoding.load_csv(source, label_column=args.label_column)
        config = TrainConfig(
            gamma=args.gamma if args.gamma is not None else 0.1,
            seed=_seed(args),
            max_epochs=args.max_epochs,
            init="uniform",
        )
    else:
        raise UnknownDataset(f"{source!r} is neither a built-in dataset nor an existing file")
    result = experiments.compare(dataset, config, args.mode)
    _emit(result, experiments.compare_table(result), args.format)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aqpnn",
        description="Single-neuron quantum perceptron with self-constructed activation operators.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log training progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, gamma_default):
        p.add_argument("--gamma", type=float, default=gamma_default, help="learning rate, 0 < gamma < 1")
        p.add_argument("--seed", type=int, default=None, help="RNG seed (falls back to $AQPNN_SEED, then 0)")
        p.add_argument("--max-epochs", type=int, default=1000)
        p.add_argument("--mode", choices=MODES, default=None)
        p.add_argument("--format", choices=("json", "table"), default="json")

    p = sub.add_parser("repro", help="reproduce a built-in experiment")
    p.add_argument("name", choices=encoding.BUILTIN_NAMES)
    common(p, None)
    p.add_argument("--out", help="also write the trained model JSON here")
    p.set_defaults(func=cmd_repro)

    p = sub.add_parser("train", help="train on a two-class CSV file")
    p.add_argument("data", help="CSV with a header row, feature columns in [-1, 1] and a label column")
    common(p, 0.1)
    p.add_argument("--label-column", default="label")
    p.add_argument("--out", required=True, help="model JSON output path")
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("predict", help="compute the network response for one input")
    p.add_argument("model", help="model JSON file")
    p.add_argument("input", help="comma-separated reals, one per input qubit (use -- before negative values)")
    p.add_argument("--mode", choices=MODES, default="classify")
    p.add_argument("--basis", action="store_true", help="treat values as bits: 0 -> |0>, 1 -> |1>")
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("compare", help="compare against a classical one-neuron perceptron")
    p.add_argument("dataset", help=f"built-in name ({', '.join(encoding.BUILTIN_NAMES)}) or CSV path")
    common(p, None)
    p.add_argument("--label-column", default="label")
    p.set_defaults(func=cmd_compare)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        return args.func(args)
    except (UsageError, ConfigError, LengthMismatch) as exc:
        print(f"aqpnn: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (AQPNNError, OSError) as exc:
        print(f"aqpnn: error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
