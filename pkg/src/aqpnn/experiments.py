"""Reproducible experiment runs and their JSON / Markdown reports."""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace

from . import algebra
from .baseline import classical_train
from .encoding import GATE_DATASETS, XOR_INIT_WEIGHT, Dataset, builtin_dataset
from .inference import select_response
from .training import Model, TrainConfig, train

CORRECT_TOL = 1e-6
CLASSICAL_EPOCHS = 1000
# iteration count reported for the phase-based quantum perceptron on XOR
ZHOU_XOR_ITERATIONS = 16

OVERLAP_NOTE = (
    "accuracy is measured on the 15 training patterns only; no held-out test set "
    "is defined for this task, so a generalization rate is not reported"
)


@dataclass(frozen=True)
class RunReport:
    experiment: str
    epochs_used: int
    unique_operators: int
    per_pattern: tuple[dict, ...]
    correct: int
    total: int
    mode: str
    config: dict
    notes: tuple[str, ...] = field(default=())

    @property
    def accuracy(self) -> float:
        return self.correct / self.total

    def to_dict(self) -> dict:
        out = {
            "experiment": self.experiment,
            "mode": self.mode,
            "epochs_used": self.epochs_used,
            "unique_operators": self.unique_operators,
            "accuracy": self.accuracy,
            "correct": self.correct,
            "total": self.total,
            "per_pattern": list(self.per_pattern),
            "config": self.config,
        }
        if self.notes:
            out["notes"] = list(self.notes)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_table(self) -> str:
        lines = [
            f"experiment: {self.experiment} ({self.mode} mode)",
            f"epochs used: {self.epochs_used}",
            f"unique activation operators: {self.unique_operators}",
            f"accuracy: {self.correct}/{self.total} = {self.accuracy:.4f}",
            "",
            "| # | weighted sum | operator | response | target | ok |",
            "|---|---|---|---|---|---|",
        ]
        for j, row in enumerate(self.per_pattern, start=1):
            lines.append(
                f"| {j} | {_fmt(row['weighted_sum'])} | F{row['operator_index'] + 1} | "
                f"{_fmt(row['response'])} | {_fmt(row['target'])} | {'yes' if row['correct'] else 'no'} |"
            )
        for note in self.notes:
            lines.append(f"\nnote: {note}")
        return "\n".join(lines)


def _fmt(q) -> str:
    return "[" + ", ".join(f"{v:.4f}" for v in q) + "]"


def default_mode(name: str) -> str:
    return "transform" if name in GATE_DATASETS else "classify"


def repro_config(name: str, seed: int = 0, gamma: float | None = None, max_epochs: int = 1000) -> TrainConfig:
    """Initialization used for each built-in experiment."""
    kwargs = {"seed": seed, "max_epochs": max_epochs}
    if gamma is not None:
        kwargs["gamma"] = gamma
    if name in GATE_DATASETS:
        return TrainConfig(init="identity", **kwargs)
    if name == "xor":
        return TrainConfig.with_weights([XOR_INIT_WEIGHT, XOR_INIT_WEIGHT], **kwargs)
    return TrainConfig(init="uniform", init_low=-1.0, init_high=1.0, **kwargs)


def train_dataset(dataset: Dataset, config: TrainConfig) -> Model:
    model = train(dataset.patterns, config)
    return replace(model, labels=dataset.class_labels)


def evaluate(dataset: Dataset, model: Model, mode: str, experiment: str | None = None) -> RunReport:
    rows = []
    correct = 0
    for p in dataset.patterns:
        rep = select_response(model, p.inputs, mode)
        ok = algebra.approx_eq(rep.response, p.target, CORRECT_TOL)
        correct += ok
        rows.append(
            {
                "inputs": [x.tolist() for x in p.inputs],
                "weighted_sum": rep.weighted_sum.tolist(),
                "operator_index": rep.selected_index,
                "response": rep.response.tolist(),
                "target": p.target.tolist(),
                "correct": ok,
            }
        )
    notes = (OVERLAP_NOTE,) if dataset.name == "overlap" else ()
    return RunReport(
        experiment=experiment or dataset.name,
        epochs_used=model.epochs_used,
        unique_operators=len(model.operators),
        per_pattern=tuple(rows),
        correct=correct,
        total=len(rows),
        mode=mode,
        config=model.config.to_dict(),
        notes=notes,
    )


def repro(name: str, seed: int = 0, gamma: float | None = None, max_epochs: int = 1000,
          mode: str | None = None) -> tuple[Model, RunReport]:
    dataset = builtin_dataset(name)
    model = train_dataset(dataset, repro_config(name, seed, gamma, max_epochs))
    return model, evaluate(dataset, model, mode or default_mode(name))


def compare(dataset: Dataset, config: TrainConfig, mode: str | None = None) -> dict:
    """Run the quantum perceptron and the classical baseline on one dataset."""
    model = train_dataset(dataset, config)
    report = evaluate(dataset, model, mode or default_mode(dataset.name))

    samples = [(f, dataset.class_index(j)) for j, f in enumerate(dataset.features)]
    perceptron, converged, epochs = classical_train(samples, rate=1.0, max_epochs=CLASSICAL_EPOCHS)
    classical_correct = sum(perceptron.predict(x) == y for x, y in samples)
    return {
        "dataset": dataset.name,
        "aqpnn": {
            "epochs_used": report.epochs_used,
            "unique_operators": report.unique_operators,
            "accuracy": report.accuracy,
        },
        "classical": {
            "converged": converged,
            "epochs": epochs,
            "max_epochs": CLASSICAL_EPOCHS,
            "accuracy": classical_correct / len(samples),
        },
        "zhou_reported_iterations": ZHOU_XOR_ITERATIONS if dataset.name == "xor" else None,
    }


def compare_table(result: dict) -> str:
    q, c = result["aqpnn"], result["classical"]
    if c["converged"]:
        classical_iter = f"{c['epochs']} (converged)"
    else:
        classical_iter = f"not converged at {c['max_epochs']} epochs"
    zhou = result["zhou_reported_iterations"]
    zhou_cell = f"{zhou}*" if zhou is not None else "n/a"
    lines = [
        f"dataset: {result['dataset']}",
        "",
        "| Algorithm | AQPNN | Zhou perceptron | Classical perceptron (one neuron) |",
        "|---|---|---|---|",
        f"| No. of iterations | {q['epochs_used']} | {zhou_cell} | {classical_iter} |",
        f"| Training accuracy | {q['accuracy']:.4f} | n/a | {c['accuracy']:.4f} |",
    ]
    if zhou is not None:
        lines += ["", "* reported value, not recomputed"]
    return "\n".join(lines)
