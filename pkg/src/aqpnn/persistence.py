"""Model JSON files.

Floats are written with Python's shortest round-trip repr, so a reloaded model
is bit-identical to the one that was saved.
"""

from __future__ import annotations

import json
from pathlib import Path

from . import algebra
from .activation import ActivationOperator
from .errors import AQPNNError
from .training import Model, TrainConfig

FORMAT_VERSION = 1


class ModelFormatError(AQPNNError, ValueError):
    pass


def model_to_dict(model: Model) -> dict:
    return {
        "version": FORMAT_VERSION,
        "n": model.n,
        "weights": [w.tolist() for w in model.weights],
        "operators": [
            {
                "theta": op.theta,
                "phi": op.phi,
                "matrix": op.matrix.tolist(),
                "target": op.target.tolist(),
            }
            for op in model.operators
        ],
        "pattern_ops": list(model.pattern_ops),
        "epochs_used": model.epochs_used,
        "config": model.config.to_dict(),
        "labels": [{"target": list(t), "label": label} for t, label in model.labels],
    }


def model_from_dict(data: dict) -> Model:
    try:
        if data["version"] != FORMAT_VERSION:
            raise ModelFormatError(f"unsupported model version {data['version']!r}")
        weights = tuple(algebra.mat2(w) for w in data["weights"])
        if len(weights) != data["n"]:
            raise ModelFormatError("weight count does not match n")
        operators = tuple(
            ActivationOperator(
                float(op["theta"]),
                float(op["phi"]),
                algebra.mat2(op["matrix"]),
                algebra.qubit(op["target"]),
            )
            for op in data["operators"]
        )
        labels = tuple(
            ((float(e["target"][0]), float(e["target"][1])), str(e["label"]))
            for e in data.get("labels", [])
        )
        return Model(
            weights=weights,
            operators=operators,
            pattern_ops=tuple(int(i) for i in data["pattern_ops"]),
            epochs_used=int(data["epochs_used"]),
            config=TrainConfig.from_dict(data["config"]),
            labels=labels,
        )
    except (KeyError, TypeError, IndexError) as exc:
        raise ModelFormatError(f"malformed model file: {exc!r}") from exc


def dumps(model: Model) -> str:
    return json.dumps(model_to_dict(model), indent=2)


def save_model(model: Model, path: str | Path) -> None:
    Path(path).write_text(dumps(model) + "\n", encoding="utf-8")


def load_model(path: str | Path) -> Model:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ModelFormatError(f"{path}: not valid JSON ({exc})") from exc
    return model_from_dict(data)
