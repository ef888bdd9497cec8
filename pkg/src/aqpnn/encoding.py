"""Classical-to-qubit encoding, built-in datasets and CSV ingestion."""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from pathlib import Path

from . import algebra
from .algebra import KET0, KET1, Qubit
from .errors import OutOfRange, ParseError, TooManyClasses, UnknownDataset
from .training import TrainingPattern

BUILTIN_NAMES = ("not-gate", "hadamard", "xor", "overlap")
GATE_DATASETS = ("not-gate", "hadamard")

# initial weight operator for the XOR experiment, shared by both inputs
XOR_INIT_WEIGHT = ((1.1, 1.2), (0.0, 0.0))

OVAL_POINTS = (
    (0.1, 0.0), (0.1, 0.2), (0.0, 0.1), (-0.1, 0.2),
    (-0.1, 0.0), (0.0, -0.1), (0.1, -0.2), (-0.1, -0.2),
)
SQUARE_POINTS = (
    (0.1, 0.1), (0.0, 0.0), (0.0, 0.2), (-0.1, 0.1),
    (0.1, -0.1), (-0.1, -0.1), (0.0, -0.2),
)


@dataclass(frozen=True, eq=False)
class Dataset:
    name: str
    patterns: tuple[TrainingPattern, ...]
    class_labels: tuple[tuple[tuple[float, float], str], ...]
    # raw classical feature vectors, one per pattern (used by the baseline)
    features: tuple[tuple[float, ...], ...] = ()

    @property
    def n(self) -> int:
        return self.patterns[0].n

    def label_of(self, target: Qubit) -> str | None:
        for t, label in self.class_labels:
            if algebra.approx_eq(target, t, 1e-9):
                return label
        return None

    def class_index(self, j: int) -> int:
        """Index of pattern ``j``'s class in ``class_labels`` (0 or 1 for two classes)."""
        t = self.patterns[j].target
        for k, (target, _) in enumerate(self.class_labels):
            if algebra.approx_eq(t, target, 1e-9):
                return k
        raise KeyError(j)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "patterns": [
                {"inputs": [x.tolist() for x in p.inputs], "target": p.target.tolist()}
                for p in self.patterns
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def write_csv(self, path: str | Path, label_column: str = "label") -> None:
        """Write raw features and labels in the format read by :func:`load_csv`."""
        if not self.features:
            raise ValueError(f"dataset {self.name!r} carries no raw features")
        header = [f"x{i + 1}" for i in range(len(self.features[0]))] + [label_column]
        with open(path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(header)
            for feats, p in zip(self.features, self.patterns):
                writer.writerow([repr(float(v)) for v in feats] + [self.label_of(p.target)])


def _key(q) -> tuple[float, float]:
    return (float(q[0]), float(q[1]))


def encode_scalar(a: float) -> Qubit:
    """Encode a real in [-1, 1] as the qubit ``[a, sqrt(1 - a^2)]``."""
    a = float(a)
    if not math.isfinite(a) or abs(a) > 1.0:
        raise OutOfRange(f"value {a} outside [-1, 1] cannot be encoded as a qubit")
    return algebra.qubit(a, math.sqrt(1.0 - a * a))


def encode_basis(bit: float) -> Qubit:
    """Map 0 to |0> = [1, 0] and 1 to |1> = [0, 1]."""
    if bit == 0:
        return KET0
    if bit == 1:
        return KET1
    raise OutOfRange(f"basis encoding accepts 0 or 1, got {bit}")


def _gate_dataset(name, targets):
    patterns = (
        TrainingPattern([KET0], targets[0]),
        TrainingPattern([KET1], targets[1]),
    )
    labels = ((_key(targets[0]), "A"), (_key(targets[1]), "B"))
    return Dataset(name, patterns, labels, features=((0.0,), (1.0,)))


def builtin_dataset(name: str) -> Dataset:
    if name == "not-gate":
        return _gate_dataset(name, (KET1, KET0))
    if name == "hadamard":
        r = 1.0 / math.sqrt(2.0)
        return _gate_dataset(name, ((r, r), (r, -r)))
    if name == "xor":
        bits = ((0, 0), (1, 1), (0, 1), (1, 0))
        patterns = tuple(
            TrainingPattern([encode_basis(a), encode_basis(b)], KET1 if a != b else KET0)
            for a, b in bits
        )
        labels = ((_key(KET0), "A"), (_key(KET1), "B"))
        return Dataset(name, patterns, labels, features=tuple((float(a), float(b)) for a, b in bits))
    if name == "overlap":
        rows = [(p, KET0) for p in OVAL_POINTS] + [(p, KET1) for p in SQUARE_POINTS]
        patterns = tuple(
            TrainingPattern([encode_scalar(v) for v in point], target) for point, target in rows
        )
        labels = ((_key(KET0), "oval"), (_key(KET1), "square"))
        return Dataset(name, patterns, labels, features=tuple(p for p, _ in rows))
    raise UnknownDataset(f"unknown dataset {name!r}; choose from {', '.join(BUILTIN_NAMES)}")


def load_csv(
    path: str | Path,
    n_columns: int | None = None,
    label_column: str = "label",
) -> Dataset:
    """Read a two-class CSV; every non-label column is one encoded input qubit.

    Labels are mapped to targets in order of first appearance: the first label
    seen becomes |0> = [1, 0], the second |1> = [0, 1].
    """
    path = Path(path)
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = [h.strip() for h in next(reader)]
        except StopIteration:
            raise ParseError(f"{path} is empty", row=1) from None
        if label_column not in header:
            raise ParseError(f"label column {label_column!r} not found in header", row=1)
        label_at = header.index(label_column)
        feature_cols = [i for i in range(len(header)) if i != label_at]
        if not feature_cols:
            raise ParseError("no feature columns", row=1)
        if n_columns is not None and len(feature_cols) != n_columns:
            raise ParseError(f"expected {n_columns} feature column(s), found {len(feature_cols)}", row=1)

        features: list[tuple[float, ...]] = []
        labels: list[str] = []
        for rowno, row in enumerate(reader, start=2):
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != len(header):
                raise ParseError(f"expected {len(header)} fields, got {len(row)}", row=rowno)
            values = []
            for i in feature_cols:
                try:
                    v = float(row[i])
                except ValueError:
                    raise ParseError(f"not a number: {row[i]!r}", row=rowno, column=header[i]) from None
                if not math.isfinite(v) or abs(v) > 1.0:
                    raise OutOfRange(f"row {rowno}, column {header[i]!r}: value {v} outside [-1, 1]")
                values.append(v)
            features.append(tuple(values))
            labels.append(row[label_at].strip())

    if not features:
        raise ParseError(f"{path} has no data rows", row=2)

    distinct = list(dict.fromkeys(labels))
    if len(distinct) > 2:
        raise TooManyClasses(f"found {len(distinct)} classes ({', '.join(distinct)}); at most 2 are supported")
    target_of = {label: t for label, t in zip(distinct, (KET0, KET1))}
    patterns = tuple(
        TrainingPattern([encode_scalar(v) for v in feats], target_of[label])
        for feats, label in zip(features, labels)
    )
    class_labels = tuple((_key(target_of[label]), label) for label in distinct)
    return Dataset(path.stem, patterns, class_labels, features=tuple(features))


def datasets_equal(a: Dataset, b: Dataset, eps: float = 1e-9) -> bool:
    if len(a.patterns) != len(b.patterns):
        return False
    for p, q in zip(a.patterns, b.patterns):
        if p.n != q.n or not algebra.approx_eq(p.target, q.target, eps):
            return False
        if not all(algebra.approx_eq(x, z, eps) for x, z in zip(p.inputs, q.inputs)):
            return False
    return True


def parse_inputs(text: str, basis: bool = False) -> list[Qubit]:
    """Parse ``"0.1,0"`` into input qubits (scalar or basis encoding)."""
    try:
        values = [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise ParseError(f"inputs must be comma-separated reals, got {text!r}") from None
    encode = encode_basis if basis else encode_scalar
    return [encode(v) for v in values]

