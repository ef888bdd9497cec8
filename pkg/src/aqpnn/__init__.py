"""Autonomous quantum perceptron neural network (AQPNN).

A single neuron with 2x2 weight operators on qubit inputs. Training builds a
set of activation operators, each mapping a pattern's weighted-sum qubit onto
its target qubit; inference picks the operator whose output is closest to a
normalized qubit.
"""

from .activation import (
    ActivationOperator,
    SolveResult,
    select_operator,
    solve_activation,
    unitarity_defect,
)
from .algebra import approx_eq, hadamard_product, mat2, mat_apply, outer_product, qubit
from .baseline import ClassicalPerceptron, classical_train
from .encoding import Dataset, builtin_dataset, encode_scalar, load_csv
from .errors import (
    AQPNNError,
    ConfigError,
    EmptyModel,
    InvalidPattern,
    LengthMismatch,
    NonConvergence,
    NoRealSolution,
    OutOfRange,
    ParseError,
    TooManyClasses,
    UnknownDataset,
    ZeroWeightedSum,
)
from .inference import ResponseReport, select_response, superposition_output
from .training import (
    Model,
    TrainConfig,
    TrainingPattern,
    compute_weighted_sum,
    detect_conflicts,
    train,
    update_weights,
)

__version__ = "0.1.0"
