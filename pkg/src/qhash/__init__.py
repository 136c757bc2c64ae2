"""Low-bias sets over prime fields and the phase-encoded hash states they generate.

Construct sets with :mod:`qhash.bias`, materialize states and run equality
tests with :mod:`qhash.qstate`, stretch the domain with
:mod:`qhash.generator`, probe one-wayness with :mod:`qhash.bounds`, and map
states to optical modes with :mod:`qhash.coherent`. The ``qhash`` CLI wraps
all of it with JSON input/output.
"""

from .bias import (
    BiasSet,
    SearchConfig,
    bias,
    dft_value,
    exhaustive_search,
    heuristic_search,
    is_delta_good,
    load_bias_set,
    save_bias_set,
)
from .bounds import (
    ResistanceReport,
    StateEnsemble,
    balance_report,
    holevo_nayak_epsilon,
    jacobi_eigh,
    min_qubits_lower_bound,
    pgm_success,
    resistance_report,
)
from .coherent import (
    CoherentHashState,
    coherent_hash,
    coherent_hash_composed,
    coherent_overlap,
)
from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    DivisionByZero,
    DomainTooLarge,
    FieldMismatch,
    IndexOutOfRange,
    LengthMismatch,
    MalformedFile,
    NotPrime,
    Overflow,
    QHashError,
    RangeError,
)
from .field import FieldElement, Polynomial, PrimeField, is_prime, make_field, poly_eval
from .generator import (
    ComposedGenerator,
    LinearFamily,
    RSFamily,
    composed_hash_state,
    generator_collision_delta,
    rs_encode,
)
from .kernels import BACKEND as KERNEL_BACKEND
from .qstate import (
    EqualityTestOutcome,
    QuantumHashState,
    amplitude_encoding,
    basis_encoding,
    collision_delta,
    hash_state,
    inner_product,
    reverse_test_probability,
    simulate_equality_test,
    swap_test_probability,
)

__version__ = "0.1.0"

__all__ = [
    "BiasSet",
    "BudgetExceeded",
    "CoherentHashState",
    "ComposedGenerator",
    "DimensionMismatch",
    "DivisionByZero",
    "DomainTooLarge",
    "EqualityTestOutcome",
    "FieldElement",
    "FieldMismatch",
    "IndexOutOfRange",
    "KERNEL_BACKEND",
    "LengthMismatch",
    "LinearFamily",
    "MalformedFile",
    "NotPrime",
    "Overflow",
    "Polynomial",
    "PrimeField",
    "QHashError",
    "QuantumHashState",
    "RSFamily",
    "RangeError",
    "ResistanceReport",
    "SearchConfig",
    "StateEnsemble",
    "amplitude_encoding",
    "balance_report",
    "basis_encoding",
    "bias",
    "coherent_hash",
    "coherent_hash_composed",
    "coherent_overlap",
    "collision_delta",
    "composed_hash_state",
    "dft_value",
    "exhaustive_search",
    "generator_collision_delta",
    "hash_state",
    "heuristic_search",
    "holevo_nayak_epsilon",
    "inner_product",
    "is_delta_good",
    "is_prime",
    "jacobi_eigh",
    "load_bias_set",
    "make_field",
    "min_qubits_lower_bound",
    "pgm_success",
    "poly_eval",
    "resistance_report",
    "reverse_test_probability",
    "rs_encode",
    "save_bias_set",
    "simulate_equality_test",
    "swap_test_probability",
]
