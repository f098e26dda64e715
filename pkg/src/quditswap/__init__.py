"""Qudit SWAP gates: construction, simulation and machine verification.

The package builds the controlled gate |x>|y> -> |x>|-x-y mod d> for any
dimension d >= 2, composes three copies of it into a SWAP circuit, decomposes
it into QFT and controlled-phase primitives, and verifies every identity
numerically at machine precision.
"""

from .core import (
    GateMatrix,
    StateVector,
    DimensionError,
    apply,
    basis_state,
    kron,
    max_entry_dist,
    mod_d,
)
from .gates import (
    GateKind,
    cx_d,
    cx_d_dag,
    cx_tilde,
    cz_d,
    cz_d_dag,
    identity_gate,
    iqft,
    qft,
    swap_ref,
    x_d,
)
from .circuit import (
    Circuit,
    GateOp,
    asymmetric_swap_circuit,
    circuit_unitary,
    cx_tilde_decomposition,
    cx_tilde_decomposition_alt,
    embed,
    expand_cx_tilde,
    partial_swap_circuit,
    simulate,
    swap_circuit,
    swap_circuit_alt,
)
from .verify import (
    VerificationReport,
    random_state_check,
    verify_all,
    verify_decomposition,
    verify_delta_sum,
    verify_self_inverse,
    verify_swap,
)
from .dsl import ParseError, parse, render

__all__ = [
    "GateMatrix",
    "StateVector",
    "DimensionError",
    "apply",
    "basis_state",
    "kron",
    "max_entry_dist",
    "mod_d",
    "GateKind",
    "qft",
    "iqft",
    "cz_d",
    "cz_d_dag",
    "cx_tilde",
    "cx_d",
    "cx_d_dag",
    "x_d",
    "swap_ref",
    "identity_gate",
    "Circuit",
    "GateOp",
    "embed",
    "circuit_unitary",
    "simulate",
    "swap_circuit",
    "swap_circuit_alt",
    "cx_tilde_decomposition",
    "cx_tilde_decomposition_alt",
    "asymmetric_swap_circuit",
    "partial_swap_circuit",
    "expand_cx_tilde",
    "VerificationReport",
    "verify_swap",
    "verify_decomposition",
    "verify_self_inverse",
    "verify_delta_sum",
    "verify_all",
    "random_state_check",
    "ParseError",
    "parse",
    "render",
]
