"""Executable identity suite: every algebraic claim checked numerically.

Permutation-path identities (SWAP composition, self-inverse, the asymmetric
reconstruction) are checked through exact integer permutation tables and must
report a deviation of exactly 0.  Dense paths (QFT / controlled-phase
decompositions, random-state simulations) use a 1e-10 entrywise tolerance;
the geometric-sum check scales its tolerance with d to allow for cancellation
in near-zero sums.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    DimensionError,
    StateVector,
    _check_dim,
    identity_matrix,
    matmul,
    max_entry_dist,
)
from .circuit import (
    asymmetric_swap_circuit,
    circuit_unitary,
    cx_tilde_decomposition,
    cx_tilde_decomposition_alt,
    partial_swap_circuit,
    simulate,
    swap_circuit,
    swap_circuit_alt,
)
from .gates import cx_tilde, swap_ref

DENSE_TOL = 1e-10
PERM_TOL = 0.0


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one identity check at one dimension."""

    identity_name: str
    d: int
    max_dev: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.max_dev <= self.tolerance


def verify_swap(d: int) -> VerificationReport:
    """Both three-gate SWAP circuits equal the SWAP permutation exactly."""
    _check_dim(d)
    target = swap_ref(d)
    dev = max(
        max_entry_dist(circuit_unitary(swap_circuit(d)), target),
        max_entry_dist(circuit_unitary(swap_circuit_alt(d)), target),
    )
    return VerificationReport("swap", d, dev, PERM_TOL)


def verify_decomposition(d: int) -> VerificationReport:
    """Both QFT/phase decompositions reproduce the negated-sum gate."""
    _check_dim(d)
    target = cx_tilde(d)
    dev = max(
        max_entry_dist(circuit_unitary(cx_tilde_decomposition(d)), target),
        max_entry_dist(circuit_unitary(cx_tilde_decomposition_alt(d)), target),
    )
    return VerificationReport("decomposition", d, dev, DENSE_TOL)


def verify_self_inverse(d: int) -> VerificationReport:
    """The negated-sum gate squared is the identity, exactly."""
    _check_dim(d)
    g = cx_tilde(d)
    dev = max_entry_dist(matmul(g, g), identity_matrix(d * d))
    return VerificationReport("self_inverse", d, dev, PERM_TOL)


def verify_delta_sum(d: int) -> VerificationReport:
    """Geometric sum over d-th roots of unity collapses to d * delta."""
    _check_dim(d)
    worst = 0.0
    for x in range(d):
        for y in range(d):
            for l in range(d):
                total = sum(
                    np.exp(2j * np.pi * (x + y + l) * k / d) for k in range(d)
                )
                expected = d if (x + y + l) % d == 0 else 0
                worst = max(worst, float(abs(total - expected)))
    return VerificationReport("delta_sum", d, worst, 1e-9 * d)


def verify_asymmetric_swap(d: int) -> VerificationReport:
    """The adder/subtractor/complement reconstruction is a SWAP, exactly."""
    _check_dim(d)
    dev = max_entry_dist(circuit_unitary(asymmetric_swap_circuit(d)), swap_ref(d))
    return VerificationReport("asymmetric_swap", d, dev, PERM_TOL)


def verify_partial_swap(d: int, seed: int = 42, trials: int = 100) -> VerificationReport:
    """Random |phi>|0> inputs come out as |0>|phi> under the partial swap."""
    _check_dim(d)
    rng = np.random.default_rng(seed)
    circ = partial_swap_circuit(d)
    worst = 0.0
    for _ in range(trials):
        phi = _random_state(rng, d)
        amps = np.zeros(d * d, dtype=np.complex128)
        amps[::d] = phi
        out = simulate(circ, StateVector(d, 2, amps))
        expected = np.zeros(d * d, dtype=np.complex128)
        expected[:d] = phi
        worst = max(worst, float(np.max(np.abs(out.amps - expected))))
    return VerificationReport("partial_swap", d, worst, DENSE_TOL)


def _random_state(rng: np.random.Generator, size: int) -> np.ndarray:
    v = rng.standard_normal(size) + 1j * rng.standard_normal(size)
    return v / np.linalg.norm(v)


def random_state_check(d: int, seed: int = 42, trials: int = 100) -> VerificationReport:
    """Seeded random two-qudit states transpose their amplitudes under SWAP."""
    _check_dim(d)
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    rng = np.random.default_rng(seed)
    circ = swap_circuit(d)
    transpose = [y * d + x for x in range(d) for y in range(d)]
    worst = 0.0
    for _ in range(trials):
        amps = _random_state(rng, d * d)
        out = simulate(circ, StateVector(d, 2, amps))
        worst = max(worst, float(np.max(np.abs(out.amps - amps[transpose]))))
    return VerificationReport("random_states", d, worst, DENSE_TOL)


def verify_all(d_min: int, d_max: int, seed: int = 42) -> list[VerificationReport]:
    """Run every identity check for each d in [d_min, d_max], in order."""
    if not (2 <= d_min <= d_max <= 64):
        raise ValueError(f"need 2 <= d_min <= d_max <= 64, got ({d_min}, {d_max})")
    reports: list[VerificationReport] = []
    for d in range(d_min, d_max + 1):
        reports.append(verify_swap(d))
        reports.append(verify_decomposition(d))
        reports.append(verify_self_inverse(d))
        reports.append(verify_delta_sum(d))
        reports.append(verify_asymmetric_swap(d))
        reports.append(verify_partial_swap(d, seed=seed, trials=20))
        reports.append(random_state_check(d, seed=seed, trials=20))
    return reports
