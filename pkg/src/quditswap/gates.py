"""Constructors for the qudit gate set.

Every builder returns a :class:`~quditswap.core.GateMatrix` over one or two
qudits of dimension d.  For two-qudit gates the first label digit is the
control and the second the target; placing a gate on other wires (or with the
control below the target) is the job of circuit embedding, never of the
constructor.
"""

from __future__ import annotations

import enum

import numpy as np

from .core import GateMatrix, _check_dim, mod_d, permutation_matrix


class GateKind(enum.Enum):
    """Gate vocabulary; the value is the DSL mnemonic."""

    QFT = "QFT"
    IQFT = "IQFT"
    CZd = "CZ"
    CZdDag = "CZD"
    CXTilde = "CXT"
    CXd = "CX"
    CXdDag = "CXD"
    Xd = "X"
    SWAP = "SWAP"
    Identity = "ID"

    @property
    def arity(self) -> int:
        if self in (GateKind.QFT, GateKind.IQFT, GateKind.Xd, GateKind.Identity):
            return 1
        return 2


def qft(d: int) -> GateMatrix:
    """Quantum Fourier transform: entry (k, x) = e^{i 2pi x k / d} / sqrt(d)."""
    _check_dim(d)
    k, x = np.meshgrid(np.arange(d), np.arange(d), indexing="ij")
    # reduce the product mod d before the trig call to bound the argument
    phase = 2.0 * np.pi * ((k * x) % d) / d
    return GateMatrix((np.cos(phase) + 1j * np.sin(phase)) / np.sqrt(d))


def iqft(d: int) -> GateMatrix:
    """Inverse QFT, the conjugate transpose of :func:`qft`."""
    return qft(d).dagger()


def _cphase(d: int, sign: int) -> GateMatrix:
    _check_dim(d)
    diag = np.empty(d * d, dtype=np.complex128)
    for x in range(d):
        for y in range(d):
            phase = sign * 2.0 * np.pi * ((x * y) % d) / d
            diag[x * d + y] = complex(np.cos(phase), np.sin(phase))
    return GateMatrix(np.diag(diag))


def cz_d(d: int) -> GateMatrix:
    """Controlled phase: multiplies basis state (x, y) by e^{i 2pi x y / d}."""
    return _cphase(d, +1)


def cz_d_dag(d: int) -> GateMatrix:
    """Inverse controlled phase, e^{-i 2pi x y / d}."""
    return _cphase(d, -1)


def _two_qudit_perm(d: int, target_digit) -> GateMatrix:
    _check_dim(d)
    perm = [0] * (d * d)
    for x in range(d):
        for y in range(d):
            perm[x * d + y] = x * d + target_digit(x, y)
    return permutation_matrix(perm)


def cx_tilde(d: int) -> GateMatrix:
    """The negated-sum gate (x, y) -> (x, -x-y mod d); an involution.

    At d=2 this is the CNOT.
    """
    return _two_qudit_perm(d, lambda x, y: mod_d(-x - y, d))


def cx_d(d: int) -> GateMatrix:
    """Controlled modular adder (x, y) -> (x, x+y mod d)."""
    return _two_qudit_perm(d, lambda x, y: mod_d(x + y, d))


def cx_d_dag(d: int) -> GateMatrix:
    """Controlled modular subtractor (x, y) -> (x, y-x mod d)."""
    return _two_qudit_perm(d, lambda x, y: mod_d(y - x, d))


def x_d(d: int) -> GateMatrix:
    """Modular complement x -> -x mod d.

    Note: at d=2 this is the identity (-x = x mod 2), not the qubit NOT.
    """
    _check_dim(d)
    return permutation_matrix([mod_d(-x, d) for x in range(d)])


def swap_ref(d: int) -> GateMatrix:
    """Ground-truth SWAP permutation (x, y) -> (y, x)."""
    _check_dim(d)
    perm = [0] * (d * d)
    for x in range(d):
        for y in range(d):
            perm[x * d + y] = y * d + x
    return permutation_matrix(perm)


def identity_gate(d: int, wires: int = 1) -> GateMatrix:
    """Identity on the given number of qudit wires."""
    _check_dim(d)
    return permutation_matrix(list(range(d**wires)))
