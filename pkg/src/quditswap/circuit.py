"""Circuits over an n-qudit register: embedding, composition, simulation.

Op order is temporal order (leftmost figure gate first); the circuit unitary
multiplies the embedded matrices with the first op as the rightmost factor.
Wires are 1-based with wire 1 on top, matching the subscript convention
where a gate written with control i and target j acts control-on-wire-i.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import (
    MAX_STATE_SIZE,
    DimensionError,
    GateMatrix,
    StateVector,
    _check_dim,
    apply,
    flat_to_digits,
    permutation_matrix,
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

_BUILDERS = {
    GateKind.QFT: qft,
    GateKind.IQFT: iqft,
    GateKind.CZd: cz_d,
    GateKind.CZdDag: cz_d_dag,
    GateKind.CXTilde: cx_tilde,
    GateKind.CXd: cx_d,
    GateKind.CXdDag: cx_d_dag,
    GateKind.Xd: x_d,
    GateKind.SWAP: swap_ref,
    GateKind.Identity: identity_gate,
}


def gate_matrix(kind: GateKind, d: int) -> GateMatrix:
    """Canonical matrix of a gate kind at dimension d (control digit first)."""
    return _BUILDERS[kind](d)


@dataclass(frozen=True)
class GateOp:
    """A named gate on specific wires; control first for two-qudit gates."""

    kind: GateKind
    wires: tuple[int, ...]
    d: int

    def __post_init__(self):
        _check_dim(self.d)
        wires = tuple(int(w) for w in self.wires)
        object.__setattr__(self, "wires", wires)
        if len(wires) != self.kind.arity:
            raise ValueError(
                f"{self.kind.value} takes {self.kind.arity} wire(s), got {len(wires)}"
            )
        if len(set(wires)) != len(wires):
            raise ValueError(f"duplicate wires in {wires}")
        if any(w < 1 for w in wires):
            raise ValueError(f"wires are 1-based, got {wires}")


@dataclass(frozen=True)
class Circuit:
    """Ordered gate list over (d, n); immutable value."""

    d: int
    n: int
    ops: tuple[GateOp, ...] = field(default=())

    def __post_init__(self):
        _check_dim(self.d)
        if self.n < 1:
            raise ValueError(f"wire count must be >= 1, got {self.n}")
        ops = tuple(self.ops)
        object.__setattr__(self, "ops", ops)
        for op in ops:
            if op.d != self.d:
                raise DimensionError(f"op dimension {op.d} != circuit dimension {self.d}")
            if any(w > self.n for w in op.wires):
                raise ValueError(f"wire out of range in {op.wires} for n={self.n}")


def _check_budget(d: int, n: int) -> None:
    if d**n > MAX_STATE_SIZE:
        raise DimensionError(
            f"register size d^n = {d ** n} exceeds budget {MAX_STATE_SIZE}"
        )


def _embedded_perm(op: GateOp, n: int, gate_perm: tuple[int, ...]) -> list[int]:
    """Full-register permutation table of a permutation gate on given wires."""
    d = op.d
    size = d**n
    wire_pos = [w - 1 for w in op.wires]
    perm = [0] * size
    for j in range(size):
        digits = list(flat_to_digits(j, d, n))
        sub = 0
        for p in wire_pos:
            sub = sub * d + digits[p]
        sub_t = gate_perm[sub]
        for p in reversed(wire_pos):
            digits[p] = sub_t % d
            sub_t //= d
        flat = 0
        for x in digits:
            flat = flat * d + x
        perm[j] = flat
    return perm


def _apply_gate_to_columns(op: GateOp, g: GateMatrix, m: np.ndarray, n: int) -> np.ndarray:
    """Left-multiply the embedded gate into a (d^n, cols) array of columns.

    Contracts only the gate's own wire axes, avoiding a full-size product.
    """
    d = op.d
    k = len(op.wires)
    wire_pos = [w - 1 for w in op.wires]
    cols = m.shape[1]
    t = m.reshape((d,) * n + (cols,))
    gt = g.entries.reshape((d,) * (2 * k))
    out = np.tensordot(gt, t, axes=(list(range(k, 2 * k)), wire_pos))
    out = np.moveaxis(out, list(range(k)), wire_pos)
    return np.ascontiguousarray(out).reshape(d**n, cols)


def embed(op: GateOp, n: int) -> GateMatrix:
    """Lift a gate onto the named wires of an n-wire register.

    Permutation gates embed via exact index arithmetic; dense gates via
    tensor contraction against the identity.
    """
    d = op.d
    if any(w > n for w in op.wires):
        raise ValueError(f"wire out of range in {op.wires} for n={n}")
    _check_budget(d, n)
    g = gate_matrix(op.kind, d)
    if g.perm is not None:
        return permutation_matrix(_embedded_perm(op, n, g.perm))
    eye = np.eye(d**n, dtype=np.complex128)
    return GateMatrix(_apply_gate_to_columns(op, g, eye, n))


def circuit_unitary(c: Circuit) -> GateMatrix:
    """Ordered product of embedded ops; first op is the rightmost factor.

    The result carries an exact permutation table when every op is a
    permutation gate.
    """
    _check_budget(c.d, c.n)
    size = c.d**c.n
    mat = np.eye(size, dtype=np.complex128)
    perm: list[int] | None = list(range(size))
    for op in c.ops:
        g = gate_matrix(op.kind, c.d)
        if g.perm is not None:
            table = _embedded_perm(op, c.n, g.perm)
            out = np.empty_like(mat)
            out[np.asarray(table)] = mat
            mat = out
            if perm is not None:
                perm = [table[p] for p in perm]
        else:
            mat = _apply_gate_to_columns(op, g, mat, c.n)
            perm = None
    return GateMatrix(mat, tuple(perm) if perm is not None else None)


def simulate(c: Circuit, s: StateVector) -> StateVector:
    """Apply the circuit gate by gate; agrees with the full unitary product."""
    if s.d != c.d or s.n != c.n:
        raise DimensionError(
            f"state ({s.d}, {s.n}) does not match circuit ({c.d}, {c.n})"
        )
    for op in c.ops:
        s = apply(embed(op, c.n), s)
    return s


def swap_circuit(d: int) -> Circuit:
    """Three negated-sum gates alternating control wires; a full qudit SWAP."""
    return Circuit(d, 2, (
        GateOp(GateKind.CXTilde, (2, 1), d),
        GateOp(GateKind.CXTilde, (1, 2), d),
        GateOp(GateKind.CXTilde, (2, 1), d),
    ))


def swap_circuit_alt(d: int) -> Circuit:
    """Upside-down variant of :func:`swap_circuit`; also a full SWAP."""
    return Circuit(d, 2, (
        GateOp(GateKind.CXTilde, (1, 2), d),
        GateOp(GateKind.CXTilde, (2, 1), d),
        GateOp(GateKind.CXTilde, (1, 2), d),
    ))


def cx_tilde_decomposition(d: int) -> Circuit:
    """QFT on the target, controlled phase, QFT on the target again."""
    return Circuit(d, 2, (
        GateOp(GateKind.QFT, (2,), d),
        GateOp(GateKind.CZd, (1, 2), d),
        GateOp(GateKind.QFT, (2,), d),
    ))


def cx_tilde_decomposition_alt(d: int) -> Circuit:
    """Adjoint decomposition (IQFT, inverse phase, IQFT); equal by involution."""
    return Circuit(d, 2, (
        GateOp(GateKind.IQFT, (2,), d),
        GateOp(GateKind.CZdDag, (1, 2), d),
        GateOp(GateKind.IQFT, (2,), d),
    ))


def asymmetric_swap_circuit(d: int) -> Circuit:
    """SWAP from modular adder/subtractor gates plus a complement.

    Basis trace: (x, y) -> (x, x+y) -> (-y, x+y) -> (-y, x) -> (y, x),
    everything mod d.  Validated by brute-force comparison against the SWAP
    permutation in the verification suite.
    """
    return Circuit(d, 2, (
        GateOp(GateKind.CXd, (1, 2), d),
        GateOp(GateKind.CXdDag, (2, 1), d),
        GateOp(GateKind.CXd, (1, 2), d),
        GateOp(GateKind.Xd, (1,), d),
    ))


def partial_swap_circuit(d: int) -> Circuit:
    """Maps |phi>|0> to |0>|phi> for any phi; not a full SWAP."""
    return Circuit(d, 2, (
        GateOp(GateKind.CXd, (1, 2), d),
        GateOp(GateKind.CXdDag, (2, 1), d),
    ))


def expand_cx_tilde(c: Circuit) -> Circuit:
    """Rewrite each negated-sum gate into its QFT / phase / QFT expansion."""
    ops: list[GateOp] = []
    for op in c.ops:
        if op.kind is GateKind.CXTilde:
            control, target = op.wires
            ops.append(GateOp(GateKind.QFT, (target,), c.d))
            ops.append(GateOp(GateKind.CZd, (control, target), c.d))
            ops.append(GateOp(GateKind.QFT, (target,), c.d))
        else:
            ops.append(op)
    return Circuit(c.d, c.n, tuple(ops))
