"""Dimension-generic complex linear algebra and mixed-radix indexing.

Conventions used everywhere in the package:

* Wires are numbered 1..n, wire 1 on top.  Wire 1 is the most significant
  mixed-radix digit, so a two-qudit basis state |x>|y> sits at flat index
  ``x * d + y``.
* All matrices are dense complex128.  Gates that permute basis states carry
  an exact integer permutation table alongside the dense view, so identities
  on the permutation path can be asserted with zero tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

MAX_STATE_SIZE = 4096


class DimensionError(ValueError):
    """Raised for qudit dimensions below 2 or mismatched operand shapes."""


def _check_dim(d: int) -> None:
    if d < 2:
        raise DimensionError(f"qudit dimension must be >= 2, got {d}")


def mod_d(v: int, d: int) -> int:
    """Reduce ``v`` into [0, d-1], nonnegative even for negative ``v``."""
    _check_dim(d)
    return v % d


def digits_to_flat(digits: tuple[int, ...], d: int) -> int:
    """Flatten a base-d label, most significant digit first."""
    _check_dim(d)
    flat = 0
    for x in digits:
        if not 0 <= x < d:
            raise ValueError(f"digit {x} out of range for d={d}")
        flat = flat * d + x
    return flat


def flat_to_digits(flat: int, d: int, n: int) -> tuple[int, ...]:
    """Inverse of :func:`digits_to_flat` for an n-digit label."""
    _check_dim(d)
    if not 0 <= flat < d**n:
        raise ValueError(f"flat index {flat} out of range for d={d}, n={n}")
    out = []
    for _ in range(n):
        out.append(flat % d)
        flat //= d
    return tuple(reversed(out))


@dataclass(frozen=True)
class StateVector:
    """Amplitudes of an n-qudit register over the computational basis."""

    d: int
    n: int
    amps: np.ndarray

    def __post_init__(self):
        _check_dim(self.d)
        amps = np.asarray(self.amps, dtype=np.complex128)
        if amps.shape != (self.d**self.n,):
            raise DimensionError(
                f"expected {self.d ** self.n} amplitudes, got {amps.shape}"
            )
        if not np.all(np.isfinite(amps)):
            raise ValueError("non-finite amplitude")
        amps.setflags(write=False)
        object.__setattr__(self, "amps", amps)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))


@dataclass(frozen=True)
class GateMatrix:
    """Dense unitary with an optional exact permutation table.

    ``perm[j]`` is the target basis index of source index ``j``.  When
    present, the dense view has entries exactly 0 and 1.
    """

    entries: np.ndarray
    perm: tuple[int, ...] | None = field(default=None)

    def __post_init__(self):
        m = np.asarray(self.entries, dtype=np.complex128)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DimensionError(f"gate matrix must be square, got {m.shape}")
        if not np.all(np.isfinite(m)):
            raise ValueError("non-finite matrix entry")
        m.setflags(write=False)
        object.__setattr__(self, "entries", m)
        if self.perm is not None:
            perm = tuple(int(p) for p in self.perm)
            if sorted(perm) != list(range(m.shape[0])):
                raise ValueError("perm table is not a bijection")
            object.__setattr__(self, "perm", perm)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def dagger(self) -> "GateMatrix":
        inv = None
        if self.perm is not None:
            inv = [0] * len(self.perm)
            for src, dst in enumerate(self.perm):
                inv[dst] = src
            inv = tuple(inv)
        return GateMatrix(self.entries.conj().T, inv)


def permutation_matrix(perm: list[int] | tuple[int, ...]) -> GateMatrix:
    """Build the dense 0/1 matrix of a basis permutation."""
    dim = len(perm)
    m = np.zeros((dim, dim), dtype=np.complex128)
    for src, dst in enumerate(perm):
        m[dst, src] = 1.0
    return GateMatrix(m, tuple(perm))


def identity_matrix(dim: int) -> GateMatrix:
    return permutation_matrix(list(range(dim)))


def basis_state(digits: tuple[int, ...], d: int) -> StateVector:
    """Computational basis state |x1 x2 ... xn> of n qudits of dimension d."""
    n = len(digits)
    flat = digits_to_flat(digits, d)
    amps = np.zeros(d**n, dtype=np.complex128)
    amps[flat] = 1.0
    return StateVector(d, n, amps)


def kron(a: GateMatrix, b: GateMatrix) -> GateMatrix:
    """Kronecker product; factor ``a`` acts on the more significant digits."""
    perm = None
    if a.perm is not None and b.perm is not None:
        db = b.dim
        perm = tuple(
            a.perm[j // db] * db + b.perm[j % db] for j in range(a.dim * b.dim)
        )
    return GateMatrix(np.kron(a.entries, b.entries), perm)


def apply(m: GateMatrix, s: StateVector) -> StateVector:
    """Apply a gate to a state; exact index shuffle when a perm is present."""
    if m.dim != s.amps.shape[0]:
        raise DimensionError(
            f"gate dimension {m.dim} does not match state size {s.amps.shape[0]}"
        )
    if m.perm is not None:
        out = np.empty_like(s.amps)
        out[np.asarray(m.perm)] = s.amps
    else:
        out = m.entries @ s.amps
    return StateVector(s.d, s.n, out)


def max_entry_dist(a: GateMatrix, b: GateMatrix) -> float:
    """Max absolute entrywise deviation; exact equality metric, no phase slack."""
    if a.dim != b.dim:
        raise DimensionError(f"dimension mismatch: {a.dim} vs {b.dim}")
    return float(np.max(np.abs(a.entries - b.entries)))


def matmul(a: GateMatrix, b: GateMatrix) -> GateMatrix:
    """Product a @ b, composing perm tables exactly when both are present."""
    if a.dim != b.dim:
        raise DimensionError(f"dimension mismatch: {a.dim} vs {b.dim}")
    perm = None
    if a.perm is not None and b.perm is not None:
        perm = tuple(a.perm[b.perm[j]] for j in range(a.dim))
    return GateMatrix(a.entries @ b.entries, perm)
