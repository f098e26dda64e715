"""Decomposing the negated-sum gate into QFT and controlled-phase gates.

CXT = QFT_2 . CZ_d . QFT_2: a Fourier transform on the target, a controlled
phase e^{i 2 pi x y / d}, and a second Fourier transform.  The gate is its
own inverse, so the adjoint decomposition (IQFT, inverse phase, IQFT) builds
the very same unitary.
"""

from quditswap import (
    Circuit,
    circuit_unitary,
    cx_tilde,
    cx_tilde_decomposition,
    cx_tilde_decomposition_alt,
    expand_cx_tilde,
    identity_gate,
    max_entry_dist,
    swap_circuit,
    swap_ref,
)

for d in (2, 3, 8, 32):
    target = cx_tilde(d)
    dev = max_entry_dist(circuit_unitary(cx_tilde_decomposition(d)), target)
    dev_alt = max_entry_dist(circuit_unitary(cx_tilde_decomposition_alt(d)), target)
    print(f"d={d:<3} QFT.CZ.QFT deviation {dev:.2e}   adjoint variant {dev_alt:.2e}")

# self-inverse: two copies of the decomposition cancel out
d = 7
ops = cx_tilde_decomposition(d).ops
squared = circuit_unitary(Circuit(d, 2, ops + ops))
print(f"\nd={d}: decomposition squared vs identity:",
      f"{max_entry_dist(squared, identity_gate(d, 2)):.2e}")

# expanding each CXT inside the swap circuit gives a 9-gate SWAP made of
# standard qudit primitives only
nine = expand_cx_tilde(swap_circuit(d))
print(f"9-gate SWAP ({len(nine.ops)} ops) vs SWAP permutation:",
      f"{max_entry_dist(circuit_unitary(nine), swap_ref(d)):.2e}")
