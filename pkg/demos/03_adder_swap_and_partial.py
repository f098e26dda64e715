"""SWAP circuits from the modular adder/subtractor gate family.

The more common CNOT generalizations are the controlled adder CX
(|x>|y> -> |x>|x+y>) and subtractor CXD.  On their own they only give a
partial swap: |phi>|0> -> |0>|phi>.  A full SWAP needs one extra complement
gate X (|x> -> |-x mod d|) at the end.
"""

import numpy as np

from quditswap import (
    StateVector,
    asymmetric_swap_circuit,
    circuit_unitary,
    max_entry_dist,
    partial_swap_circuit,
    simulate,
    swap_ref,
)

d = 4
full = asymmetric_swap_circuit(d)
print("full swap from adder gates:", [f"{o.kind.value}{o.wires}" for o in full.ops])
print("deviation from SWAP:", max_entry_dist(circuit_unitary(full), swap_ref(d)))

partial = partial_swap_circuit(d)
print("\npartial circuit:", [f"{o.kind.value}{o.wires}" for o in partial.ops])
print("deviation from SWAP:",
      f"{max_entry_dist(circuit_unitary(partial), swap_ref(d)):.2f}  (not a SWAP)")

# but it does move any |phi>|0> to |0>|phi>
rng = np.random.default_rng(3)
phi = rng.standard_normal(d) + 1j * rng.standard_normal(d)
phi /= np.linalg.norm(phi)
amps = np.zeros(d * d, dtype=complex)
amps[::d] = phi  # |phi> on wire 1, |0> on wire 2
out = simulate(partial, StateVector(d, 2, amps))
expected = np.zeros(d * d, dtype=complex)
expected[:d] = phi  # |0> on wire 1, |phi> on wire 2
print("|phi>|0> -> |0>|phi> error:", np.max(np.abs(out.amps - expected)))
