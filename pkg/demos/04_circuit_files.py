"""Reading and writing circuits as .qc text files.

The format is line oriented: a 'dim' header, a 'wires' header, then one
gate per line with 1-based wire indices (control first).  '#' starts a
comment.  The same files drive the quditswap CLI.
"""

from quditswap import parse, render, swap_circuit, circuit_unitary, max_entry_dist, swap_ref

text = """
# three negated-sum gates make a qudit SWAP
dim 3
wires 2
CXT 2 1
CXT 1 2
CXT 2 1
"""

circ = parse(text)
print("parsed:", circ.d, "levels,", circ.n, "wires,", len(circ.ops), "gates")
print("equals the built-in swap circuit:", circ == swap_circuit(3))
print("deviation from SWAP:", max_entry_dist(circuit_unitary(circ), swap_ref(3)))

print("\ncanonical form:")
print(render(circ), end="")

from quditswap import ParseError

try:
    parse("dim 3\nwires 2\nCXT 1\n")
except ParseError as exc:
    print("\nparse errors carry positions:", exc)
