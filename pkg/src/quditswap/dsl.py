"""Line-oriented circuit format (.qc) and its parser.

Grammar (one statement per line, '#' comments and blank lines ignored):

    dim <d>
    wires <n>
    <MNEMONIC> <wire> [<wire>]

The two header lines are required, in that order, before any gate.  Wires
are 1-based, control first for two-qudit gates, so a gate controlled by
wire 2 targeting wire 1 is written ``CXT 2 1``.  The canonical renderer
emits uppercase mnemonics, single spaces, LF endings and a trailing newline;
parse(render(c)) reproduces the circuit exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .circuit import Circuit, GateOp
from .gates import GateKind

MNEMONICS = {kind.value: kind for kind in GateKind}


@dataclass(frozen=True)
class ParseError(Exception):
    """Parse failure with a 1-based source position."""

    line: int
    column: int
    message: str
    token: str = ""

    def __str__(self) -> str:
        where = f"line {self.line}, column {self.column}"
        if self.token:
            return f"{where}: {self.message} ({self.token!r})"
        return f"{where}: {self.message}"


def _tokens(line: str) -> list[tuple[int, str]]:
    """(column, token) pairs, columns 1-based."""
    out = []
    col = 0
    for tok in line.split():
        col = line.index(tok, col)
        out.append((col + 1, tok))
        col += len(tok)
    return out


def _int_token(lineno: int, col: int, tok: str, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(lineno, col, f"expected integer {what}", tok) from None


def parse(text: str) -> Circuit:
    """Parse a circuit document; raises :class:`ParseError` on the first error."""
    d: int | None = None
    n: int | None = None
    ops: list[GateOp] = []
    lines = text.split("\n")
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0]
        toks = _tokens(line)
        if not toks:
            continue
        col, head = toks[0]

        if head == "dim":
            if d is not None:
                raise ParseError(lineno, col, "duplicate 'dim' header", head)
            if len(toks) != 2:
                raise ParseError(lineno, col, "'dim' takes exactly one integer", head)
            d = _int_token(lineno, toks[1][0], toks[1][1], "dimension")
            if d < 2:
                raise ParseError(lineno, toks[1][0], "dimension must be >= 2", toks[1][1])
            continue

        if head == "wires":
            if d is None:
                raise ParseError(lineno, col, "'wires' before 'dim' header", head)
            if n is not None:
                raise ParseError(lineno, col, "duplicate 'wires' header", head)
            if len(toks) != 2:
                raise ParseError(lineno, col, "'wires' takes exactly one integer", head)
            n = _int_token(lineno, toks[1][0], toks[1][1], "wire count")
            if n < 1:
                raise ParseError(lineno, toks[1][0], "wire count must be >= 1", toks[1][1])
            continue

        if d is None or n is None:
            raise ParseError(lineno, col, "gate before 'dim'/'wires' headers", head)
        kind = MNEMONICS.get(head)
        if kind is None:
            raise ParseError(lineno, col, "unknown gate mnemonic", head)
        wires = []
        for wcol, tok in toks[1:]:
            w = _int_token(lineno, wcol, tok, "wire index")
            if not 1 <= w <= n:
                raise ParseError(lineno, wcol, f"wire out of range 1..{n}", tok)
            wires.append(w)
        if len(wires) != kind.arity:
            raise ParseError(
                lineno, col, f"{head} takes {kind.arity} wire(s), got {len(wires)}", head
            )
        if len(set(wires)) != len(wires):
            raise ParseError(lineno, col, "duplicate wire indices", head)
        ops.append(GateOp(kind, tuple(wires), d))

    if d is None:
        raise ParseError(max(len(lines), 1), 1, "missing 'dim' header")
    if n is None:
        raise ParseError(max(len(lines), 1), 1, "missing 'wires' header")
    return Circuit(d, n, tuple(ops))


def render(c: Circuit) -> str:
    """Canonical text form: headers then one gate per line, trailing newline."""
    lines = [f"dim {c.d}", f"wires {c.n}"]
    for op in c.ops:
        lines.append(" ".join([op.kind.value, *map(str, op.wires)]))
    return "\n".join(lines) + "\n"
