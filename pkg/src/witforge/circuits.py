"""Bounded fan-in Boolean circuit DAG.

Nodes are stored in topological order with strictly backward operand
references, so circuits are acyclic by construction.  The output is always
the last node.  A circuit's gate count m excludes INPUT nodes but includes
CONST nodes.

The binary wire format is bit-exact: an 8-byte header (node count, input
count, both 32-bit big-endian), then per node a 3-bit opcode followed by
operand fields of fixed width W = ceil(log2(N)) bits, zero-padded to a byte
boundary at the end only.  Total length is Theta(m log m) by construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    AssignmentLengthMismatch,
    BadInputIndex,
    DanglingReference,
    ForwardReference,
    MalformedHeader,
)

OP_INPUT = 0
OP_CONST = 1
OP_NOT = 2
OP_AND = 3
OP_OR = 4

_OP_NAMES = {OP_INPUT: "INPUT", OP_CONST: "CONST", OP_NOT: "NOT",
             OP_AND: "AND", OP_OR: "OR"}


@dataclass(frozen=True)
class CircuitStats:
    gates: int
    inputs: int
    depth: int


class Circuit:
    """Immutable after construction; output node is the last node."""

    __slots__ = ("ops", "arg0", "arg1", "input_count")

    def __init__(self, ops, arg0, arg1, input_count):
        self.ops = tuple(ops)
        self.arg0 = tuple(arg0)
        self.arg1 = tuple(arg1)
        self.input_count = input_count
        if not self.ops:
            raise ValueError("circuit needs at least one node")

    def __len__(self):
        return len(self.ops)

    @property
    def output(self) -> int:
        return len(self.ops) - 1

    def gate_count(self) -> int:
        return sum(1 for op in self.ops if op != OP_INPUT)

    def __repr__(self):
        return (f"Circuit(nodes={len(self.ops)}, gates={self.gate_count()}, "
                f"inputs={self.input_count})")


class Builder:
    """Appends nodes with structural hashing and local constant folding.

    Folding rules keep gate counts from growing: AND/OR with a constant or
    repeated operand collapse, NOT(NOT(x)) collapses, and identical gates are
    shared.  Everything downstream (the machine compiler, the encoders)
    funnels node creation through here.
    """

    def __init__(self, input_count=0):
        self.ops = []
        self.arg0 = []
        self.arg1 = []
        self.input_count = input_count
        self._memo = {}

    def _emit(self, op, a0, a1):
        key = (op, a0, a1)
        idx = self._memo.get(key)
        if idx is None:
            idx = len(self.ops)
            self.ops.append(op)
            self.arg0.append(a0)
            self.arg1.append(a1)
            self._memo[key] = idx
        return idx

    def const(self, bit) -> int:
        return self._emit(OP_CONST, 1 if bit else 0, 0)

    def inp(self, index) -> int:
        if index >= self.input_count:
            self.input_count = index + 1
        return self._emit(OP_INPUT, index, 0)

    def is_const(self, node):
        return self.ops[node] == OP_CONST

    def const_value(self, node):
        return self.arg0[node]

    def not_(self, a) -> int:
        if self.ops[a] == OP_CONST:
            return self.const(1 - self.arg0[a])
        if self.ops[a] == OP_NOT:
            return self.arg0[a]
        return self._emit(OP_NOT, a, 0)

    def and_(self, a, b) -> int:
        if self.ops[a] == OP_CONST:
            return b if self.arg0[a] else self.const(0)
        if self.ops[b] == OP_CONST:
            return a if self.arg0[b] else self.const(0)
        if a == b:
            return a
        if (self.ops[a] == OP_NOT and self.arg0[a] == b) or \
           (self.ops[b] == OP_NOT and self.arg0[b] == a):
            return self.const(0)
        if a > b:
            a, b = b, a
        return self._emit(OP_AND, a, b)

    def or_(self, a, b) -> int:
        if self.ops[a] == OP_CONST:
            return self.const(1) if self.arg0[a] else b
        if self.ops[b] == OP_CONST:
            return self.const(1) if self.arg0[b] else a
        if a == b:
            return a
        if (self.ops[a] == OP_NOT and self.arg0[a] == b) or \
           (self.ops[b] == OP_NOT and self.arg0[b] == a):
            return self.const(1)
        if a > b:
            a, b = b, a
        return self._emit(OP_OR, a, b)

    def or_many(self, nodes) -> int:
        acc = None
        for node in nodes:
            acc = node if acc is None else self.or_(acc, node)
        return self.const(0) if acc is None else acc

    def and_many(self, nodes) -> int:
        acc = None
        for node in nodes:
            acc = node if acc is None else self.and_(acc, node)
        return self.const(1) if acc is None else acc

    def xor_(self, a, b) -> int:
        return self.or_(self.and_(a, self.not_(b)), self.and_(self.not_(a), b))

    def eq_(self, a, b) -> int:
        return self.not_(self.xor_(a, b))

    def finish(self, output, input_count=None) -> Circuit:
        """Freeze into a Circuit whose output is `output`; unreachable gates
        are dropped and the rest keep their relative order.  Every declared
        input keeps an INPUT node (inputs are not gates) so indices always
        fit the serialized reference width."""
        if input_count is None:
            input_count = self.input_count
        reachable = {self.inp(j) for j in range(input_count)}
        stack = [output]
        while stack:
            node = stack.pop()
            if node in reachable:
                continue
            reachable.add(node)
            op = self.ops[node]
            if op == OP_NOT:
                stack.append(self.arg0[node])
            elif op in (OP_AND, OP_OR):
                stack.append(self.arg0[node])
                stack.append(self.arg1[node])
        # the output node must come last; materialised inputs have no
        # operands, so placing them anywhere keeps references backward
        order = sorted(reachable - {output}) + [output]
        remap = {old: new for new, old in enumerate(order)}
        ops, arg0, arg1 = [], [], []
        for old in order:
            op = self.ops[old]
            ops.append(op)
            if op in (OP_NOT, OP_AND, OP_OR):
                arg0.append(remap[self.arg0[old]])
                arg1.append(remap[self.arg1[old]] if op != OP_NOT else 0)
            else:
                arg0.append(self.arg0[old])
                arg1.append(0)
        return Circuit(ops, arg0, arg1, input_count)


def evaluate(c: Circuit, assignment: str) -> int:
    """Value of the output under standard Boolean semantics, O(m) node visits."""
    if len(assignment) != c.input_count:
        raise AssignmentLengthMismatch(len(assignment), c.input_count)
    vals = [0] * len(c.ops)
    for i, op in enumerate(c.ops):
        if op == OP_INPUT:
            vals[i] = 1 if assignment[c.arg0[i]] == "1" else 0
        elif op == OP_CONST:
            vals[i] = c.arg0[i]
        elif op == OP_NOT:
            vals[i] = 1 - vals[c.arg0[i]]
        elif op == OP_AND:
            vals[i] = vals[c.arg0[i]] & vals[c.arg1[i]]
        else:
            vals[i] = vals[c.arg0[i]] | vals[c.arg1[i]]
    return vals[c.output]


def evaluate_masks(c: Circuit, input_masks: list[int], width: int) -> int:
    """Evaluate on many assignments at once using bigint bitmasks.

    input_masks[j] holds, in bit position i, input j's value under assignment
    number i; the result packs the outputs the same way.  This is the
    workhorse behind exhaustive agreement checks and the solver.
    """
    full = (1 << width) - 1
    vals = [0] * len(c.ops)
    for i, op in enumerate(c.ops):
        if op == OP_INPUT:
            vals[i] = input_masks[c.arg0[i]]
        elif op == OP_CONST:
            vals[i] = full if c.arg0[i] else 0
        elif op == OP_NOT:
            vals[i] = vals[c.arg0[i]] ^ full
        elif op == OP_AND:
            vals[i] = vals[c.arg0[i]] & vals[c.arg1[i]]
        else:
            vals[i] = vals[c.arg0[i]] | vals[c.arg1[i]]
    return vals[c.output]


def lex_input_masks(inputs: int, start: int, width: int) -> list[int]:
    """Masks for assignments numbered start..start+width-1, where assignment
    number a assigns input j the bit (a >> (inputs-1-j)) & 1.

    Assignment number order is therefore lexicographic order of the
    assignment string (input 0 is the most significant position).
    """
    masks = [0] * inputs
    for offset in range(width):
        a = start + offset
        for j in range(inputs):
            if (a >> (inputs - 1 - j)) & 1:
                masks[j] |= 1 << offset
    return masks


def truth_mask(c: Circuit) -> int:
    """Output over all 2^inputs assignments in lexicographic order."""
    n = c.input_count
    width = 1 << n
    masks = []
    for j in range(n):
        block = 1 << (n - 1 - j)
        chunk = ((1 << block) - 1) << block
        period = block << 1
        mask = 0
        for pos in range(0, width, period):
            mask |= chunk << pos
        masks.append(mask)
    return evaluate_masks(c, masks, width)


def specialize(c: Circuit, partial: dict[int, int]) -> Circuit:
    """Fix some inputs to bits; remaining inputs are renumbered densely in
    their original order.  Constant folding plus unreachable-node elimination
    keep the gate count from increasing."""
    for idx in partial:
        if idx < 0 or idx >= c.input_count:
            raise BadInputIndex(idx, c.input_count)
    renumber = {}
    for old in range(c.input_count):
        if old not in partial:
            renumber[old] = len(renumber)
    b = Builder(input_count=len(renumber))
    mapped = [0] * len(c.ops)
    for i, op in enumerate(c.ops):
        if op == OP_INPUT:
            old = c.arg0[i]
            if old in partial:
                mapped[i] = b.const(partial[old])
            else:
                mapped[i] = b.inp(renumber[old])
        elif op == OP_CONST:
            mapped[i] = b.const(c.arg0[i])
        elif op == OP_NOT:
            mapped[i] = b.not_(mapped[c.arg0[i]])
        elif op == OP_AND:
            mapped[i] = b.and_(mapped[c.arg0[i]], mapped[c.arg1[i]])
        else:
            mapped[i] = b.or_(mapped[c.arg0[i]], mapped[c.arg1[i]])
    return b.finish(mapped[c.output], input_count=len(renumber))


def stats(c: Circuit) -> CircuitStats:
    depth = [0] * len(c.ops)
    for i, op in enumerate(c.ops):
        if op in (OP_INPUT, OP_CONST):
            depth[i] = 0
        elif op == OP_NOT:
            depth[i] = 1 + depth[c.arg0[i]]
        else:
            depth[i] = 1 + max(depth[c.arg0[i]], depth[c.arg1[i]])
    return CircuitStats(gates=c.gate_count(), inputs=c.input_count,
                        depth=depth[c.output])


# --- binary wire format ---

def _ref_width(node_count: int) -> int:
    return max(0, (node_count - 1).bit_length()) if node_count > 1 else 0


def serialized_length(c: Circuit) -> int:
    """Exact byte length of serialize(c), from the documented bit layout."""
    w = _ref_width(len(c.ops))
    bits = 0
    for op in c.ops:
        if op == OP_CONST:
            bits += 3 + 1
        elif op in (OP_INPUT, OP_NOT):
            bits += 3 + w
        else:
            bits += 3 + 2 * w
    return 8 + (bits + 7) // 8


class _BitWriter:
    def __init__(self):
        self.acc = 0
        self.nbits = 0

    def write(self, value, width):
        if width == 0:
            return
        self.acc = (self.acc << width) | (value & ((1 << width) - 1))
        self.nbits += width

    def payload(self) -> bytes:
        pad = (-self.nbits) % 8
        acc = self.acc << pad
        return acc.to_bytes((self.nbits + pad) // 8, "big")


class _BitReader:
    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0

    def read(self, width) -> int:
        if width == 0:
            return 0
        if self.pos + width > len(self.data) * 8:
            raise MalformedHeader("payload truncated")
        value = 0
        for _ in range(width):
            byte = self.data[self.pos // 8]
            value = (value << 1) | ((byte >> (7 - self.pos % 8)) & 1)
            self.pos += 1
        return value

    def padding_is_zero(self) -> bool:
        rest = 0
        while self.pos < len(self.data) * 8:
            byte = self.data[self.pos // 8]
            rest |= (byte >> (7 - self.pos % 8)) & 1
            self.pos += 1
        return rest == 0


def serialize(c: Circuit) -> bytes:
    n = len(c.ops)
    w = _ref_width(n)
    out = _BitWriter()
    for i, op in enumerate(c.ops):
        out.write(op, 3)
        if op == OP_CONST:
            out.write(c.arg0[i], 1)
        elif op == OP_INPUT:
            if c.arg0[i] >= (1 << w) and w > 0 or (w == 0 and c.arg0[i] > 0):
                raise MalformedHeader(
                    f"input index {c.arg0[i]} does not fit in {w} reference bits")
            out.write(c.arg0[i], w)
        elif op == OP_NOT:
            out.write(c.arg0[i], w)
        else:
            out.write(c.arg0[i], w)
            out.write(c.arg1[i], w)
    header = n.to_bytes(4, "big") + c.input_count.to_bytes(4, "big")
    return header + out.payload()


def deserialize(data: bytes) -> Circuit:
    if len(data) < 8:
        raise MalformedHeader("buffer shorter than 8-byte header")
    n = int.from_bytes(data[0:4], "big")
    input_count = int.from_bytes(data[4:8], "big")
    if n == 0:
        raise MalformedHeader("node count is zero")
    w = _ref_width(n)
    reader = _BitReader(data[8:])
    ops, arg0, arg1 = [], [], []
    for i in range(n):
        op = reader.read(3)
        if op not in _OP_NAMES:
            raise MalformedHeader(f"node {i}: bad opcode {op}")
        if op == OP_CONST:
            a0, a1 = reader.read(1), 0
        elif op == OP_INPUT:
            a0, a1 = reader.read(w), 0
            if a0 >= input_count:
                raise DanglingReference(i, a0, input_count)
        elif op == OP_NOT:
            a0, a1 = reader.read(w), 0
            if a0 >= i:
                raise ForwardReference(i, a0)
        else:
            a0, a1 = reader.read(w), reader.read(w)
            if a0 >= i:
                raise ForwardReference(i, a0)
            if a1 >= i:
                raise ForwardReference(i, a1)
        ops.append(op)
        arg0.append(a0)
        arg1.append(a1)
    if not reader.padding_is_zero():
        raise MalformedHeader("nonzero padding bits")
    return Circuit(ops, arg0, arg1, input_count)


# --- human-readable text format for authoring fixtures ---

def circuit_to_text(c: Circuit) -> str:
    lines = [f"inputs {c.input_count}"]
    for i, op in enumerate(c.ops):
        if op == OP_INPUT:
            lines.append(f"g{i} = INPUT {c.arg0[i]}")
        elif op == OP_CONST:
            lines.append(f"g{i} = CONST {c.arg0[i]}")
        elif op == OP_NOT:
            lines.append(f"g{i} = NOT g{c.arg0[i]}")
        else:
            lines.append(f"g{i} = {_OP_NAMES[op]} g{c.arg0[i]} g{c.arg1[i]}")
    return "\n".join(lines) + "\n"


def circuit_from_text(text: str) -> Circuit:
    input_count = 0
    ops, arg0, arg1 = [], [], []

    def ref(tok, line_no, self_idx):
        if not tok.startswith("g"):
            raise MalformedHeader(f"line {line_no}: expected gate reference, got {tok!r}")
        idx = int(tok[1:])
        if idx >= self_idx:
            raise ForwardReference(self_idx, idx)
        return idx

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("inputs"):
            input_count = int(line.split()[1])
            continue
        lhs, rhs = (part.strip() for part in line.split("=", 1))
        idx = int(lhs[1:])
        if idx != len(ops):
            raise MalformedHeader(f"line {line_no}: gate ids must be dense, got {lhs}")
        toks = rhs.split()
        kind = toks[0].upper()
        if kind == "INPUT":
            ops.append(OP_INPUT)
            arg0.append(int(toks[1]))
            arg1.append(0)
        elif kind == "CONST":
            ops.append(OP_CONST)
            arg0.append(int(toks[1]))
            arg1.append(0)
        elif kind == "NOT":
            ops.append(OP_NOT)
            arg0.append(ref(toks[1], line_no, idx))
            arg1.append(0)
        elif kind in ("AND", "OR"):
            ops.append(OP_AND if kind == "AND" else OP_OR)
            arg0.append(ref(toks[1], line_no, idx))
            arg1.append(ref(toks[2], line_no, idx))
        else:
            raise MalformedHeader(f"line {line_no}: unknown gate kind {kind!r}")
    for i, op in enumerate(ops):
        if op == OP_INPUT and arg0[i] >= input_count:
            input_count = arg0[i] + 1
    return Circuit(ops, arg0, arg1, input_count)


def cnf_to_circuit(formula) -> Circuit:
    """Clause-by-clause encoding: one OR chain per clause, AND chain on top.

    Gate count stays within 3x the total literal occurrences.  An empty
    clause makes the whole circuit CONST(0); that is a value, not an error.
    """
    b = Builder(input_count=formula.variable_count)
    inputs = [b.inp(j) for j in range(formula.variable_count)]
    clause_nodes = []
    for clause in formula.clauses:
        lits = []
        for lit in clause:
            var = abs(lit) - 1
            lits.append(b.not_(inputs[var]) if lit < 0 else inputs[var])
        if not lits:
            clause_nodes.append(b.const(0))
        else:
            clause_nodes.append(b.or_many(lits))
    out = b.and_many(clause_nodes)
    return b.finish(out, input_count=formula.variable_count)
