"""Compile a verifier machine run into a Boolean circuit.

The construction is the classical tableau arithmetization: a grid of
(time_bound+1) configurations over a window of time_bound+1 cells, each cell
carrying a one-hot encoding of its symbol together with one-hot head/state
indicators, and each row derived from the previous one through the local
3-cell transition window.  Acceptance is the OR of the accept-state
indicators in the final row; halting configurations replicate downward so
early halts are captured.

Cells and head indicators are built through the folding circuit Builder, so
wires that are forced by hardwired input characters collapse to constants as
the rows are generated.  Only the uncertainty cone of the exposed input bits
materialises as gates; the grid itself is still walked row by row, which
keeps the gate count within the O(T^2 * c) tableau envelope.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .circuits import Builder, Circuit
from .errors import ExposeTooLarge, SpecInvariantViolation
from .pstrings import PString
from .tm import BLANK, LEFT, RIGHT, TMSpec, input_symbols


@dataclass(frozen=True)
class Hardwired:
    symbol: str


@dataclass(frozen=True)
class ExposedBit:
    index: int


Descriptor = Union[Hardwired, ExposedBit]


@dataclass(frozen=True)
class CompileSpec:
    machine: TMSpec
    time_bound: int
    interface: tuple[Descriptor, ...]

    @property
    def input_length(self) -> int:
        return len(self.interface)

    def exposed_count(self) -> int:
        return sum(1 for d in self.interface if isinstance(d, ExposedBit))

    def validate(self) -> None:
        if self.time_bound < 1:
            raise SpecInvariantViolation("time bound must be at least 1")
        if self.input_length > self.time_bound:
            raise SpecInvariantViolation(
                f"input length {self.input_length} exceeds time bound "
                f"{self.time_bound}")
        indices = [d.index for d in self.interface if isinstance(d, ExposedBit)]
        if sorted(indices) != list(range(len(indices))):
            raise SpecInvariantViolation(
                f"exposed input indices must be dense from 0, got {indices}")
        for d in self.interface:
            if isinstance(d, Hardwired) and d.symbol not in self.machine.alphabet:
                raise SpecInvariantViolation(
                    f"hardwired symbol {d.symbol!r} not in alphabet")


def compile_spec(spec: CompileSpec) -> Circuit:
    """Circuit is 1 on assignment a iff the machine accepts the input whose
    exposed positions carry a's bits ('0' for 0, '1' for 1) within the time
    bound.  Inputs are numbered by the ExposedBit indices."""
    spec.validate()
    tm = spec.machine
    T = spec.time_bound
    syms = {s: i for i, s in enumerate(tm.alphabet)}
    states = {q: i for i, q in enumerate(tm.states)}
    blank = syms[BLANK]
    accept = states[tm.accept]

    # delta[q][s] = (q2, s2, dpos); halting states self-loop in place
    delta = {}
    for q, qi in states.items():
        row = {}
        if tm.is_halting(q):
            for s, si in syms.items():
                row[si] = (qi, si, 0)
        else:
            for s, si in syms.items():
                q2, s2, d = tm.transitions[(q, s)]
                row[si] = (states[q2], syms[s2], 1 if d == RIGHT else
                           (-1 if d == LEFT else 0))
        delta[qi] = row

    b = Builder(input_count=spec.exposed_count())
    one = b.const(1)
    zero = b.const(0)
    blank_cell = {blank: one}

    tape: dict[int, dict[int, int]] = {}
    for pos, desc in enumerate(spec.interface):
        if isinstance(desc, Hardwired):
            tape[pos] = {syms[desc.symbol]: one}
        else:
            wire = b.inp(desc.index)
            tape[pos] = {syms["0"]: b.not_(wire), syms["1"]: wire}

    head: dict[int, dict[int, int]] = {0: {states[tm.start]: one}}
    halting = {accept, states[tm.reject]}

    for _ in range(T):
        if all(qi in halting for qmap in head.values() for qi in qmap):
            # every reachable state is absorbing: rows from here on
            # replicate, so the final row equals the current one
            break
        new_head: dict[int, dict[int, list[int]]] = {}
        writes: dict[int, dict[int, list[int]]] = {}
        presence: dict[int, list[int]] = {}
        for pos, statemap in head.items():
            cell = tape.get(pos, blank_cell)
            row_writes = writes.setdefault(pos, {})
            row_presence = presence.setdefault(pos, [])
            for qi, hw in statemap.items():
                drow = delta[qi]
                for si, sw in cell.items():
                    w = b.and_(hw, sw)
                    if w == zero:
                        continue
                    q2, s2, dpos = drow[si]
                    tpos = pos + dpos
                    if tpos < 0:
                        tpos = 0  # a left move at cell 0 stays
                    new_head.setdefault(tpos, {}).setdefault(q2, []).append(w)
                    row_writes.setdefault(s2, []).append(w)
                    row_presence.append(w)
        for pos, sym_writes in writes.items():
            cell = tape.get(pos, blank_cell)
            head_here = b.or_many(presence[pos])
            no_head = b.not_(head_here)
            new_cell = {}
            for si, sw in cell.items():
                keep = b.and_(no_head, sw)
                if keep != zero:
                    new_cell[si] = keep
            for si, wires in sym_writes.items():
                total = b.or_many(wires)
                prev = new_cell.get(si)
                merged = total if prev is None else b.or_(prev, total)
                if merged != zero:
                    new_cell[si] = merged
            tape[pos] = new_cell
        head = {}
        for pos, qmap in new_head.items():
            merged = {}
            for qi, wires in qmap.items():
                total = b.or_many(wires)
                if total != zero:
                    merged[qi] = total
            if merged:
                head[pos] = merged

    accept_wires = [qmap[accept] for qmap in head.values() if accept in qmap]
    return b.finish(b.or_many(accept_wires), input_count=spec.exposed_count())


def interface_for_pstring(x: PString, expose: int) -> tuple[Descriptor, ...]:
    """First `expose` placeholders become circuit inputs 0..expose-1; every
    other position, including the remaining placeholders, is hardwired."""
    if expose > x.pcount():
        raise ExposeTooLarge(expose, x.pcount())
    exposed = set(x.placeholder_positions[:expose])
    out: list[Descriptor] = []
    next_input = 0
    for pos, sym in enumerate(input_symbols(x)):
        if pos in exposed:
            out.append(ExposedBit(next_input))
            next_input += 1
        else:
            out.append(Hardwired(sym))
    return tuple(out)


def compile_on_pstring(machine: TMSpec, x: PString, expose: int,
                       time_bound: int) -> Circuit:
    """The C_i construction: hardwire x, expose its first i placeholders."""
    spec = CompileSpec(machine=machine, time_bound=time_bound,
                       interface=interface_for_pstring(x, expose))
    return compile_spec(spec)


def tableau_gate_envelope(tm: TMSpec, time_bound: int) -> int:
    """Upper bound on gates any compile with this machine and bound may emit:
    the full tableau grid times a machine-dependent per-cell constant."""
    per_cell = len(tm.alphabet) * (len(tm.states) + 2) * 4
    return (time_bound + 1) * (time_bound + 2) * per_cell
