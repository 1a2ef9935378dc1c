"""Single-tape deterministic Turing machines with exact step semantics.

The machine model matches what the circuit compiler arithmetizes: semi-infinite
tape, head starting at cell 0, a move left at cell 0 stays in place, and
timeout is a distinct verdict that is never coerced to reject.  Alphabets are
capped at 8 symbols so every symbol fits a 3-bit code.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    AlphabetTooLarge,
    NonTotalTransitions,
    ParseError,
    SpecInvariantViolation,
    SymbolNotInAlphabet,
)
from .pstrings import PString

BLANK = "_"
LEFT, RIGHT, STAY = "L", "R", "S"

ACCEPT = "Accept"
REJECT = "Reject"
TIMEOUT = "Timeout"

_PCHAR = {0: "0", 1: "1", 2: "p"}


@dataclass(frozen=True)
class TMSpec:
    """Transitions map (state, symbol) -> (state, symbol, direction) and must
    be total on non-halting states; accept and reject have no outgoing rules."""

    name: str
    states: tuple[str, ...]
    start: str
    accept: str
    reject: str
    alphabet: tuple[str, ...]
    transitions: dict[tuple[str, str], tuple[str, str, str]]

    def __post_init__(self):
        if len(self.alphabet) > 8:
            raise AlphabetTooLarge(len(self.alphabet))
        if self.accept == self.reject:
            raise ParseError(0, "accept and reject must differ")
        for required in ("0", "1", "p", BLANK):
            if required not in self.alphabet:
                raise ParseError(0, f"alphabet must contain {required!r}")
        for name in (self.start, self.accept, self.reject):
            if name not in self.states:
                raise ParseError(0, f"state {name!r} not declared")
        for (state, sym), (to, wsym, direction) in self.transitions.items():
            if state in (self.accept, self.reject):
                raise ParseError(0, f"transition leaves halting state {state!r}")
            if sym not in self.alphabet or wsym not in self.alphabet:
                raise ParseError(0, f"transition uses undeclared symbol")
            if to not in self.states:
                raise ParseError(0, f"transition targets undeclared state {to!r}")
            if direction not in (LEFT, RIGHT, STAY):
                raise ParseError(0, f"bad direction {direction!r}")
        for state in self.states:
            if state in (self.accept, self.reject):
                continue
            for sym in self.alphabet:
                if (state, sym) not in self.transitions:
                    raise NonTotalTransitions(state, sym)

    def key(self) -> tuple:
        """Hashable identity used for compile memoisation."""
        return (self.name, self.states, self.start, self.accept, self.reject,
                self.alphabet, tuple(sorted(self.transitions.items())))

    def is_halting(self, state: str) -> bool:
        return state in (self.accept, self.reject)


@dataclass(frozen=True)
class RunResult:
    verdict: str
    steps: int


@dataclass(frozen=True)
class Configuration:
    tape: tuple[str, ...]
    head: int
    state: str


@dataclass(frozen=True)
class Tableau:
    """time_bound+1 rows over a fixed window of time_bound+1 cells; trailing
    rows replicate the halting configuration."""

    rows: tuple[Configuration, ...]
    verdict: str
    steps: int


def input_symbols(x: PString | str) -> list[str]:
    if isinstance(x, PString):
        return [_PCHAR[c] for c in x.codes()]
    return list(x)


class _Sim:
    """Shared stepping core for run and run_trace."""

    __slots__ = ("tm", "tape", "head", "state")

    def __init__(self, tm: TMSpec, symbols: list[str]):
        for sym in symbols:
            if sym not in tm.alphabet:
                raise SymbolNotInAlphabet(sym)
        self.tm = tm
        self.tape = list(symbols)
        self.head = 0
        self.state = tm.start

    def step(self) -> None:
        tape = self.tape
        if self.head >= len(tape):
            tape.extend([BLANK] * (self.head - len(tape) + 1))
        sym = tape[self.head]
        to, wsym, direction = self.tm.transitions[(self.state, sym)]
        tape[self.head] = wsym
        if direction == RIGHT:
            self.head += 1
        elif direction == LEFT and self.head > 0:
            self.head -= 1
        self.state = to


def run(tm: TMSpec, x: PString | str, time_bound: int) -> RunResult:
    sim = _Sim(tm, input_symbols(x))
    transitions = tm.transitions
    tape, head, state = sim.tape, 0, sim.state
    accept, reject = tm.accept, tm.reject
    width = len(tape)
    for step in range(time_bound):
        if state == accept:
            return RunResult(ACCEPT, step)
        if state == reject:
            return RunResult(REJECT, step)
        if head >= width:
            tape.extend([BLANK] * (head - width + 1))
            width = head + 1
        sym = tape[head]
        state, wsym, direction = transitions[(state, sym)]
        tape[head] = wsym
        if direction == RIGHT:
            head += 1
        elif direction == LEFT and head > 0:
            head -= 1
    if state == accept:
        return RunResult(ACCEPT, time_bound)
    if state == reject:
        return RunResult(REJECT, time_bound)
    return RunResult(TIMEOUT, time_bound)


def run_trace(tm: TMSpec, x: PString | str, time_bound: int) -> Tableau:
    symbols = input_symbols(x)
    window = time_bound + 1
    if len(symbols) > window:
        raise SpecInvariantViolation(
            f"input of length {len(symbols)} exceeds the {window}-cell window")
    sim = _Sim(tm, symbols)
    sim.tape.extend([BLANK] * (window - len(sim.tape)))

    def snapshot():
        return Configuration(tuple(sim.tape[:window]), sim.head, sim.state)

    rows = [snapshot()]
    verdict = TIMEOUT
    steps = time_bound
    for step in range(time_bound):
        if tm.is_halting(sim.state):
            rows.append(rows[-1])
            continue
        sim.step()
        rows.append(snapshot())
        if tm.is_halting(sim.state):
            if verdict == TIMEOUT:
                verdict = ACCEPT if sim.state == tm.accept else REJECT
                steps = step + 1
    if verdict == TIMEOUT and tm.is_halting(sim.state):
        verdict = ACCEPT if sim.state == tm.accept else REJECT
    return Tableau(tuple(rows), verdict, steps)


# --- line-oriented machine text format ---

def parse_tm(text: str, name: str = "machine") -> TMSpec:
    states = None
    start = accept = reject = None
    alphabet = None
    transitions = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("states:"):
            states = tuple(line.split(":", 1)[1].split())
        elif line.startswith("start:"):
            start = line.split(":", 1)[1].strip()
        elif line.startswith("accept:"):
            accept = line.split(":", 1)[1].strip()
        elif line.startswith("reject:"):
            reject = line.split(":", 1)[1].strip()
        elif line.startswith("alphabet:"):
            alphabet = tuple(line.split(":", 1)[1].split())
        elif "->" in line:
            lhs, rhs = line.split("->")
            lhs_parts = lhs.split()
            rhs_parts = rhs.split()
            if len(lhs_parts) != 2 or len(rhs_parts) != 3:
                raise ParseError(line_no, f"bad transition {line!r}")
            key = (lhs_parts[0], lhs_parts[1])
            if key in transitions:
                raise ParseError(line_no, f"duplicate transition for {key}")
            transitions[key] = (rhs_parts[0], rhs_parts[1], rhs_parts[2])
        else:
            raise ParseError(line_no, f"unrecognised line {line!r}")
    if states is None or start is None or accept is None or reject is None \
            or alphabet is None:
        raise ParseError(0, "missing header line (states/start/accept/reject/alphabet)")
    return TMSpec(name=name, states=states, start=start, accept=accept,
                  reject=reject, alphabet=alphabet, transitions=transitions)


def tm_to_text(tm: TMSpec) -> str:
    lines = [
        "states: " + " ".join(tm.states),
        f"start: {tm.start}",
        f"accept: {tm.accept}",
        f"reject: {tm.reject}",
        "alphabet: " + " ".join(tm.alphabet),
    ]
    for (state, sym), (to, wsym, direction) in sorted(tm.transitions.items()):
        lines.append(f"{state} {sym} -> {to} {wsym} {direction}")
    return "\n".join(lines) + "\n"
