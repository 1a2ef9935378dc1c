"""CNF formulas with DIMACS-style literals: literal +/-(v+1) for variable v."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ParseError


@dataclass(frozen=True)
class CNF:
    variable_count: int
    clauses: tuple[tuple[int, ...], ...]
    allow_empty: bool = field(default=False, compare=False)

    def __post_init__(self):
        if self.variable_count < 0:
            raise ValueError("negative variable count")
        if not self.clauses and not self.allow_empty:
            raise ValueError("empty formula (pass allow_empty=True if intended)")
        for clause in self.clauses:
            for lit in clause:
                if lit == 0 or abs(lit) > self.variable_count:
                    raise ValueError(f"literal {lit} out of range")

    def evaluate(self, bits: str) -> bool:
        assert len(bits) == self.variable_count
        for clause in self.clauses:
            if not any((bits[abs(lit) - 1] == "1") != (lit < 0) for lit in clause):
                return False
        return True


def parse_dimacs_cnf(text: str) -> CNF:
    nvars = None
    clauses = []
    current: list[int] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) < 4 or parts[1] != "cnf":
                raise ParseError(line_no, f"bad problem line {line!r}")
            nvars = int(parts[2])
            continue
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            else:
                current.append(lit)
    if current:
        clauses.append(tuple(current))
    if nvars is None:
        nvars = max((abs(l) for cl in clauses for l in cl), default=0)
    return CNF(variable_count=nvars, clauses=tuple(clauses))


def cnf_to_dimacs(formula: CNF) -> str:
    lines = [f"p cnf {formula.variable_count} {len(formula.clauses)}"]
    for clause in formula.clauses:
        lines.append(" ".join(str(l) for l in clause) + " 0")
    return "\n".join(lines) + "\n"
