"""Problem encodings into the placeholder/bounded-witness format.

Each encoder emits a (PString, instance) pair: witness placeholders out
front, then a binary description of the object, with the universe pinned to
exactly the emitted string.  The verifier machines come from the generated
families in machines.py; their instance-specific shape makes the emitted
time bounds small enough to compile.

The clique encoder also has an independent circuit-gadget construction used
to cross-validate the machine pipeline: both must accept exactly the same
witness assignments.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .bounds import const, parse_bound
from .circuits import Builder, Circuit, serialize
from .cnf import CNF
from .engine import DtiwiInstance
from .errors import KOutOfRange, ParseError
from .machines import (clique_field_width, clique_layout, clique_time_bound,
                       cnf_layout, cnf_time_bound, make_clique_verifier,
                       make_cnf_verifier)
from .pstrings import PString, parse_pstring
from .universe import literal_template


@dataclass(frozen=True)
class CliqueGraph:
    vertex_count: int
    edges: frozenset  # of frozenset vertex pairs

    def __post_init__(self):
        for edge in self.edges:
            u, w = sorted(edge)
            if u == w:
                raise ValueError(f"self-loop at vertex {u}")
            if not 0 <= u < w < self.vertex_count:
                raise ValueError(f"edge {{{u},{w}}} out of range")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(tuple(sorted(e)) for e in self.edges)

    def adjacent(self, u: int, w: int) -> bool:
        return frozenset((u, w)) in self.edges


def graph_from_edges(vertex_count: int, edges) -> CliqueGraph:
    return CliqueGraph(vertex_count,
                       frozenset(frozenset(e) for e in edges))


def parse_dimacs_graph(text: str) -> CliqueGraph:
    """DIMACS-like: 'p edge V E' then 'e u w' lines, 1-based vertex ids."""
    vertex_count = None
    edges = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) < 4 or parts[1] not in ("edge", "col"):
                raise ParseError(line_no, f"bad problem line {line!r}")
            vertex_count = int(parts[2])
        elif parts[0] == "e":
            u, w = int(parts[1]) - 1, int(parts[2]) - 1
            edges.append((u, w))
        else:
            raise ParseError(line_no, f"unrecognised line {line!r}")
    if vertex_count is None:
        raise ParseError(0, "missing 'p edge' line")
    return graph_from_edges(vertex_count, edges)


def graph_to_dimacs(g: CliqueGraph) -> str:
    lines = [f"p edge {g.vertex_count} {g.edge_count}"]
    for u, w in g.sorted_edges():
        lines.append(f"e {u + 1} {w + 1}")
    return "\n".join(lines) + "\n"


# --- SAT ---

def encode_sat(formula: CNF) -> tuple[PString, DtiwiInstance]:
    """Placeholders out front, one per variable, then sign/index literal
    blocks; variables appear as fixed-width binary indices into the
    placeholder block."""
    lay = cnf_layout(formula)
    bwidth = lay["bwidth"]
    parts = ["p" * formula.variable_count]
    for clause in formula.clauses:
        for lit in clause:
            parts.append("1" if lit < 0 else "0")
            parts.append(format(abs(lit) - 1, f"0{bwidth}b"))
    x = parse_pstring("".join(parts))
    inst = DtiwiInstance(
        name=f"sat_v{formula.variable_count}",
        universe=literal_template(x),
        verifier=make_cnf_verifier(formula),
        witness=const(formula.variable_count),
        time=const(cnf_time_bound(formula)),
    )
    return x, inst


# --- CircuitSAT ---

def encode_circuit_sat(c: Circuit) -> tuple[PString, DtiwiInstance]:
    """Placeholders out front, one per circuit input, then the serialized
    circuit re-expressed over {0,1}; the verifier machine has the evaluation
    order baked in and reads gate operand bits from the tape image."""
    from .machines import circuit_eval_time_bound, make_circuit_eval_verifier

    payload = "".join(format(byte, "08b") for byte in serialize(c))
    x = parse_pstring("p" * c.input_count + payload)
    inst = DtiwiInstance(
        name=f"circuitsat_m{c.gate_count()}",
        universe=literal_template(x),
        verifier=make_circuit_eval_verifier(c),
        witness=parse_bound("n / log2ceil(n + 1)"),
        time=const(circuit_eval_time_bound(c)),
    )
    assert c.input_count <= inst.witness.eval(len(x)), \
        "witness bound must cover the circuit's input count"
    return x, inst


# --- k-Clique ---

def clique_pstring(g: CliqueGraph, k: int) -> PString:
    lay = clique_layout(g.vertex_count, k, g.edge_count)
    L = lay["L"]
    parts = ["p" * (k * L), "p"]
    parts += [format(u, f"0{L}b") for u in range(g.vertex_count)]
    parts.append("p")
    for u, w in g.sorted_edges():
        parts.append(format(u, f"0{L}b") + format(w, f"0{L}b"))
        parts.append(format(w, f"0{L}b") + format(u, f"0{L}b"))
    x = parse_pstring("".join(parts))
    assert len(x) == lay["length"]
    return x


def encode_clique(g: CliqueGraph, k: int) -> tuple[PString, DtiwiInstance]:
    """Witness placeholders for k vertex ids, then the graph: a vertex-id
    table realising the vertex-count section, then fixed-width edge entries
    in both orientations.  The verifier decodes the k ids and checks range,
    distinctness and pairwise adjacency."""
    if not 1 <= k <= g.vertex_count:
        raise KOutOfRange(k, g.vertex_count)
    x = clique_pstring(g, k)
    inst = DtiwiInstance(
        name=f"clique_v{g.vertex_count}_k{k}",
        universe=literal_template(x),
        verifier=make_clique_verifier(g.vertex_count, k),
        witness=parse_bound(f"{k} * log2ceil(n)"),
        time=const(clique_time_bound(g.vertex_count, k, g.edge_count)),
    )
    L = clique_field_width(g.vertex_count)
    assert inst.witness.eval(len(x)) >= k * L, \
        "witness bound must cover the id fields"
    return x, inst


def clique_gadget_circuit(g: CliqueGraph, k: int) -> Circuit:
    """Direct circuit over the same witness bits as the machine verifier:
    range comparators per field, pairwise distinctness, and adjacency as an
    OR over edge-id equality checks.  Used as the oracle path against the
    compiled machine."""
    if not 1 <= k <= g.vertex_count:
        raise KOutOfRange(k, g.vertex_count)
    v = g.vertex_count
    L = clique_field_width(v)
    b = Builder(input_count=k * L)
    fields = [[b.inp(j * L + i) for i in range(L)] for j in range(k)]

    def equals_const(field, value):
        bits = format(value, f"0{L}b")
        return b.and_many([w if bit == "1" else b.not_(w)
                           for w, bit in zip(field, bits)])

    def less_than_const(field, value):
        bits = format(value, f"0{L}b")
        terms = []
        prefix = b.const(1)
        for w, bit in zip(field, bits):
            if bit == "1":
                terms.append(b.and_(prefix, b.not_(w)))
                prefix = b.and_(prefix, w)
            else:
                prefix = b.and_(prefix, b.not_(w))
        return b.or_many(terms)

    checks = []
    if v < (1 << L):
        for j in range(k):
            checks.append(less_than_const(fields[j], v))
    for j, j2 in itertools.combinations(range(k), 2):
        same = b.and_many([b.eq_(a, c) for a, c in zip(fields[j], fields[j2])])
        checks.append(b.not_(same))
        adj = []
        for u, w in g.sorted_edges():
            adj.append(b.and_(equals_const(fields[j], u),
                              equals_const(fields[j2], w)))
            adj.append(b.and_(equals_const(fields[j], w),
                              equals_const(fields[j2], u)))
        checks.append(b.or_many(adj))
    return b.finish(b.and_many(checks), input_count=k * L)


def exhaustive_clique_search(g: CliqueGraph, k: int) -> tuple[int, ...] | None:
    """Reference decision: scan all C(v, k) vertex subsets."""
    if not 1 <= k <= g.vertex_count:
        raise KOutOfRange(k, g.vertex_count)
    for subset in itertools.combinations(range(g.vertex_count), k):
        if all(g.adjacent(u, w) for u, w in itertools.combinations(subset, 2)):
            return subset
    return None
