"""Seeded random generators for circuits, graphs and instance inputs.

Everything takes an explicit random.Random so the oracle suites are
reproducible from a single seed.
"""

from __future__ import annotations

import random

from .circuits import Builder, Circuit
from .encoders import CliqueGraph, graph_from_edges
from .pstrings import PString, parse_pstring


def random_circuit(rng: random.Random, inputs: int, gates: int) -> Circuit:
    """Random bounded fan-in circuit; operand choice is biased towards
    recent nodes so the cone stays connected."""
    b = Builder(input_count=inputs)
    nodes = [b.inp(i) for i in range(inputs)]
    if not nodes:
        nodes.append(b.const(rng.randrange(2)))

    def pick():
        span = len(nodes)
        idx = span - 1 - min(rng.randrange(1, span + 1),
                             rng.randrange(1, span + 1)) + 1
        return nodes[max(0, min(span - 1, idx))]

    target = len(b.ops) + gates
    attempts = 0
    while len(b.ops) < target and attempts < gates * 20:
        attempts += 1
        kind = rng.random()
        if kind < 0.2:
            nodes.append(b.not_(pick()))
        elif kind < 0.6:
            nodes.append(b.and_(pick(), pick()))
        else:
            nodes.append(b.or_(pick(), pick()))
    out = nodes[-1]
    if b.ops[out] == 0:  # OP_INPUT: force at least one real gate
        out = b.not_(out)
    return b.finish(out, input_count=inputs)


def random_graph(rng: random.Random, vertices: int,
                 edge_probability: float) -> CliqueGraph:
    edges = [(u, w) for u in range(vertices) for w in range(u + 1, vertices)
             if rng.random() < edge_probability]
    return graph_from_edges(vertices, edges)


def random_pstring(rng: random.Random, length: int,
                   placeholder_count: int) -> PString:
    positions = set(rng.sample(range(length), min(placeholder_count, length)))
    chars = ["p" if i in positions else rng.choice("01")
             for i in range(length)]
    return parse_pstring("".join(chars))
