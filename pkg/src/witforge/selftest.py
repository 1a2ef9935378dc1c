"""Cross-module oracle suites behind `forge selftest`.

Each suite checks one equivalence the package is built around, at a scale
that finishes in seconds; the full versions live in the test suite.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .circuits import evaluate
from .compiler import ExposedBit, CompileSpec, compile_spec
from .encoders import (clique_gadget_circuit, encode_clique,
                       exhaustive_clique_search)
from .engine import decide_bruteforce, decide_via_circuits
from .gen import random_circuit, random_graph
from .machines import make_parity
from .pstrings import apply_filling, closure_of, parse_pstring
from .solver import LENIENT, solve
from .tm import ACCEPT, run
from .tradeoffs import required_k_for_epsilon, tradeoff_table


def run_selftest(seed: int = 20240901, verbose: bool = True) -> tuple[int, int]:
    rng = random.Random(seed)
    failures = 0
    checks = 0

    def note(ok, label):
        nonlocal failures, checks
        checks += 1
        if not ok:
            failures += 1
        if verbose:
            print(f"{'ok  ' if ok else 'FAIL'} {label}")

    x = parse_pstring("11p01p0p")
    note(apply_filling(x, "0110").text() == "11001101", "worked filling example")
    clo = {s.text() for s in closure_of([parse_pstring("0p1p")])}
    note(clo == {"0p1p", "0p10", "0p11", "001p", "011p",
                 "0010", "0011", "0110", "0111"}, "worked closure example")

    parity = make_parity()
    spec = CompileSpec(machine=parity, time_bound=16,
                       interface=tuple(ExposedBit(i) for i in range(4)))
    c = compile_spec(spec)
    ok = all(evaluate(c, format(a, "04b")) ==
             (run(parity, format(a, "04b"), 16).verdict == ACCEPT)
             for a in range(16))
    note(ok, "compiler matches direct execution (parity, 4 bits)")

    ok = True
    for _ in range(10):
        cc = random_circuit(rng, rng.randrange(0, 7), rng.randrange(1, 14))
        res = solve(cc, mode=LENIENT)
        width = cc.input_count
        assignments = [format(a, f"0{width}b") if width else ""
                       for a in range(1 << width)]
        sat = [a for a in assignments if evaluate(cc, a)]
        if res.satisfiable != bool(sat) or (sat and res.witness != sat[0]):
            ok = False
    note(ok, "solver agrees with full-enumeration oracle (10 circuits)")

    ok = True
    for _ in range(4):
        v = rng.randrange(3, 6)
        k = rng.randrange(2, min(v, 3) + 1)
        g = random_graph(rng, v, 0.5)
        want = exhaustive_clique_search(g, k) is not None
        xk, inst = encode_clique(g, k)
        got_b = decide_bruteforce(inst, xk)
        got_p, _ = decide_via_circuits(inst, xk)
        got_g = solve(clique_gadget_circuit(g, k), mode=LENIENT).satisfiable
        if not (got_b == got_p == got_g == want):
            ok = False
    note(ok, "clique pipeline = gadget = subsets (4 graphs)")

    rows = tradeoff_table(Fraction(3, 2), 20)
    ok = all(r.z * (r.alpha - 1) == r.exponent - 1 for r in rows)
    ratios = [r.ratio for r in rows]
    ok = ok and all(a >= b for a, b in zip(ratios, ratios[1:]))
    ok = ok and required_k_for_epsilon(Fraction(3, 2), 1) == 1
    note(ok, "trade-off arithmetic identities")

    return failures, checks
