"""Exhaustive cross-checks of the generated verifier families against plain
Python predicates; these machines back every encoder, so they get the
heaviest direct scrutiny."""

import itertools

import pytest

from witforge.circuits import evaluate
from witforge.cnf import CNF
from witforge.encoders import clique_pstring, graph_from_edges
from witforge.gen import random_circuit
from witforge.machines import (clique_field_width, clique_time_bound,
                               cnf_layout, cnf_time_bound,
                               circuit_eval_time_bound, make_all_zeros,
                               make_circuit_eval_verifier, make_clique_verifier,
                               make_cnf_verifier, make_equality_halves,
                               make_parity)
from witforge.pstrings import apply_filling, parse_pstring
from witforge.tm import ACCEPT, TIMEOUT, run


def accepts(tm, text, bound):
    res = run(tm, text, bound)
    assert res.verdict != TIMEOUT, f"timeout on {text!r}"
    return res.verdict == ACCEPT


def test_parity_exhaustive():
    tm = make_parity()
    for n in range(0, 8):
        for tup in itertools.product("01", repeat=n):
            s = "".join(tup)
            assert accepts(tm, s, 2 * n + 8) == (s.count("1") % 2 == 1)


def test_parity_rejects_placeholder():
    tm = make_parity()
    assert not accepts(tm, "0p1", 20)


def test_equality_halves_exhaustive():
    tm = make_equality_halves()
    for n in range(0, 9):
        bound = 2 * n * n + 6 * n + 16
        for tup in itertools.product("01", repeat=n):
            s = "".join(tup)
            want = n % 2 == 0 and s[:n // 2] == s[n // 2:]
            assert accepts(tm, s, bound) == want, s


def test_equality_halves_rejects_placeholders():
    tm = make_equality_halves()
    for s in ("p", "0p", "pp01", "01p0"):
        assert not accepts(tm, s, 200)


CLIQUE_CASES = [
    (3, 3, [(0, 1), (1, 2), (0, 2)]),
    (3, 2, [(0, 1), (1, 2)]),
    (4, 2, [(0, 1), (2, 3)]),
    (5, 2, [(0, 4), (1, 3)]),
    (5, 3, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)]),
    (1, 1, []),
    (2, 1, [(0, 1)]),
    (4, 4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    (6, 2, []),
]


def clique_witness_ok(v, k, edges, bits):
    L = clique_field_width(v)
    if "p" in bits:
        return False
    ids = [int(bits[j * L:(j + 1) * L], 2) for j in range(k)]
    eset = {frozenset(e) for e in edges}
    return (all(i < v for i in ids) and len(set(ids)) == k and
            all(frozenset(p) in eset for p in itertools.combinations(ids, 2)))


@pytest.mark.parametrize("v,k,edges", CLIQUE_CASES)
def test_clique_verifier_exhaustive(v, k, edges):
    tm = make_clique_verifier(v, k)
    g = graph_from_edges(v, edges)
    x = clique_pstring(g, k)
    T = clique_time_bound(v, k, len(edges))
    L = clique_field_width(v)
    for val in range(1 << (k * L)):
        bits = format(val, f"0{k * L}b")
        got = accepts(tm, apply_filling(x, bits), T)
        assert got == clique_witness_ok(v, k, edges, bits), (bits, v, k)


@pytest.mark.parametrize("v,k,edges", CLIQUE_CASES[:4])
def test_clique_verifier_rejects_partial_witness(v, k, edges):
    tm = make_clique_verifier(v, k)
    g = graph_from_edges(v, edges)
    x = clique_pstring(g, k)
    T = clique_time_bound(v, k, len(edges))
    L = clique_field_width(v)
    partial_fills = [""]
    if k * L > 1:
        partial_fills.extend(["0", "1", "0" * (k * L - 1)])
    for r in partial_fills:
        assert not accepts(tm, apply_filling(x, r), T)


def test_clique_verifier_rejects_filled_separator():
    # a filling long enough to spill into the first separator cell must
    # never create an accepting run for k >= 2
    v, k, edges = 3, 2, [(0, 1), (1, 2), (0, 2)]
    tm = make_clique_verifier(v, k)
    x = clique_pstring(graph_from_edges(v, edges), k)
    T = clique_time_bound(v, k, len(edges))
    L = clique_field_width(v)
    for val in range(1 << (k * L)):
        witness = format(val, f"0{k * L}b")
        for sep in "01":
            assert not accepts(tm, apply_filling(x, witness + sep), T)


CNF_CASES = [
    CNF(2, ((1, 2),)),
    CNF(1, ((1,), (-1,))),
    CNF(3, ((1, -2), (2, 3))),
    CNF(4, ((1, 2, -3), (-1, 4), (3, -4), (2,))),
    CNF(5, ((1, -5), (2, 3, 4), (-2, 5))),
]


def cnf_input(formula, witness):
    lay = cnf_layout(formula)
    parts = [witness]
    for clause in formula.clauses:
        for lit in clause:
            parts.append("1" if lit < 0 else "0")
            parts.append(format(abs(lit) - 1, f"0{lay['bwidth']}b"))
    return "".join(parts)


@pytest.mark.parametrize("formula", CNF_CASES)
def test_cnf_verifier_exhaustive(formula):
    tm = make_cnf_verifier(formula)
    T = cnf_time_bound(formula)
    v = formula.variable_count
    for val in range(1 << v):
        bits = format(val, f"0{v}b")
        assert accepts(tm, cnf_input(formula, bits), T) == \
            formula.evaluate(bits)


def test_cnf_verifier_rejects_referenced_placeholder():
    formula = CNF(2, ((1, 2),))
    tm = make_cnf_verifier(formula)
    assert not accepts(tm, cnf_input(formula, "pp"), cnf_time_bound(formula))


def test_cnf_verifier_empty_clause_rejects_everything():
    formula = CNF(2, ((1,), ()), allow_empty=False)
    tm = make_cnf_verifier(formula)
    assert not accepts(tm, cnf_input(formula, "11"), cnf_time_bound(formula))


def test_circuit_eval_verifier_matches_evaluate(rng):
    from witforge.encoders import encode_circuit_sat

    for _ in range(12):
        c = random_circuit(rng, rng.randrange(0, 6), rng.randrange(1, 10))
        x, inst = encode_circuit_sat(c)
        tm = inst.verifier
        T = inst.time.eval(len(x))
        for val in range(1 << c.input_count):
            bits = format(val, f"0{c.input_count}b") if c.input_count else ""
            got = accepts(tm, apply_filling(x, bits), T)
            assert got == bool(evaluate(c, bits))


def test_all_zeros_fixture():
    tm = make_all_zeros()
    assert accepts(tm, "", 4)
    assert accepts(tm, "0000", 10)
    assert not accepts(tm, "0100", 10)
    assert not accepts(tm, "p", 10)
