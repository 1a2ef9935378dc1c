import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from witforge.circuits import (Builder, OP_INPUT, circuit_from_text,
                               circuit_to_text, cnf_to_circuit, deserialize,
                               evaluate, serialize, serialized_length,
                               specialize, stats, truth_mask)
from witforge.cnf import CNF
from witforge.errors import (AssignmentLengthMismatch, BadInputIndex,
                             DanglingReference, ForwardReference,
                             MalformedHeader)
from witforge.gen import random_circuit


def and_gate():
    b = Builder(input_count=2)
    return b.finish(b.and_(b.inp(0), b.inp(1)), input_count=2)


def majority3():
    b = Builder(input_count=3)
    x0, x1, x2 = b.inp(0), b.inp(1), b.inp(2)
    out = b.or_(b.or_(b.and_(x0, x1), b.and_(x0, x2)), b.and_(x1, x2))
    return b.finish(out, input_count=3)


def test_evaluate_and_gate():
    c = and_gate()
    assert evaluate(c, "11") == 1
    assert [evaluate(c, a) for a in ("00", "01", "10")] == [0, 0, 0]


def test_evaluate_const_zero_inputs():
    b = Builder()
    c = b.finish(b.const(1))
    assert evaluate(c, "") == 1


def test_evaluate_length_mismatch():
    with pytest.raises(AssignmentLengthMismatch):
        evaluate(and_gate(), "1")


def test_majority_truth_table():
    c = majority3()
    for bits in itertools.product("01", repeat=3):
        a = "".join(bits)
        want = 1 if a.count("1") >= 2 else 0
        assert evaluate(c, a) == want


def test_truth_mask_matches_pointwise():
    rng = random.Random(3)
    for _ in range(20):
        c = random_circuit(rng, rng.randrange(0, 6), rng.randrange(1, 12))
        mask = truth_mask(c)
        for a in range(1 << c.input_count):
            bits = format(a, f"0{c.input_count}b") if c.input_count else ""
            assert (mask >> a) & 1 == evaluate(c, bits)


def test_specialize_absorbing():
    c = specialize(and_gate(), {0: 0})
    assert c.input_count == 1  # x1 remains
    assert evaluate(c, "0") == 0 and evaluate(c, "1") == 0
    c2 = specialize(c, {0: 1})
    assert c2.input_count == 0
    assert evaluate(c2, "") == 0


def test_specialize_empty_map_is_identity_semantics():
    c = majority3()
    c2 = specialize(c, {})
    assert c2.input_count == 3
    for a in range(8):
        bits = format(a, "03b")
        assert evaluate(c2, bits) == evaluate(c, bits)


def test_specialize_bad_index():
    with pytest.raises(BadInputIndex):
        specialize(and_gate(), {7: 1})


def test_specialize_equivalence_random():
    rng = random.Random(11)
    for _ in range(30):
        n = rng.randrange(1, 7)
        c = random_circuit(rng, n, 20)
        fixed = {i: rng.randrange(2) for i in rng.sample(range(n),
                                                         rng.randrange(0, n + 1))}
        sp = specialize(c, fixed)
        remaining = [i for i in range(n) if i not in fixed]
        assert sp.input_count == len(remaining)
        for a in range(1 << len(remaining)):
            bits = format(a, f"0{len(remaining)}b") if remaining else ""
            merged = ["?"] * n
            for i, b in fixed.items():
                merged[i] = str(b)
            for j, i in enumerate(remaining):
                merged[i] = bits[j]
            assert evaluate(sp, bits) == evaluate(c, "".join(merged))
        assert sp.gate_count() <= c.gate_count()


def test_de_morgan_pointwise():
    b = Builder(input_count=2)
    lhs = b.finish(b.not_(b.and_(b.inp(0), b.inp(1))), input_count=2)
    b2 = Builder(input_count=2)
    rhs = b2.finish(b2.or_(b2.not_(b2.inp(0)), b2.not_(b2.inp(1))),
                    input_count=2)
    assert truth_mask(lhs) == truth_mask(rhs)


def test_stats_examples():
    st_and = stats(and_gate())
    assert (st_and.gates, st_and.inputs, st_and.depth) == (1, 2, 1)
    b = Builder()
    st_const = stats(b.finish(b.const(0)))
    assert (st_const.gates, st_const.inputs, st_const.depth) == (1, 0, 0)
    st_maj = stats(majority3())
    assert (st_maj.gates, st_maj.inputs, st_maj.depth) == (5, 3, 3)


def test_depth_at_most_gates():
    rng = random.Random(7)
    for _ in range(25):
        c = random_circuit(rng, rng.randrange(0, 5), rng.randrange(1, 30))
        s = stats(c)
        assert s.depth <= s.gates


# --- serialization ---

def test_roundtrip_fixtures():
    fixtures = [and_gate(), majority3()]
    b = Builder()
    fixtures.append(b.finish(b.const(1)))
    for c in fixtures:
        data = serialize(c)
        c2 = deserialize(data)
        assert c2.ops == c.ops and c2.arg0 == c.arg0 and c2.arg1 == c.arg1
        assert c2.input_count == c.input_count
        assert serialize(c2) == data


def test_const_circuit_length():
    b = Builder()
    c = b.finish(b.const(1))
    data = serialize(c)
    # header 8 bytes, payload 3 opcode bits + 1 value bit -> one padded byte
    assert len(data) == 9
    assert serialized_length(c) == 9


def test_serialized_length_formula_random():
    rng = random.Random(13)
    for _ in range(200):
        c = random_circuit(rng, rng.randrange(0, 8), rng.randrange(1, 60))
        assert len(serialize(c)) == serialized_length(c)


def test_thousand_gate_length_band():
    rng = random.Random(17)
    c = random_circuit(rng, 10, 1000)
    n_nodes = len(c.ops)
    w = max(0, (n_nodes - 1).bit_length())
    m = c.gate_count()
    lo = m * (3 + 2 * w) // 8
    assert lo <= len(serialize(c)) <= lo + 64 + n_nodes  # inputs add 3+w each


def test_deserialize_errors():
    with pytest.raises(MalformedHeader):
        deserialize(b"\x00\x00")
    with pytest.raises(MalformedHeader):
        deserialize(b"\x00\x00\x00\x00" + b"\x00\x00\x00\x00")  # zero nodes
    good = serialize(and_gate())
    truncated = good[:-1]
    with pytest.raises(MalformedHeader):
        deserialize(truncated)
    # forward reference: single NOT node pointing at itself
    bad = (1).to_bytes(4, "big") + (0).to_bytes(4, "big") + bytes([0b01000000])
    with pytest.raises(ForwardReference):
        deserialize(bad)
    # dangling input: INPUT index 0 with declared count 0
    bad2 = (1).to_bytes(4, "big") + (0).to_bytes(4, "big") + bytes([0b00000000])
    with pytest.raises(DanglingReference):
        deserialize(bad2)


def test_nonzero_padding_rejected():
    data = bytearray(serialize(and_gate()))
    data[-1] |= 0x01
    with pytest.raises(MalformedHeader):
        deserialize(bytes(data))


def test_text_format_roundtrip():
    c = majority3()
    text = circuit_to_text(c)
    c2 = circuit_from_text(text)
    assert truth_mask(c2) == truth_mask(c)
    assert "AND" in text and "INPUT" in text


# --- cnf_to_circuit ---

def test_cnf_single_clause():
    c = cnf_to_circuit(CNF(2, ((1, -2),)))
    assert c.gate_count() == 2  # one NOT, one OR
    for a, want in (("00", 1), ("01", 0), ("10", 1), ("11", 1)):
        assert evaluate(c, a) == want


def test_cnf_contradiction():
    c = cnf_to_circuit(CNF(1, ((1,), (-1,))))
    assert truth_mask(c) == 0


def test_cnf_empty_clause_is_const_zero():
    c = cnf_to_circuit(CNF(1, ((1,), ())))
    assert truth_mask(c) == 0


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=1, max_value=4), st.data())
def test_cnf_random_matches_semantics(nvars, data):
    n_clauses = data.draw(st.integers(min_value=1, max_value=5))
    clauses = []
    for _ in range(n_clauses):
        width = data.draw(st.integers(min_value=1, max_value=3))
        clause = tuple(data.draw(st.integers(min_value=1, max_value=nvars)) *
                       (1 if data.draw(st.booleans()) else -1)
                       for _ in range(width))
        clauses.append(clause)
    f = CNF(nvars, tuple(clauses))
    c = cnf_to_circuit(f)
    lits = sum(len(cl) for cl in f.clauses)
    assert c.gate_count() <= 3 * lits
    for a in range(1 << nvars):
        bits = format(a, f"0{nvars}b")
        assert bool(evaluate(c, bits)) == f.evaluate(bits)
