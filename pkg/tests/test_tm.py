import itertools

import pytest

from witforge.errors import (AlphabetTooLarge, NonTotalTransitions, ParseError,
                             SymbolNotInAlphabet, UnknownBuiltin)
from witforge.machines import BUILTIN_NAMES, builtin
from witforge.pstrings import parse_pstring
from witforge.tm import (ACCEPT, REJECT, TIMEOUT, parse_tm, run, run_trace,
                         tm_to_text)

LOOPER = """
states: a b acc rej
start: a
accept: acc
reject: rej
alphabet: 0 1 p _
a 0 -> b 0 R
a 1 -> b 1 R
a p -> b p R
a _ -> b _ R
b 0 -> a 0 L
b 1 -> a 1 L
b p -> a p L
b _ -> a _ L
"""


def test_builtin_all_zeros_has_three_states():
    tm = builtin("all_zeros")
    assert len(tm.states) == 3


def test_builtin_unknown():
    with pytest.raises(UnknownBuiltin):
        builtin("nope")


def test_run_fixture_semantics():
    tm = builtin("all_zeros")
    assert run(tm, "000", 20).verdict == ACCEPT
    assert run(tm, "010", 20).verdict == REJECT
    assert run(tm, parse_pstring("0p0"), 20).verdict == REJECT


def test_run_timeout():
    tm = parse_tm(LOOPER)
    res = run(tm, "01", 5)
    assert res.verdict == TIMEOUT and res.steps == 5


def test_run_determinism():
    tm = builtin("parity")
    a = run(tm, "0110", 30)
    b = run(tm, "0110", 30)
    assert a == b


def test_halting_monotonicity():
    tm = builtin("parity")
    base = run(tm, "1011", 30)
    assert base.verdict in (ACCEPT, REJECT)
    for bound in range(base.steps, base.steps + 10):
        res = run(tm, "1011", bound)
        assert res.verdict == base.verdict
        assert res.steps == base.steps


def test_symbol_not_in_alphabet():
    tm = builtin("all_zeros")
    with pytest.raises(SymbolNotInAlphabet):
        run(tm, "0A0", 5)


def test_trace_shape_and_replication():
    tm = builtin("all_zeros")
    tab = run_trace(tm, "00", 6)
    assert len(tab.rows) == 7
    assert tab.rows[-1].state == tm.accept
    assert all(len(r.tape) == 7 for r in tab.rows)
    # halting configuration replicates
    halted = [r for r in tab.rows if r.state == tm.accept]
    assert len(halted) >= 2
    assert halted[0] == halted[-1]


def test_trace_zero_bound():
    tm = builtin("all_zeros")
    tab = run_trace(tm, "0", 1)
    assert len(tab.rows) == 2
    assert tab.rows[0].state == tm.start


def test_trace_timeout_rows():
    tm = parse_tm(LOOPER)
    tab = run_trace(tm, "01", 3)
    assert len(tab.rows) == 4
    assert tab.verdict == TIMEOUT
    assert not any(r.state in (tm.accept, tm.reject) for r in tab.rows)


def _step_config(tm, row):
    """Independent single-step oracle used to validate traces."""
    state, head, tape = row.state, row.head, list(row.tape)
    if state in (tm.accept, tm.reject):
        return row
    sym = tape[head]
    to, wsym, direction = tm.transitions[(state, sym)]
    tape[head] = wsym
    if direction == "R":
        head += 1
    elif direction == "L" and head > 0:
        head -= 1
    return type(row)(tuple(tape), head, to)


@pytest.mark.parametrize("name", ["all_zeros", "parity", "equality_halves"])
def test_trace_consistency(name):
    tm = builtin(name)
    bound = 2 * 8 * 8 + 6 * 8 + 16
    for n in range(0, 5):
        for tup in itertools.product("01", repeat=n):
            tab = run_trace(tm, "".join(tup), min(bound, 70))
            for row, nxt in zip(tab.rows, tab.rows[1:]):
                assert _step_config(tm, row) == nxt


def test_run_agrees_with_trace_verdict():
    tm = builtin("equality_halves")
    for text in ("", "00", "01", "0101", "0110", "010010"):
        bound = 2 * len(text) ** 2 + 6 * len(text) + 16
        assert run(tm, text, bound).verdict == run_trace(tm, text, bound).verdict


# --- text format ---

def test_parse_missing_transition():
    text = """
states: s acc rej
start: s
accept: acc
reject: rej
alphabet: 0 1 p _
s 0 -> s 0 R
s 1 -> s 1 R
s p -> rej p S
"""
    with pytest.raises(NonTotalTransitions):
        parse_tm(text)


def test_parse_alphabet_too_large():
    text = """
states: s acc rej
start: s
accept: acc
reject: rej
alphabet: 0 1 p _ A B C D E
"""
    with pytest.raises(AlphabetTooLarge):
        parse_tm(text)


def test_parse_error_on_garbage():
    with pytest.raises(ParseError):
        parse_tm("states: a acc rej\nwhat is this line")


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_builtin_text_roundtrip(name):
    tm = builtin(name)
    tm2 = parse_tm(tm_to_text(tm), name=tm.name)
    assert tm2.transitions == tm.transitions
    assert tm2.start == tm.start
    assert set(tm2.states) == set(tm.states)
    # verdict agreement on a few inputs
    for text in ("", "0", "01", "0011"):
        assert run(tm, text, 400).verdict == run(tm2, text, 400).verdict
