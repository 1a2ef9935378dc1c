import itertools

import pytest

from witforge.errors import TemplateError
from witforge.pstrings import parse_pstring
from witforge.universe import (PaddedUniverse, literal_template,
                               parse_template)


def members(template, max_len=6):
    out = set()
    for n in range(0, max_len + 1):
        for tup in itertools.product("01p", repeat=n):
            s = "".join(tup)
            if template.match(parse_pstring(s)):
                out.add(s)
    return out


def test_literal_template_single_string():
    t = parse_template("0p1p")
    assert members(t) == {"0p1p"}


def test_class_template():
    t = parse_template("0{01p}1{01p}")
    assert members(t) == {"0p1p", "0p10", "0p11", "001p", "011p",
                          "0010", "0011", "0110", "0111"}


def test_closure_of_literal_matches_worked_example():
    t = parse_template("0p1p")
    clo = t.closure_template()
    assert clo.render() == "0{01p}1{01p}"
    assert members(clo) == {"0p1p", "0p10", "0p11", "001p", "011p",
                            "0010", "0011", "0110", "0111"}


def test_repeat_full_length():
    t = parse_template("{01p}*{n}")
    for s in ("", "0", "ppp", "01p01p"):
        assert t.match(parse_pstring(s))


def test_repeat_placeholder_block():
    t = parse_template("p*{n}")
    assert t.match(parse_pstring("ppp"))
    assert not t.match(parse_pstring("pp0"))


def test_repeat_with_expression_count():
    t = parse_template("1{01}*{n / 2}")  # literal 1, then ceil(n/2) bits
    assert t.match(parse_pstring("100"))   # 1 + ceil(3/2) = 3 cells
    assert t.match(parse_pstring("10"))    # 1 + ceil(2/2) = 2 cells
    assert not t.match(parse_pstring("1000"))  # 1 + ceil(4/2) = 3 != 4
    assert not t.match(parse_pstring("1p"))    # p not in the class
    assert not t.match(parse_pstring("000"))   # literal mismatch


def test_closure_keeps_repeat_structure():
    t = parse_template("p*{n}")
    clo = t.closure_template()
    assert clo.render() == "{01p}*{n}"
    assert clo.match(parse_pstring("01p"))


def test_parse_errors():
    for bad in ("{01", "x", "{}", "0*{n", "{2}"):
        with pytest.raises(TemplateError):
            parse_template(bad)


def test_literal_template_builder():
    x = parse_pstring("p01p")
    t = literal_template(x)
    assert t.match(x)
    assert not t.match(parse_pstring("p011"))
    assert t.render() == "p01p"


def test_padded_universe():
    inner = parse_template("0p1p")
    padded = PaddedUniverse(inner)
    assert padded.match(parse_pstring("1110" + "0p1p"))
    assert padded.match(parse_pstring("0" + "0p1p"))  # k = 1
    assert not padded.match(parse_pstring("0p1p"))  # suffix alone: 0 eats a char
    assert not padded.match(parse_pstring("1111"))
    assert not padded.match(parse_pstring("p0" + "0p1p"))  # p in prefix
    clo = padded.closure_template()
    assert isinstance(clo, PaddedUniverse)
    assert clo.match(parse_pstring("110" + "0010"))
