"""Strings over the ternary alphabet {0, 1, p} with placeholder semantics.

A placeholder marks a position that a prefix filling may replace with a bit.
Filling bitstrings are plain str of '0'/'1' throughout the package.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator

from .errors import IllegalCharacter

ZERO = 0
ONE = 1
PLACEHOLDER = 2

_CODE = {"0": ZERO, "1": ONE, "p": PLACEHOLDER}
_CHAR = "01p"


class PString:
    """Immutable string over {0, 1, p} with cached placeholder positions."""

    __slots__ = ("_codes", "_ppos")

    def __init__(self, codes: bytes):
        if not isinstance(codes, bytes):
            codes = bytes(codes)
        self._codes = codes
        self._ppos = tuple(i for i, c in enumerate(codes) if c == PLACEHOLDER)

    @property
    def placeholder_positions(self) -> tuple[int, ...]:
        return self._ppos

    def __len__(self) -> int:
        return len(self._codes)

    def pcount(self) -> int:
        return len(self._ppos)

    def code(self, i: int) -> int:
        return self._codes[i]

    def codes(self) -> bytes:
        return self._codes

    def text(self) -> str:
        return "".join(_CHAR[c] for c in self._codes)

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        return f"PString({self.text()!r})"

    def __eq__(self, other) -> bool:
        return isinstance(other, PString) and self._codes == other._codes

    def __hash__(self) -> int:
        return hash(self._codes)


def parse_pstring(text: str) -> PString:
    """Parse raw '0'/'1'/'p' characters; any other character is an error."""
    codes = bytearray()
    for i, ch in enumerate(text):
        code = _CODE.get(ch)
        if code is None:
            raise IllegalCharacter(i, ch)
        codes.append(code)
    return PString(bytes(codes))


def bits_ok(r: str) -> bool:
    return all(ch in "01" for ch in r)


def apply_filling(x: PString, r: str) -> PString:
    """Replace the i-th placeholder of x with bit i of r, for i < min(|r|, pcount).

    Total by definition: extra bits of r are ignored, extra placeholders stay.
    """
    assert bits_ok(r), "filling must be a bitstring"
    out = bytearray(x.codes())
    for i in range(min(len(r), x.pcount())):
        out[x.placeholder_positions[i]] = ONE if r[i] == "1" else ZERO
    return PString(bytes(out))


def enumerate_fillings(x: PString, w: int) -> Iterator[tuple[str, PString]]:
    """Yield (r, sub_r(x)) for every r with |r| <= min(w, pcount(x)).

    Order: increasing |r|, lexicographic within a length.  Longer r are
    omitted because their images coincide with |r| = pcount(x); the stream
    therefore has exactly 2^(min(w, pcount)+1) - 1 entries.
    """
    cap = min(w, x.pcount())
    for length in range(cap + 1):
        if length == 0:
            yield "", x
            continue
        for val in range(1 << length):
            r = format(val, f"0{length}b")
            yield r, apply_filling(x, r)


def refines(x: PString, y: PString) -> bool:
    """True iff x arises from y by replacing some placeholders with bits."""
    if len(x) != len(y):
        return False
    for a, b in zip(x.codes(), y.codes()):
        if a == b:
            continue
        if b == PLACEHOLDER and a in (ZERO, ONE):
            continue
        return False
    return True


def closure_of(language: Iterable[PString]) -> set[PString]:
    """Closure under unrestricted fillings: every placeholder independently
    becomes 0, 1, or stays p, so a single string contributes 3^pcount images."""
    out: set[PString] = set()
    for y in language:
        positions = y.placeholder_positions
        base = y.codes()
        for choice in itertools.product((ZERO, ONE, PLACEHOLDER), repeat=len(positions)):
            codes = bytearray(base)
            for pos, c in zip(positions, choice):
                codes[pos] = c
            out.add(PString(bytes(codes)))
    return out
