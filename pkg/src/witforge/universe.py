"""Universe templates: linear-time-checkable input string languages.

A template is a sequence of atoms: a literal character, a character class,
or a repeat of an atom with a count expression in n.  Membership of a string
x is decided in one left-to-right pass after evaluating the repeat counts at
n = |x|.  The closure template (placeholders widened by {0,1}) is again a
template, which is what makes the translation construction syntactic.

Concrete syntax: literals '0' '1' 'p'; classes like '{01p}'; a repeat is a
trailing '*{expr}' on the previous atom, e.g. 'p*{n}' or '{01}*{n}'.

A padded universe wraps an inner template with the 1^(k-1).0 prefix form
used by the padding construction; the prefix carries no placeholders, so
closure commutes with padding.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .bounds import BoundExpr, parse_bound
from .errors import TemplateError
from .pstrings import PString, parse_pstring

_CHARS = "01p"


@dataclass(frozen=True)
class Lit:
    char: str


@dataclass(frozen=True)
class Cls:
    chars: frozenset

    def render_chars(self) -> str:
        return "".join(c for c in _CHARS if c in self.chars)


@dataclass(frozen=True)
class Rep:
    atom: Union[Lit, Cls]
    count: BoundExpr


Atom = Union[Lit, Cls, Rep]


def _closure_atom(atom: Atom) -> Atom:
    if isinstance(atom, Lit):
        return Cls(frozenset("01p")) if atom.char == "p" else atom
    if isinstance(atom, Cls):
        return Cls(atom.chars | {"0", "1"}) if "p" in atom.chars else atom
    return Rep(_closure_atom(atom.atom), atom.count)


def _atom_matches(atom: Union[Lit, Cls], char: str) -> bool:
    if isinstance(atom, Lit):
        return atom.char == char
    return char in atom.chars


class UniverseTemplate:
    def __init__(self, atoms: tuple[Atom, ...], text: str | None = None):
        self.atoms = atoms
        self.text = text if text is not None else render_atoms(atoms)

    def match(self, x: PString) -> bool:
        n = len(x)
        chars = x.text()
        pos = 0
        for atom in self.atoms:
            if isinstance(atom, Rep):
                width = atom.count.eval(n)
                if pos + width > n:
                    return False
                unit = atom.atom
                for i in range(pos, pos + width):
                    if not _atom_matches(unit, chars[i]):
                        return False
                pos += width
            else:
                if pos >= n or not _atom_matches(atom, chars[pos]):
                    return False
                pos += 1
        return pos == n

    def closure_template(self) -> "UniverseTemplate":
        return UniverseTemplate(tuple(_closure_atom(a) for a in self.atoms))

    def render(self) -> str:
        return self.text

    def __repr__(self):
        return f"UniverseTemplate({self.render()!r})"

    def __eq__(self, other):
        return isinstance(other, UniverseTemplate) and self.atoms == other.atoms


class PaddedUniverse:
    """Strings 1^(k-1).0.x for any k >= 1 and x in the inner universe."""

    def __init__(self, inner):
        self.inner = inner

    def match(self, x: PString) -> bool:
        chars = x.text()
        zero = chars.find("0")
        if zero < 0 or "p" in chars[:zero]:
            return False
        return self.inner.match(parse_pstring(chars[zero + 1:]))

    def closure_template(self) -> "PaddedUniverse":
        return PaddedUniverse(self.inner.closure_template())

    def render(self) -> str:
        return f"padded({self.inner.render()})"

    def __repr__(self):
        return f"PaddedUniverse({self.inner.render()!r})"

    def __eq__(self, other):
        return isinstance(other, PaddedUniverse) and self.inner == other.inner


Universe = Union[UniverseTemplate, PaddedUniverse]


def render_atoms(atoms: tuple[Atom, ...]) -> str:
    parts = []
    for atom in atoms:
        if isinstance(atom, Rep):
            inner = atom.atom
            body = inner.char if isinstance(inner, Lit) else \
                "{" + inner.render_chars() + "}"
            parts.append(f"{body}*{{{atom.count.text}}}")
        elif isinstance(atom, Lit):
            parts.append(atom.char)
        else:
            parts.append("{" + atom.render_chars() + "}")
    return "".join(parts)


def parse_template(text: str) -> UniverseTemplate:
    atoms: list[Atom] = []
    i = 0
    text = text.strip()
    while i < len(text):
        ch = text[i]
        if ch in _CHARS:
            atom: Atom = Lit(ch)
            i += 1
        elif ch == "{":
            end = text.find("}", i)
            if end < 0:
                raise TemplateError(f"unterminated class in {text!r}")
            body = text[i + 1:end]
            if not body or any(c not in _CHARS for c in body):
                raise TemplateError(f"bad class {{{body}}} in {text!r}")
            atom = Cls(frozenset(body))
            i = end + 1
        else:
            raise TemplateError(f"unexpected {ch!r} in template {text!r}")
        if text.startswith("*{", i):
            end = _matching_brace(text, i + 1)
            count = parse_bound(text[i + 2:end])
            atom = Rep(atom, count)
            i = end + 1
        atoms.append(atom)
    return UniverseTemplate(tuple(atoms), text=text)


def _matching_brace(text: str, open_pos: int) -> int:
    depth = 0
    for i in range(open_pos, len(text)):
        if text[i] == "{":
            depth += 1
        elif text[i] == "}":
            depth -= 1
            if depth == 0:
                return i
    raise TemplateError(f"unterminated repeat count in {text!r}")


def literal_template(x: PString) -> UniverseTemplate:
    """Single-string universe: the template spelling x exactly."""
    return UniverseTemplate(tuple(Lit(c) for c in x.text()))
