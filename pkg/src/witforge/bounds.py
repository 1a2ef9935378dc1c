"""Integer bound expressions in one variable n.

Grammar: nonnegative integers, n, log2ceil(e), +, *, ^ (integer power) and
/ (ceiling division).  Expressions evaluate to nonnegative integers for all
n >= 1 and are expected to be monotone non-decreasing; both properties are
checked on a sample of n values up to 2^16 when an expression is parsed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BoundExprError

_SAMPLES = tuple(range(1, 33)) + (48, 64, 100, 127, 128, 255, 256, 1000,
                                  4096, 65536)


def log2ceil(x: int) -> int:
    if x <= 1:
        return 0
    return (x - 1).bit_length()


@dataclass(frozen=True)
class _Node:
    kind: str                      # const | var | log | add | mul | div | pow
    value: int = 0
    a: "_Node | None" = None
    b: "_Node | None" = None

    def eval(self, n: int) -> int:
        k = self.kind
        if k == "const":
            return self.value
        if k == "var":
            return n
        if k == "log":
            return log2ceil(self.a.eval(n))
        av = self.a.eval(n)
        bv = self.b.eval(n)
        if k == "add":
            return av + bv
        if k == "mul":
            return av * bv
        if k == "div":
            if bv == 0:
                raise BoundExprError("ceiling division by zero")
            return -(-av // bv)
        return av ** bv

    def render(self) -> str:
        k = self.kind
        if k == "const":
            return str(self.value)
        if k == "var":
            return "n"
        if k == "log":
            return f"log2ceil({self.a.render()})"
        sym = {"add": "+", "mul": "*", "div": "/", "pow": "^"}[k]
        return f"({self.a.render()} {sym} {self.b.render()})"


class BoundExpr:
    """Parsed bound expression; equality is structural on the AST.

    Nonnegativity over the sample set is enforced; monotonicity is checked
    and recorded in monotone_violation (expressions like n/log2ceil(n) dip
    at powers of two, and instances surface that through their lint)."""

    def __init__(self, node: _Node, text: str | None = None):
        self._node = node
        self.text = text if text is not None else node.render()
        self.monotone_violation: str | None = None
        self._validate()

    def _validate(self):
        prev = None
        for n in _SAMPLES:
            value = self.eval(n)
            if value < 0:
                raise BoundExprError(
                    f"{self.text!r} is negative at n={n}")
            if prev is not None and value < prev and \
                    self.monotone_violation is None:
                self.monotone_violation = \
                    f"{self.text!r} decreases between samples near n={n}"
            prev = value

    def eval(self, n: int) -> int:
        if n < 0:
            raise BoundExprError("bound expressions take n >= 0")
        return self._node.eval(n)

    def node(self) -> _Node:
        return self._node

    def __eq__(self, other):
        return isinstance(other, BoundExpr) and self._node == other._node

    def __hash__(self):
        return hash(self._node)

    def __repr__(self):
        return f"BoundExpr({self.text!r})"


def const(value: int) -> BoundExpr:
    return BoundExpr(_Node("const", value=value))


def add(a: BoundExpr, b: BoundExpr) -> BoundExpr:
    return BoundExpr(_Node("add", a=a.node(), b=b.node()))


def numerically_equal(a: BoundExpr, b: BoundExpr) -> bool:
    return all(a.eval(n) == b.eval(n) for n in _SAMPLES)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message):
        raise BoundExprError(f"{message} at position {self.pos} in {self.text!r}")

    def peek(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expr(self) -> _Node:
        node = self.term()
        while self.peek() == "+":
            self.pos += 1
            node = _Node("add", a=node, b=self.term())
        return node

    def term(self) -> _Node:
        node = self.power()
        while self.peek() in ("*", "/"):
            op = self.peek()
            self.pos += 1
            rhs = self.power()
            node = _Node("mul" if op == "*" else "div", a=node, b=rhs)
        return node

    def power(self) -> _Node:
        node = self.atom()
        if self.peek() == "^":
            self.pos += 1
            node = _Node("pow", a=node, b=self.power())
        return node

    def atom(self) -> _Node:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            node = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return node
        if ch.isdigit():
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            return _Node("const", value=int(self.text[start:self.pos]))
        if self.text.startswith("log2ceil", self.pos):
            self.pos += len("log2ceil")
            if self.peek() != "(":
                self.error("expected '(' after log2ceil")
            self.pos += 1
            inner = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return _Node("log", a=inner)
        if ch == "n":
            self.pos += 1
            return _Node("var")
        self.error(f"unexpected character {ch!r}")


def parse_bound(text: str) -> BoundExpr:
    parser = _Parser(text)
    node = parser.expr()
    if parser.peek():
        parser.error("trailing input")
    return BoundExpr(node, text=text.strip())
