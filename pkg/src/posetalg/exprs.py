"""Term expression grammar for the CLI.

Atoms are ``x(name)``, constants ``0`` and ``1``; operators ``!`` (complement),
``&`` (meet), ``|`` (join) with precedence ! > & > |, plus parentheses.
Names may themselves contain balanced parentheses (e.g. ``x((0,1))``).

Parsed expressions are plain tuples:
    ("var", name) | ("const", bool) | ("not", e) | ("and", a, b) | ("or", a, b)
"""

from __future__ import annotations

from . import algebra
from .errors import ParseError


def tokenize(text):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c in "!&|()01":
            tokens.append(c)
            i += 1
            continue
        if c == "x" and i + 1 < n and text[i + 1] == "(":
            depth = 1
            j = i + 2
            while j < n and depth:
                if text[j] == "(":
                    depth += 1
                elif text[j] == ")":
                    depth -= 1
                j += 1
            if depth:
                raise ParseError(f"unterminated atom at offset {i}")
            tokens.append(("var", text[i + 2 : j - 1]))
            i = j
            continue
        raise ParseError(f"unexpected character {c!r} at offset {i}")
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def parse_or(self):
        node = self.parse_and()
        while self.peek() == "|":
            self.take()
            node = ("or", node, self.parse_and())
        return node

    def parse_and(self):
        node = self.parse_not()
        while self.peek() == "&":
            self.take()
            node = ("and", node, self.parse_not())
        return node

    def parse_not(self):
        if self.peek() == "!":
            self.take()
            return ("not", self.parse_not())
        return self.parse_atom()

    def parse_atom(self):
        tok = self.take()
        if tok == "(":
            node = self.parse_or()
            if self.take() != ")":
                raise ParseError("expected ')'")
            return node
        if tok == "0":
            return ("const", False)
        if tok == "1":
            return ("const", True)
        if isinstance(tok, tuple) and tok[0] == "var":
            return tok
        raise ParseError(f"unexpected token {tok!r}")


def parse(text):
    tokens = tokenize(text)
    if not tokens:
        raise ParseError("empty expression")
    parser = _Parser(tokens)
    node = parser.parse_or()
    if parser.peek() is not None:
        raise ParseError(f"trailing input from token {parser.peek()!r}")
    return node


def to_elem(poset, node):
    """Evaluate an expression tree in the symbolic algebra."""
    kind = node[0]
    if kind == "var":
        return algebra.gen(poset, node[1])
    if kind == "const":
        return algebra.one(poset) if node[1] else algebra.zero(poset)
    if kind == "not":
        return algebra.complement(to_elem(poset, node[1]))
    if kind == "and":
        return algebra.meet(to_elem(poset, node[1]), to_elem(poset, node[2]))
    if kind == "or":
        return algebra.join(to_elem(poset, node[1]), to_elem(poset, node[2]))
    raise ParseError(f"bad node {node!r}")


def variables(node):
    kind = node[0]
    if kind == "var":
        return {node[1]}
    if kind == "const":
        return set()
    out = set()
    for child in node[1:]:
        out |= variables(child)
    return out
