"""Algebra expressions.

Grammar (whitespace between tokens is ignored)::

    Expr := Term ("*" Term)*
    Term := Atom ("^" Nat)?
    Atom := "Cl(" Nat "," Nat ")" | "Cl(" Nat "," Nat "|" Nat "," Nat ")"
          | "K(" Nat "," Nat ")" | "R" | "C" | "H" | "D" | "(" Expr ")"

``*`` is the tensor product.  R, C, H, D abbreviate Cl(0,0|0,0), Cl(0,0|0,1),
Cl(0,0|0,2) and Cl(0,0|1,0).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .classify import ExtSignature
from .errors import ParseError

ALIASES = {
    "R": ExtSignature(0, 0, 0, 0),
    "C": ExtSignature(0, 0, 0, 1),
    "H": ExtSignature(0, 0, 0, 2),
    "D": ExtSignature(0, 0, 1, 0),
}


@dataclass(frozen=True)
class Atom:
    sig: ExtSignature


@dataclass(frozen=True)
class Tensor:
    items: tuple[AlgebraExpr, ...]


@dataclass(frozen=True)
class Power:
    base: AlgebraExpr
    exp: int


AlgebraExpr = Union[Atom, Tensor, Power]

_TOKEN = re.compile(r"\s*(?:(?P<nat>\d+)|(?P<name>[A-Za-z]+)|(?P<punct>[()*^,|]))")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while True:
            m = _TOKEN.match(text, pos)
            if m is None:
                rest = text[pos:]
                if rest.strip() == "":
                    break
                off = pos + len(rest) - len(rest.lstrip())
                raise ParseError(self._byte(off), "a token", text[off])
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.i = 0

    def _byte(self, char_offset: int) -> int:
        return len(self.text[:char_offset].encode("utf-8"))

    def _peek(self):
        if self.i < len(self.tokens):
            return self.tokens[self.i]
        return ("eof", "", len(self.text))

    def _fail(self, expected: str):
        kind, val, off = self._peek()
        raise ParseError(self._byte(off), expected, val if kind != "eof" else "end of input")

    def _accept(self, value: str) -> bool:
        kind, val, _ = self._peek()
        if kind == "punct" and val == value:
            self.i += 1
            return True
        return False

    def _expect(self, value: str):
        if not self._accept(value):
            self._fail(repr(value))

    def _nat(self) -> int:
        kind, val, _ = self._peek()
        if kind != "nat":
            self._fail("a natural number")
        self.i += 1
        return int(val)

    def parse(self) -> AlgebraExpr:
        expr = self.expr()
        if self._peek()[0] != "eof":
            self._fail("'*', '^' or end of input")
        return expr

    def expr(self) -> AlgebraExpr:
        terms = [self.term()]
        while self._accept("*"):
            terms.append(self.term())
        return terms[0] if len(terms) == 1 else Tensor(tuple(terms))

    def term(self) -> AlgebraExpr:
        base = self.atom()
        if self._accept("^"):
            return Power(base, self._nat())
        return base

    def atom(self) -> AlgebraExpr:
        kind, val, _ = self._peek()
        if kind == "punct" and val == "(":
            self.i += 1
            inner = self.expr()
            self._expect(")")
            return inner
        if kind != "name":
            self._fail("an algebra (Cl, K, R, C, H, D or '(')")
        if val in ALIASES:
            self.i += 1
            return Atom(ALIASES[val])
        if val == "K":
            self.i += 1
            self._expect("(")
            r = self._nat()
            self._expect(",")
            s = self._nat()
            self._expect(")")
            return Atom(ExtSignature(r, s, 0, 0))
        if val == "Cl":
            self.i += 1
            self._expect("(")
            a = self._nat()
            self._expect(",")
            b = self._nat()
            if self._accept("|"):
                p = self._nat()
                self._expect(",")
                q = self._nat()
                self._expect(")")
                return Atom(ExtSignature(a, b, p, q))
            self._expect(")")
            return Atom(ExtSignature(0, 0, a, b))
        self._fail("an algebra (Cl, K, R, C, H, D or '(')")


def parse(text: str) -> AlgebraExpr:
    return _Parser(text).parse()


def to_text(expr: AlgebraExpr) -> str:
    """Print an expression so that ``parse(to_text(e)) == e``."""
    if isinstance(expr, Atom):
        sg = expr.sig
        if sg.r == sg.s == 0:
            return f"Cl({sg.p},{sg.q})"
        return f"Cl({sg.r},{sg.s}|{sg.p},{sg.q})"
    if isinstance(expr, Power):
        base = to_text(expr.base)
        if not isinstance(expr.base, Atom):
            base = f"({base})"
        return f"{base}^{expr.exp}"
    parts = [f"({to_text(x)})" if isinstance(x, Tensor) else to_text(x) for x in expr.items]
    return " * ".join(parts)


def flatten(expr: AlgebraExpr) -> list[ExtSignature]:
    """The tensor factors of ``expr``; a zeroth power contributes a single R."""
    if isinstance(expr, Atom):
        return [expr.sig]
    if isinstance(expr, Power):
        if expr.exp == 0:
            return [ALIASES["R"]]
        return flatten(expr.base) * expr.exp
    out: list[ExtSignature] = []
    for item in expr.items:
        out.extend(flatten(item))
    return out
