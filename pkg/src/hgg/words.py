"""Word programs over named matrix generators.

Textual grammar (whitespace between tokens is free)::

    program := stmt* "return" expr ("," expr)?
    stmt    := "let" NAME "=" expr ";"
    expr    := term term*                  juxtaposition is the product
    term    := primary ("^" INT)?
    primary := NAME | "inv(" expr ")" | "comm(" expr "," expr ")" | "(" expr? ")"

``()`` is the empty product (the identity).  ``^`` also applies to
parenthesised products, so ``(b^2 a)^-3`` is accepted.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence, Union

from .errors import ParseError, UnboundName
from .exactmat import Convention, RationalMatrix, commutator, power

KEYWORDS = {"let", "return", "inv", "comm"}


@dataclass(frozen=True)
class Atom:
    name: str


@dataclass(frozen=True)
class Inverse:
    arg: "Expr"


@dataclass(frozen=True)
class Power:
    base: "Expr"
    exponent: int


@dataclass(frozen=True)
class Product:
    factors: tuple["Expr", ...]


@dataclass(frozen=True)
class Comm:
    left: "Expr"
    right: "Expr"


Expr = Union[Atom, Inverse, Power, Product, Comm]


@dataclass(frozen=True)
class WordProgram:
    lets: tuple[tuple[str, Expr], ...] = ()
    returns: tuple[Expr, ...] = field(default=())

    def names_defined(self) -> list[str]:
        return [n for n, _ in self.lets]

    def to_text(self) -> str:
        lines = [f"let {name} = {format_expr(e)};" for name, e in self.lets]
        lines.append("return " + ", ".join(format_expr(e) for e in self.returns))
        return "\n".join(lines)

    def without_last_binding(self) -> "WordProgram":
        return WordProgram(self.lets[:-1], self.returns)

    def with_returns(self, *returns: Expr) -> "WordProgram":
        return WordProgram(self.lets, tuple(returns))


# -- formatting ----------------------------------------------------------

def _format_primary(e: Expr) -> str:
    if isinstance(e, Atom):
        return e.name
    if isinstance(e, Inverse):
        return f"inv({format_expr(e.arg)})"
    if isinstance(e, Comm):
        return f"comm({format_expr(e.left)}, {format_expr(e.right)})"
    return f"({format_expr(e)})"


def format_expr(e: Expr) -> str:
    if isinstance(e, Product):
        if not e.factors:
            return "()"
        return " ".join(_format_term(f) for f in e.factors)
    return _format_term(e)


def _format_term(e: Expr) -> str:
    if isinstance(e, Power):
        return f"{_format_primary(e.base)}^{e.exponent}"
    if isinstance(e, Product):
        return f"({format_expr(e)})"
    return _format_primary(e)


# -- parsing -------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>-?\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<sym>[()^,;=]))")


@dataclass
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str, line0: int = 1) -> list[_Tok]:
    toks = []
    line, line_start, pos = line0, 0, 0
    while pos < len(text):
        # track newlines inside skipped whitespace
        while pos < len(text) and text[pos].isspace():
            if text[pos] == "\n":
                line += 1
                line_start = pos + 1
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        start = m.start(kind)
        toks.append(_Tok(kind, m.group(kind), line, start - line_start + 1))
        pos = m.end()
    toks.append(_Tok("eof", "", line, pos - line_start + 1))
    return toks


class _Parser:
    def __init__(self, toks: list[_Tok], known: set[str] | None):
        self.toks = toks
        self.i = 0
        self.known = None if known is None else set(known)

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def fail(self, msg: str, tok: _Tok | None = None):
        tok = tok or self.peek()
        raise ParseError(msg, tok.line, tok.col)

    def expect(self, text: str) -> _Tok:
        t = self.peek()
        if t.text != text or t.kind == "eof":
            self.fail(f"expected {text!r}, found {t.text or 'end of input'!r}")
        return self.take()

    def program(self) -> WordProgram:
        lets = []
        while self.peek().text == "let":
            self.take()
            t = self.take()
            if t.kind != "name" or t.text in KEYWORDS:
                self.fail("expected a binding name", t)
            if self.known is not None and t.text in self.known:
                self.fail(f"name {t.text!r} is already defined", t)
            self.expect("=")
            e = self.expr()
            self.expect(";")
            if self.known is not None:
                self.known.add(t.text)
            lets.append((t.text, e))
        self.expect("return")
        returns = [self.expr()]
        if self.peek().text == ",":
            self.take()
            returns.append(self.expr())
        if self.peek().kind != "eof":
            self.fail(f"unexpected {self.peek().text!r} after return")
        return WordProgram(tuple(lets), tuple(returns))

    def _starts_term(self) -> bool:
        t = self.peek()
        return t.kind == "name" and t.text not in ("let", "return") or t.text == "("

    def expr(self) -> Expr:
        if not self._starts_term():
            self.fail(f"expected an expression, found {self.peek().text or 'end of input'!r}")
        factors = [self.term()]
        while self._starts_term():
            factors.append(self.term())
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def term(self) -> Expr:
        base = self.primary()
        if self.peek().text == "^":
            self.take()
            t = self.take()
            if t.kind != "int":
                self.fail("expected an integer exponent", t)
            return Power(base, int(t.text))
        return base

    def primary(self) -> Expr:
        t = self.take()
        if t.text == "(":
            if self.peek().text == ")":
                self.take()
                return Product(())
            e = self.expr()
            self.expect(")")
            return e
        if t.text == "inv":
            self.expect("(")
            e = self.expr()
            self.expect(")")
            return Inverse(e)
        if t.text == "comm":
            self.expect("(")
            x = self.expr()
            self.expect(",")
            y = self.expr()
            self.expect(")")
            return Comm(x, y)
        if t.kind == "name" and t.text not in KEYWORDS:
            if self.known is not None and t.text not in self.known:
                self.fail(f"undefined name {t.text!r}", t)
            return Atom(t.text)
        self.fail(f"unexpected {t.text or 'end of input'!r}", t)


def parse_program(text: str, known: Sequence[str] | None = ("a", "b", "c"),
                  first_line: int = 1) -> WordProgram:
    """Parse a program; with ``known`` set, undefined references are parse errors."""
    return _Parser(_tokenize(text, first_line), None if known is None else set(known)).program()


def parse_expr(text: str) -> Expr:
    p = _Parser(_tokenize(text), None)
    e = p.expr()
    if p.peek().kind != "eof":
        p.fail(f"unexpected {p.peek().text!r}")
    return e


def atoms(e: Expr) -> Iterator[str]:
    if isinstance(e, Atom):
        yield e.name
    elif isinstance(e, (Inverse,)):
        yield from atoms(e.arg)
    elif isinstance(e, Power):
        yield from atoms(e.base)
    elif isinstance(e, Product):
        for f in e.factors:
            yield from atoms(f)
    elif isinstance(e, Comm):
        yield from atoms(e.left)
        yield from atoms(e.right)


# -- evaluation ----------------------------------------------------------

class _Evaluator:
    def __init__(self, env: Mapping[str, RationalMatrix], convention: Convention):
        self.env = dict(env)
        self.inv: dict[str, RationalMatrix] = {}
        self.convention = Convention(convention)
        dims = {m.n for m in self.env.values()}
        self.n = dims.pop() if len(dims) == 1 else None

    def lookup(self, name: str) -> RationalMatrix:
        try:
            return self.env[name]
        except KeyError:
            raise UnboundName(f"name {name!r} is not bound") from None

    def inverse_of(self, e: Expr) -> RationalMatrix:
        if isinstance(e, Atom):
            if e.name not in self.inv:
                self.inv[e.name] = self.lookup(e.name).inverse()
            return self.inv[e.name]
        return self.eval(e).inverse()

    def eval(self, e: Expr) -> RationalMatrix:
        if isinstance(e, Atom):
            return self.lookup(e.name)
        if isinstance(e, Inverse):
            return self.inverse_of(e.arg)
        if isinstance(e, Power):
            if e.exponent < 0:
                return power(self.inverse_of(e.base), -e.exponent)
            return power(self.eval(e.base), e.exponent)
        if isinstance(e, Product):
            if not e.factors:
                if self.n is None:
                    raise ValueError("cannot size the empty product without bindings")
                return RationalMatrix.identity(self.n)
            acc = self.eval(e.factors[0])
            for f in e.factors[1:]:
                acc = acc @ self.eval(f)
            return acc
        if isinstance(e, Comm):
            return commutator(self.eval(e.left), self.eval(e.right), self.convention)
        raise TypeError(f"not an expression: {e!r}")


def evaluate_word(program: WordProgram, bindings: Mapping[str, RationalMatrix],
                  convention: Convention = Convention.FORWARD) -> tuple[RationalMatrix, ...]:
    """Evaluate the let-bindings in order, then every returned expression."""
    ev = _Evaluator(bindings, convention)
    for name, e in program.lets:
        ev.env[name] = ev.eval(e)
        ev.inv.pop(name, None)
    return tuple(ev.eval(e) for e in program.returns)


def evaluate_expr(e: Expr | str, bindings: Mapping[str, RationalMatrix],
                  convention: Convention = Convention.FORWARD) -> RationalMatrix:
    if isinstance(e, str):
        e = parse_expr(e)
    return _Evaluator(bindings, convention).eval(e)
