"""
Recursive-descent parser for LTL text.

Grammar (loosest binding first)::

    formula  := binop ( ("->" | "<->") formula )?        right associative
    binop    := conj ( "|" conj )*
    conj     := until ( "&" until )*
    until    := unary ( ("U" | "R") until )?              right associative
    unary    := ("!" | "X" | "F" | "G") unary | primary
    primary  := atom | "1" | "0" | "true" | "false" | "(" formula ")"
"""

import re
from typing import NamedTuple

from core.ltl.formula import (
    FALSE,
    TRUE,
    F,
    Formula,
    G,
    Not,
    X,
    And,
    Equiv,
    Implies,
    Or,
    R,
    U,
    atom,
)
from core.utils.exceptions import ExceptionFactory

_TOKEN = re.compile(
    r"\s*(?:(?P<op><->|->|&&|\|\||[!&|()~])|(?P<ident>[a-zA-Z_][a-zA-Z0-9_]*)|(?P<const>[01])\b)"
)
_KEYWORDS = {"X", "F", "G", "U", "R"}
_CONSTANTS = {"1": TRUE, "0": FALSE, "true": TRUE, "false": FALSE}
_ALIASES = {"&&": "&", "||": "|", "~": "!"}


class Token(NamedTuple):
    kind: str
    text: str
    position: int


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            start = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ExceptionFactory.syntax_error(f"unexpected character {text[start]!r}", text, start)
        if m.group("op"):
            tok = m.group("op")
            tokens.append(Token("op", _ALIASES.get(tok, tok), m.start("op")))
        elif m.group("ident"):
            word = m.group("ident")
            if word in _KEYWORDS:
                tokens.append(Token("op", word, m.start("ident")))
            elif word in _CONSTANTS:
                tokens.append(Token("const", word, m.start("ident")))
            else:
                tokens.append(Token("atom", word, m.start("ident")))
        else:
            tokens.append(Token("const", m.group("const"), m.start("const")))
        pos = m.end()
    tokens.append(Token("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.i]

    def _accept(self, *ops: str) -> Token | None:
        tok = self.current
        if tok.kind == "op" and tok.text in ops:
            self.i += 1
            return tok
        return None

    def _fail(self, reason: str) -> None:
        tok = self.current
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        raise ExceptionFactory.syntax_error(f"{reason}, found {found}", self.text, tok.position)

    def parse(self) -> Formula:
        f = self.formula()
        if self.current.kind != "eof":
            self._fail("expected end of input")
        return f

    def formula(self) -> Formula:
        left = self.disjunction()
        tok = self._accept("->", "<->")
        if tok is None:
            return left
        right = self.formula()
        return Implies(left, right) if tok.text == "->" else Equiv(left, right)

    def disjunction(self) -> Formula:
        parts = [self.conjunction()]
        while self._accept("|"):
            parts.append(self.conjunction())
        return Or(*parts)

    def conjunction(self) -> Formula:
        parts = [self.until()]
        while self._accept("&"):
            parts.append(self.until())
        return And(*parts)

    def until(self) -> Formula:
        left = self.unary()
        tok = self._accept("U", "R")
        if tok is None:
            return left
        right = self.until()
        return U(left, right) if tok.text == "U" else R(left, right)

    def unary(self) -> Formula:
        tok = self._accept("!", "X", "F", "G")
        if tok is None:
            return self.primary()
        operand = self.unary()
        return {"!": Not, "X": X, "F": F, "G": G}[tok.text](operand)

    def primary(self) -> Formula:
        tok = self.current
        if tok.kind == "atom":
            self.i += 1
            return atom(tok.text)
        if tok.kind == "const":
            self.i += 1
            return _CONSTANTS[tok.text]
        if self._accept("("):
            inner = self.formula()
            if not self._accept(")"):
                self._fail("expected ')'")
            return inner
        self._fail("expected an atom, a constant or '('")
        raise AssertionError("unreachable")


def parse(text: str) -> Formula:
    """Parse LTL text into a :class:`Formula`.

    Raises:
        LtlSyntaxError: With the 0-based position of the offending token.

    Example:
        >>> str(parse("F(a & c) | G((F b) & (F !b))"))
        'F(a & c) | G(F b & F !b)'
    """
    return _Parser(text).parse()
