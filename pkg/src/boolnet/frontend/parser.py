"""Recursive-descent parser for the expression network format (.bn).

See grammar.ebnf next to this module.  Expressions compile to small trees
that are evaluated over all 2^n states at once with numpy.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from ..core import BooleanNetwork, ParseError, parse_header

_TOKEN = re.compile(r"\s*(?:(x\d+)|([01])|(\()|(\))|([!&^|]))")
_DEF = re.compile(r"\s*f(\d+)\s*=")

# binary operators, loosest first
_LEVELS = ("|", "^", "&")


@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class Const:
    value: int


@dataclass(frozen=True)
class Not:
    arg: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


class _Lexer:
    def __init__(self, text: str, line: int, offset: int):
        self.tokens: list[tuple[str, str, int]] = []
        pos = offset
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m:
                col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
                raise ParseError(f"unexpected character {text[col - 1]!r}", line, col)
            kind = ("var", "const", "(", ")", "op")[m.lastindex - 1]
            col = m.start(m.lastindex) + 1
            self.tokens.append((kind, m.group(m.lastindex), col))
            pos = m.end()
        self.end_col = len(text.rstrip()) + 1
        self.line = line
        self.k = 0

    def peek(self) -> tuple[str, str, int] | None:
        return self.tokens[self.k] if self.k < len(self.tokens) else None

    def take(self) -> tuple[str, str, int]:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of expression", self.line, self.end_col)
        self.k += 1
        return tok


def parse_expression(text: str, n: int, line: int = 1, offset: int = 0):
    """Parse one expression over x1..xn; precedence ! > & > ^ > |, all left-associative."""
    lex = _Lexer(text, line, offset)
    tree = _binary(lex, 0, n)
    extra = lex.peek()
    if extra is not None:
        raise ParseError(f"unexpected {extra[1]!r}", line, extra[2])
    return tree


def _binary(lex: _Lexer, level: int, n: int):
    if level == len(_LEVELS):
        return _unary(lex, n)
    left = _binary(lex, level + 1, n)
    while (tok := lex.peek()) is not None and tok[0] == "op" and tok[1] == _LEVELS[level]:
        lex.take()
        left = BinOp(tok[1], left, _binary(lex, level + 1, n))
    return left


def _unary(lex: _Lexer, n: int):
    kind, value, col = lex.take()
    if kind == "op" and value == "!":
        return Not(_unary(lex, n))
    if kind == "var":
        k = int(value[1:])
        if not 1 <= k <= n:
            raise ParseError(f"variable {value} out of range x1..x{n}", lex.line, col)
        return Var(k)
    if kind == "const":
        return Const(int(value))
    if kind == "(":
        inner = _binary(lex, 0, n)
        close = lex.take()
        if close[0] != ")":
            raise ParseError(f"expected ')', got {close[1]!r}", lex.line, close[2])
        return inner
    raise ParseError(f"unexpected {value!r}", lex.line, col)


def evaluate_tree(tree, n: int) -> np.ndarray:
    """Truth values of ``tree`` at every state index, as a bool vector."""
    states = np.arange(1 << n, dtype=np.int64)
    return _eval(tree, n, states).astype(bool)


def _eval(tree, n: int, states: np.ndarray) -> np.ndarray:
    if isinstance(tree, Var):
        return ((states >> (n - tree.index)) & 1).astype(bool)
    if isinstance(tree, Const):
        return np.full(len(states), bool(tree.value))
    if isinstance(tree, Not):
        return ~_eval(tree.arg, n, states)
    a = _eval(tree.left, n, states)
    b = _eval(tree.right, n, states)
    if tree.op == "&":
        return a & b
    if tree.op == "^":
        return a ^ b
    return a | b


def parse_network(text: str) -> BooleanNetwork:
    n = None
    defs: dict[int, object] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if n is None:
            n = parse_header(line.strip(), lineno)
            continue
        m = _DEF.match(line)
        if not m:
            col = len(line) - len(line.lstrip()) + 1
            raise ParseError("expected 'f<i> = <expression>'", lineno, col)
        i = int(m.group(1))
        if not 1 <= i <= n:
            raise ParseError(f"coordinate f{i} out of range f1..f{n}", lineno, m.start(1))
        if i in defs:
            raise ParseError(f"duplicate definition of f{i}", lineno, m.start(1))
        defs[i] = parse_expression(line, n, lineno, m.end())
    if n is None:
        raise ParseError("missing 'n=<k>' header")
    missing = [i for i in range(1, n + 1) if i not in defs]
    if missing:
        raise ParseError(f"undefined coordinate f{missing[0]}")
    table = np.zeros(1 << n, dtype=np.int64)
    for i in range(1, n + 1):
        table |= evaluate_tree(defs[i], n).astype(np.int64) << (n - i)
    return BooleanNetwork(n, tuple(table.tolist()))


def format_expression(tree) -> str:
    """Fully parenthesized rendering, mainly for debugging."""
    if isinstance(tree, Var):
        return f"x{tree.index}"
    if isinstance(tree, Const):
        return str(tree.value)
    if isinstance(tree, Not):
        return "!" + format_expression(tree.arg)
    return f"({format_expression(tree.left)} {tree.op} {format_expression(tree.right)})"
