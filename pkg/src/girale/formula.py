"""Formula ASTs over {meet, join, fusion, implication, bang} with two surface notations.

The tree language has variables, the constants 1, 0, bot, top, the unary !,
and four binary connectives.  Negation is not a node: ``~f`` (and the
postfix dualizer of the girard notation) is expanded to ``f -> 0`` while
parsing, so downstream consumers handle a single connective set.

Grammar, substructural notation (ASCII)::

    form := imp
    imp  := or ("->" imp)?          right-associative
    or   := and ("\\/" and)*
    and  := mul ("/\\" mul)*
    mul  := un ("*" un)*
    un   := "!" un | "~" un | atom
    atom := ident | "1" | "0" | "bot" | "top" | "(" form ")"

Girard notation uses ``&`` for meet, ``(+)`` for join, ``(x)`` for fusion,
``-o`` for implication, ``1``/``_|_`` for 1/0 and ``0g``/``top`` for
bot/top; ``f^_|_`` is postfix negation.  Note that ``(x)`` always lexes as
the fusion operator, so a parenthesized bare variable must be written with
spaces: ``( x )``.

Binding strength, tightest first: ``!``, ``*``, ``/\\``, ``\\/``, ``->``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Mapping


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    symbol: str  # one of CONSTS

    def __post_init__(self) -> None:
        if self.symbol not in CONSTS:
            raise ValueError(f"Unknown constant {self.symbol!r}.")


@dataclass(frozen=True)
class Bang:
    child: "Formula"


@dataclass(frozen=True)
class BinOp:
    op: str  # one of OPS
    left: "Formula"
    right: "Formula"

    def __post_init__(self) -> None:
        if self.op not in OPS:
            raise ValueError(f"Unknown connective {self.op!r}.")


Formula = Var | Const | Bang | BinOp

CONSTS = ("1", "0", "bot", "top")
OPS = ("and", "or", "mul", "imp")

ONE = Const("1")
ZERO = Const("0")
BOT = Const("bot")
TOP = Const("top")

NOTATIONS = ("substructural", "girard")

_RESERVED_NAMES = frozenset({"bot", "top"})


def negation(f: Formula) -> Formula:
    """The derived negation f -> 0."""
    return BinOp("imp", f, ZERO)


class ParseError(Exception):
    """Syntax or lexing failure, with the offending position."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    pos: int


_SUBSTRUCTURAL_TOKENS = [
    ("IMP", r"->"),
    ("OR", r"\\/"),
    ("AND", r"/\\"),
    ("MUL", r"\*"),
    ("BANG", r"!"),
    ("NEG", r"~"),
    ("LP", r"\("),
    ("RP", r"\)"),
    ("IDENT", r"[A-Za-z_][A-Za-z_0-9']*"),
    ("NUM", r"[0-9]+"),
]

_GIRARD_TOKENS = [
    ("PERP", r"\^_\|_"),
    ("ZERO", r"_\|_"),
    ("JOIN", r"\(\+\)"),
    ("MUL", r"\(x\)"),
    ("IMP", r"-o"),
    ("AND", r"&"),
    ("BANG", r"!"),
    ("NEG", r"~"),
    ("LP", r"\("),
    ("RP", r"\)"),
    ("BOTG", r"0g"),
    ("IDENT", r"[A-Za-z_][A-Za-z_0-9']*"),
    ("NUM", r"[0-9]+"),
]


def _lexer(spec: list[tuple[str, str]]) -> re.Pattern[str]:
    return re.compile("|".join(f"(?P<{kind}>{pat})" for kind, pat in spec))


_LEXERS = {
    "substructural": _lexer(_SUBSTRUCTURAL_TOKENS),
    "girard": _lexer(_GIRARD_TOKENS),
}


def _tokenize(text: str, notation: str) -> Iterator[_Token]:
    lexer = _LEXERS[notation]
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = lexer.match(text, pos)
        if m is None:
            raise ParseError(
                f"Unknown symbol {text[pos]!r} for the {notation} notation", pos
            )
        kind = m.lastgroup
        assert kind is not None
        yield _Token(kind, m.group(), pos)
        pos = m.end()
    yield _Token("EOF", "", n)


def _check_notation(notation: str) -> None:
    if notation not in NOTATIONS:
        raise ValueError(f"Unknown notation {notation!r}; expected one of {NOTATIONS}.")


class _Parser:
    def __init__(self, text: str, notation: str) -> None:
        self.notation = notation
        self.tokens = list(_tokenize(text, notation))
        self.index = 0

    def peek(self) -> _Token:
        return self.tokens[self.index]

    def advance(self) -> _Token:
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"Expected {kind}, found {tok.text!r}", tok.pos)
        return self.advance()

    def parse_form(self) -> Formula:
        left = self.parse_or()
        if self.peek().kind == "IMP":
            self.advance()
            right = self.parse_form()
            return BinOp("imp", left, right)
        return left

    def parse_or(self) -> Formula:
        node = self.parse_and()
        while self.peek().kind in ("OR", "JOIN"):
            self.advance()
            node = BinOp("or", node, self.parse_and())
        return node

    def parse_and(self) -> Formula:
        node = self.parse_mul()
        while self.peek().kind == "AND":
            self.advance()
            node = BinOp("and", node, self.parse_mul())
        return node

    def parse_mul(self) -> Formula:
        node = self.parse_unary()
        while self.peek().kind == "MUL":
            self.advance()
            node = BinOp("mul", node, self.parse_unary())
        return node

    def parse_unary(self) -> Formula:
        tok = self.peek()
        if tok.kind == "BANG":
            self.advance()
            return Bang(self.parse_unary())
        if tok.kind == "NEG":
            self.advance()
            return negation(self.parse_unary())
        return self.parse_postfix()

    def parse_postfix(self) -> Formula:
        node = self.parse_atom()
        while self.peek().kind == "PERP":
            self.advance()
            node = negation(node)
        return node

    def parse_atom(self) -> Formula:
        tok = self.advance()
        if tok.kind == "LP":
            node = self.parse_form()
            self.expect("RP")
            return node
        if tok.kind == "NUM":
            if self.notation == "substructural":
                if tok.text == "1":
                    return ONE
                if tok.text == "0":
                    return ZERO
            elif tok.text == "1":
                return ONE
            raise ParseError(
                f"Unknown symbol {tok.text!r} for the {self.notation} notation", tok.pos
            )
        if tok.kind == "ZERO":
            return ZERO
        if tok.kind == "BOTG":
            return BOT
        if tok.kind == "IDENT":
            if self.notation == "substructural":
                if tok.text == "bot":
                    return BOT
                if tok.text == "top":
                    return TOP
            else:
                if tok.text == "top":
                    return TOP
                if tok.text in _RESERVED_NAMES:
                    raise ParseError(f"Reserved word {tok.text!r}", tok.pos)
            return Var(tok.text)
        raise ParseError(f"Unexpected token {tok.text!r}", tok.pos)


def parse(text: str, notation: str = "substructural") -> Formula:
    """Parse a formula in the given notation; raises ParseError on bad input."""
    _check_notation(notation)
    if not text.strip():
        raise ParseError("Empty formula", 0)
    parser = _Parser(text, notation)
    node = parser.parse_form()
    tail = parser.peek()
    if tail.kind != "EOF":
        raise ParseError(f"Trailing input {tail.text!r}", tail.pos)
    return node


_SUB_SURFACE = {"and": " /\\ ", "or": " \\/ ", "mul": " * ", "imp": " -> "}
_GIR_SURFACE = {"and": " & ", "or": " (+) ", "mul": " (x) ", "imp": " -o "}
_SUB_CONSTS = {"1": "1", "0": "0", "bot": "bot", "top": "top"}
_GIR_CONSTS = {"1": "1", "0": "_|_", "bot": "0g", "top": "top"}

_LEVEL = {"imp": 0, "or": 1, "and": 2, "mul": 3}


def _level(f: Formula) -> int:
    if isinstance(f, BinOp):
        return _LEVEL[f.op]
    if isinstance(f, Bang):
        return 4
    return 5


def render(f: Formula, notation: str = "substructural") -> str:
    """Render so that parse(render(f, n), n) returns f, with minimal parens."""
    _check_notation(notation)
    surface = _SUB_SURFACE if notation == "substructural" else _GIR_SURFACE
    consts = _SUB_CONSTS if notation == "substructural" else _GIR_CONSTS

    def go(node: Formula, min_level: int) -> str:
        if isinstance(node, Var):
            return node.name
        if isinstance(node, Const):
            return consts[node.symbol]
        if isinstance(node, Bang):
            text = "!" + go(node.child, 4)
        else:
            level = _LEVEL[node.op]
            if node.op == "imp":
                text = go(node.left, 1) + surface["imp"] + go(node.right, 0)
            else:
                text = go(node.left, level) + surface[node.op] + go(node.right, level + 1)
        if _level(node) < min_level:
            return "( " + text + " )"
        return text

    return go(f, 0)


def substitute(f: Formula, mapping: Mapping[str, Formula]) -> Formula:
    """Replace variables homomorphically; names outside the map stay put."""
    if isinstance(f, Var):
        return mapping.get(f.name, f)
    if isinstance(f, Const):
        return f
    if isinstance(f, Bang):
        return Bang(substitute(f.child, mapping))
    return BinOp(f.op, substitute(f.left, mapping), substitute(f.right, mapping))


def free_variables(f: Formula) -> set[str]:
    if isinstance(f, Var):
        return {f.name}
    if isinstance(f, Const):
        return set()
    if isinstance(f, Bang):
        return free_variables(f.child)
    return free_variables(f.left) | free_variables(f.right)


def size(f: Formula) -> int:
    """Node count."""
    if isinstance(f, (Var, Const)):
        return 1
    if isinstance(f, Bang):
        return 1 + size(f.child)
    return 1 + size(f.left) + size(f.right)


def depth(f: Formula) -> int:
    """Connective nesting depth; atoms have depth 0."""
    if isinstance(f, (Var, Const)):
        return 0
    if isinstance(f, Bang):
        return 1 + depth(f.child)
    return 1 + max(depth(f.left), depth(f.right))


def structural_key(f: Formula):
    """Total order key: variables, constants, then and < or < mul < imp < bang."""
    if isinstance(f, Var):
        return (0, f.name)
    if isinstance(f, Const):
        return (1, CONSTS.index(f.symbol))
    if isinstance(f, BinOp):
        return (2, OPS.index(f.op), structural_key(f.left), structural_key(f.right))
    return (3, structural_key(f.child))


def connectives(f: Formula) -> set[str]:
    """Connective and constant symbols occurring in f (variables excluded)."""
    if isinstance(f, Var):
        return set()
    if isinstance(f, Const):
        return {f.symbol}
    if isinstance(f, Bang):
        return {"bang"} | connectives(f.child)
    return {f.op} | connectives(f.left) | connectives(f.right)


def formula_to_dict(f: Formula) -> dict:
    if isinstance(f, Var):
        return {"var": f.name}
    if isinstance(f, Const):
        return {"const": f.symbol}
    if isinstance(f, Bang):
        return {"bang": formula_to_dict(f.child)}
    return {
        "op": f.op,
        "left": formula_to_dict(f.left),
        "right": formula_to_dict(f.right),
    }


def formula_from_dict(data: dict) -> Formula:
    if "var" in data:
        return Var(data["var"])
    if "const" in data:
        return Const(data["const"])
    if "bang" in data:
        return Bang(formula_from_dict(data["bang"]))
    return BinOp(
        data["op"], formula_from_dict(data["left"]), formula_from_dict(data["right"])
    )
