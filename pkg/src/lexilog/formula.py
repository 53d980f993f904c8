"""Formula syntax: AST, lexer, recursive-descent parser, desugaring, printing.

Concrete syntax, tightest binding first::

    !          negation
    &          conjunction
    ^          exclusive or
    |          disjunction
    &>  |>     "and if possible", "or at least" (left-assoc, one level)
    >>         lexicographic priority (right-assoc)

Leaves are identifiers, the keywords ``T``/``F`` and value literals such as
``[0,T,F]``. ``#`` starts a comment that runs to the end of the line.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import FormulaSyntaxError, InvalidValueError
from .values import FALSE, TRUE, TruthValue, parse_value

__all__ = [
    "Formula",
    "Atom",
    "Const",
    "Not",
    "Binary",
    "And",
    "Or",
    "LexPrio",
    "IfPossible",
    "OrAtLeast",
    "Xor",
    "parse",
    "desugar",
    "render",
    "atoms_of",
    "is_core",
    "iter_subformulas",
]

RESERVED = frozenset({"T", "F"})


class Formula:
    """Base class of all AST nodes."""

    __slots__ = ()

    def __str__(self):
        return render(self)


@dataclass(frozen=True, eq=True)
class Atom(Formula):
    name: str

    def __post_init__(self):
        if not _is_ident(self.name) or self.name in RESERVED:
            raise ValueError(f"invalid atom name {self.name!r}")


@dataclass(frozen=True)
class Const(Formula):
    value: TruthValue


@dataclass(frozen=True)
class Not(Formula):
    child: Formula


@dataclass(frozen=True)
class Binary(Formula):
    left: Formula
    right: Formula


class And(Binary):
    pass


class Or(Binary):
    pass


class LexPrio(Binary):
    pass


class IfPossible(Binary):
    pass


class OrAtLeast(Binary):
    pass


class Xor(Binary):
    pass


CORE_TYPES = (Atom, Const, Not, And, Or, LexPrio)

# operator text, precedence (higher binds tighter)
_BINARY_SYNTAX = {
    LexPrio: (">>", 1),
    IfPossible: ("&>", 2),
    OrAtLeast: ("|>", 2),
    Or: ("|", 3),
    Xor: ("^", 4),
    And: ("&", 5),
}
_NOT_PREC = 6
_LEAF_PREC = 7


def _is_ident(s: str) -> bool:
    return bool(s) and (s[0].isascii() and (s[0].isalpha() or s[0] == "_")) and all(
        c.isascii() and (c.isalnum() or c == "_") for c in s
    )


# -- lexer ------------------------------------------------------------------

@dataclass(frozen=True)
class Token:
    kind: str  # IDENT, VALUE, OP, LPAREN, RPAREN, EOF
    text: str
    pos: int
    value: TruthValue | None = None


_TWO_CHAR_OPS = (">>", "&>", "|>")
_ONE_CHAR_OPS = "!&|^"


def tokenize(text: str) -> list[Token]:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
        elif c == "#":
            while i < n and text[i] != "\n":
                i += 1
        elif text.startswith(_TWO_CHAR_OPS, i):
            tokens.append(Token("OP", text[i:i + 2], i))
            i += 2
        elif c in _ONE_CHAR_OPS:
            tokens.append(Token("OP", c, i))
            i += 1
        elif c == "(":
            tokens.append(Token("LPAREN", c, i))
            i += 1
        elif c == ")":
            tokens.append(Token("RPAREN", c, i))
            i += 1
        elif c == "[":
            j = text.find("]", i)
            if j < 0:
                raise FormulaSyntaxError("unterminated value literal", i, "lexical")
            literal = text[i:j + 1]
            try:
                value = parse_value(literal)
            except InvalidValueError as e:
                raise FormulaSyntaxError(
                    f"bad value literal {literal!r}: {e.reason}", i, "lexical"
                ) from None
            tokens.append(Token("VALUE", literal, i, value))
            i = j + 1
        elif c.isascii() and (c.isalpha() or c == "_"):
            j = i + 1
            while j < n and text[j].isascii() and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            if word in RESERVED:
                tokens.append(Token("VALUE", word, i, TRUE if word == "T" else FALSE))
            else:
                tokens.append(Token("IDENT", word, i))
            i = j
        else:
            raise FormulaSyntaxError(f"unexpected character {c!r}", i, "lexical")
    tokens.append(Token("EOF", "", n))
    return tokens


# -- parser -----------------------------------------------------------------

class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def at_op(self, *ops) -> bool:
        return self.tok.kind == "OP" and self.tok.text in ops

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def error(self, msg):
        t = self.tok
        found = "end of input" if t.kind == "EOF" else repr(t.text)
        raise FormulaSyntaxError(f"{msg}, found {found}", t.pos)

    def parse(self) -> Formula:
        f = self.lexp()
        if self.tok.kind != "EOF":
            self.error("expected operator or end of input")
        return f

    def lexp(self):
        left = self.prefp()
        if self.at_op(">>"):
            self.advance()
            return LexPrio(left, self.lexp())
        return left

    def prefp(self):
        left = self.orp()
        while self.at_op("&>", "|>"):
            op = self.advance().text
            right = self.orp()
            left = IfPossible(left, right) if op == "&>" else OrAtLeast(left, right)
        return left

    def orp(self):
        left = self.xorp()
        while self.at_op("|"):
            self.advance()
            left = Or(left, self.xorp())
        return left

    def xorp(self):
        left = self.andp()
        while self.at_op("^"):
            self.advance()
            left = Xor(left, self.andp())
        return left

    def andp(self):
        left = self.notp()
        while self.at_op("&"):
            self.advance()
            left = And(left, self.notp())
        return left

    def notp(self):
        if self.at_op("!"):
            self.advance()
            return Not(self.notp())
        return self.primary()

    def primary(self):
        t = self.tok
        if t.kind == "IDENT":
            self.advance()
            return Atom(t.text)
        if t.kind == "VALUE":
            self.advance()
            return Const(t.value)
        if t.kind == "LPAREN":
            self.advance()
            f = self.lexp()
            if self.tok.kind != "RPAREN":
                self.error("expected ')'")
            self.advance()
            return f
        self.error("expected atom, value or '('")


def parse(text: str) -> Formula:
    """Parse formula text into an AST.

    >>> parse("x >> y >> z") == LexPrio(Atom("x"), LexPrio(Atom("y"), Atom("z")))
    True
    """
    return _Parser(tokenize(text)).parse()


# -- transformations ----------------------------------------------------------

def desugar(f: Formula) -> Formula:
    """Rewrite derived connectives into the core ``! & | >>`` fragment."""
    if isinstance(f, (Atom, Const)):
        return f
    if isinstance(f, Not):
        return Not(desugar(f.child))
    a, b = desugar(f.left), desugar(f.right)
    if isinstance(f, IfPossible):
        return LexPrio(a, And(a, b))
    if isinstance(f, OrAtLeast):
        return LexPrio(Or(a, b), a)
    if isinstance(f, Xor):
        return And(Or(a, b), Not(And(a, b)))
    return type(f)(a, b)


def is_core(f: Formula) -> bool:
    return all(isinstance(g, CORE_TYPES) for g in iter_subformulas(f))


def iter_subformulas(f: Formula) -> Iterator[Formula]:
    """Pre-order traversal, ``f`` itself first."""
    stack = [f]
    while stack:
        g = stack.pop()
        yield g
        if isinstance(g, Not):
            stack.append(g.child)
        elif isinstance(g, Binary):
            stack.append(g.right)
            stack.append(g.left)


def atoms_of(f: Formula) -> tuple[str, ...]:
    """Atom names in first-occurrence order, without duplicates."""
    seen = {}
    for g in iter_subformulas(f):
        if isinstance(g, Atom):
            seen.setdefault(g.name, None)
    return tuple(seen)


def _prec(f: Formula) -> int:
    if isinstance(f, Not):
        return _NOT_PREC
    if isinstance(f, Binary):
        return _BINARY_SYNTAX[type(f)][1]
    return _LEAF_PREC


def render(f: Formula) -> str:
    """Print with the fewest parentheses that still re-parse to the same tree."""
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Const):
        return str(f.value)
    if isinstance(f, Not):
        inner = render(f.child)
        return "!" + (f"({inner})" if _prec(f.child) < _NOT_PREC else inner)
    op, p = _BINARY_SYNTAX[type(f)]
    lp, rp = _prec(f.left), _prec(f.right)
    if isinstance(f, LexPrio):
        wrap_left, wrap_right = lp <= p, rp < p
    else:
        wrap_left, wrap_right = lp < p, rp <= p
    left = render(f.left)
    right = render(f.right)
    if wrap_left:
        left = f"({left})"
    if wrap_right:
        right = f"({right})"
    return f"{left} {op} {right}"
