"""A small expression language over b-numbers and complex scalars.

Grammar (``^`` binds tighter than ``*`` and ``/``; ``^`` is right
associative, everything else left associative)::

    expr    := product (('+' | '-') product)*
    product := unary (('*' | '/') unary)*
    unary   := '-' unary | power
    power   := postfix ('^' unary)?
    postfix := atom | 'lift' '(' NAME ')' ('(' expr ')')?
    atom    := NUMBER | NUMBER 'i' | 'i' | 'pi' | 'e' | 'z'
             | 'b' '(' const ',' const ')' | 'c' '(' const ',' const ')'
             | 'pow' '(' expr ',' expr ')' | 'root' '(' expr ',' INT ')'
             | FUNC '(' expr ')' | '(' expr ')'

Subexpressions that are constant complex scalars are folded at parse
time into :class:`Complex` nodes, and ``b(r, theta)`` literals are checked
against ``r > 0`` there as well.

Values are Python ``complex`` (scalars) or :class:`BNumber`. Scalars
meeting a b-number in ``*``, ``/`` or a function slot are embedded into
the principal sheet; ``+`` and ``-`` only work on scalars.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Optional, Union

from .bnum import BNumber, div, embed_complex, mul, pow_complex, project, root_n
from .elemfn import CLASSICAL, bexp, blog, trig_hyp
from .errors import BDomainError, ParseError
from .surfacefn import SurfaceFunction

FUNCTIONS = ("log", "exp", "sin", "cos", "sinh", "cosh")
SPECIAL = ("b", "c", "pow", "root", "lift")
CONSTANTS = {"pi": math.pi, "e": math.e}
MAX_DEPTH = 100


# --------------------------------------------------------------------------- AST


@dataclass(frozen=True)
class Lit:
    r: float
    theta: float


@dataclass(frozen=True)
class Complex:
    re: float
    im: float

    @property
    def value(self) -> complex:
        return complex(self.re, self.im)


@dataclass(frozen=True)
class Var:
    name: str = "z"


@dataclass(frozen=True)
class Neg:
    arg: "Node"


@dataclass(frozen=True)
class Add:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Sub:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Mul:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Div:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: "Node"


@dataclass(frozen=True)
class Call:
    name: str
    arg: "Node"


@dataclass(frozen=True)
class Root:
    arg: "Node"
    n: int


@dataclass(frozen=True)
class Lift:
    name: str
    arg: Optional["Node"] = None


Node = Union[Lit, Complex, Var, Neg, Add, Sub, Mul, Div, Pow, Call, Root, Lift]

_BINARY = {"+": Add, "-": Sub, "*": Mul, "/": Div}
_SYMBOL = {Add: "+", Sub: "-", Mul: "*", Div: "/", Pow: "^"}


# ------------------------------------------------------------------------ lexing


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "imag", "name", "op", "end"
    text: str
    offset: int
    value: float = 0.0


def _byte_offsets(text: str) -> list[int]:
    out, pos = [], 0
    for ch in text:
        out.append(pos)
        pos += len(ch.encode("utf-8", "surrogatepass"))
    out.append(pos)
    return out


def tokenize(text: str) -> list[Token]:
    offs = _byte_offsets(text)
    toks: list[Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch in " \t\r\n":
            i += 1
            continue
        start = i
        if ch.isascii() and (ch.isdigit() or (ch == "." and i + 1 < n and text[i + 1].isascii()
                                              and text[i + 1].isdigit())):
            while i < n and text[i].isascii() and text[i].isdigit():
                i += 1
            if i < n and text[i] == ".":
                i += 1
                while i < n and text[i].isascii() and text[i].isdigit():
                    i += 1
            if i < n and text[i] in "eE":
                j = i + 1
                if j < n and text[j] in "+-":
                    j += 1
                if j < n and text[j].isascii() and text[j].isdigit():
                    i = j
                    while i < n and text[i].isascii() and text[i].isdigit():
                        i += 1
            lexeme = text[start:i]
            value = float(lexeme)
            if not math.isfinite(value):
                raise ParseError(f"number {lexeme!r} is out of range", offs[start])
            if i < n and text[i] == "i" and not (i + 1 < n and _is_name_char(text[i + 1])):
                i += 1
                toks.append(Token("imag", text[start:i], offs[start], value))
            else:
                toks.append(Token("num", lexeme, offs[start], value))
            continue
        if _is_name_start(ch):
            while i < n and _is_name_char(text[i]):
                i += 1
            toks.append(Token("name", text[start:i], offs[start]))
            continue
        if ch in "+-*/^(),":
            toks.append(Token("op", ch, offs[start]))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", offs[start])
    toks.append(Token("end", "", offs[n]))
    return toks


def _is_name_start(ch: str) -> bool:
    return ch.isascii() and (ch.isalpha() or ch == "_")


def _is_name_char(ch: str) -> bool:
    return ch.isascii() and (ch.isalnum() or ch == "_")


# ----------------------------------------------------------------------- parsing


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.pos = 0
        self.depth = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.pos]

    def advance(self) -> Token:
        t = self.toks[self.pos]
        if t.kind != "end":
            self.pos += 1
        return t

    def error(self, message: str, expected=(), tok: Optional[Token] = None):
        tok = tok or self.tok
        return ParseError(message, tok.offset, expected)

    def expect(self, text: str) -> Token:
        if self.tok.kind == "op" and self.tok.text == text:
            return self.advance()
        found = self.tok.text or "end of input"
        raise self.error(f"unexpected {found!r}", {repr(text)})

    def enter(self):
        self.depth += 1
        if self.depth > MAX_DEPTH:
            raise self.error("expression nested too deeply")

    def parse(self) -> Node:
        node = self.expr()
        if self.tok.kind != "end":
            raise self.error(f"unexpected {self.tok.text!r}", {"operator", "end of input"})
        return node

    def expr(self) -> Node:
        self.enter()
        node = self.product()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.advance()
            node = _fold(_BINARY[op.text](node, self.product()), op)
        self.depth -= 1
        return node

    def product(self) -> Node:
        node = self.unary()
        while self.tok.kind == "op" and self.tok.text in "*/":
            op = self.advance()
            node = _fold(_BINARY[op.text](node, self.unary()), op)
        return node

    def unary(self) -> Node:
        if self.tok.kind == "op" and self.tok.text == "-":
            op = self.advance()
            self.enter()
            node = _fold(Neg(self.unary()), op)
            self.depth -= 1
            return node
        return self.power()

    def power(self) -> Node:
        base = self.atom()
        if self.tok.kind == "op" and self.tok.text == "^":
            op = self.advance()
            self.enter()
            node = _fold(Pow(base, self.unary()), op)
            self.depth -= 1
            return node
        return base

    def atom(self) -> Node:
        tok = self.tok
        if tok.kind == "num":
            self.advance()
            return Complex(tok.value, 0.0)
        if tok.kind == "imag":
            self.advance()
            return Complex(0.0, tok.value)
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        if tok.kind == "name":
            return self.named()
        found = tok.text or "end of input"
        raise self.error(f"unexpected {found!r}", {"number", "name", "'('", "'-'"})

    def named(self) -> Node:
        tok = self.advance()
        name = tok.text
        if name == "i":
            return Complex(0.0, 1.0)
        if name in CONSTANTS:
            return Complex(CONSTANTS[name], 0.0)
        if name == "z":
            return Var()
        if name not in FUNCTIONS and name not in SPECIAL:
            raise self.error(f"unknown name {name!r}", tok=tok)
        self.expect("(")
        if name == "lift":
            fn = self.tok
            if fn.kind != "name" or fn.text not in CLASSICAL:
                raise self.error("unknown classical function for lift", set(CLASSICAL))
            self.advance()
            self.expect(")")
            if self.tok.kind == "op" and self.tok.text == "(":
                self.advance()
                arg = self.expr()
                self.expect(")")
                return Lift(fn.text, arg)
            return Lift(fn.text)
        first = self.expr()
        if name in ("b", "c", "pow", "root"):
            self.expect(",")
            second_tok = self.tok
            second = self.expr()
            self.expect(")")
            if name == "pow":
                return _fold(Pow(first, second), tok)
            if name == "root":
                n = _real_constant(second, second_tok, "root order")
                if n != int(n) or n < 1:
                    raise ParseError("root order must be a positive integer", second_tok.offset)
                if n > 1_000_000:
                    raise ParseError("root order is too large", second_tok.offset)
                return Root(first, int(n))
            a = _real_constant(first, tok, f"first argument of {name}()")
            b = _real_constant(second, second_tok, f"second argument of {name}()")
            if name == "c":
                return Complex(a, b)
            if not a > 0:
                raise ParseError("r must be > 0", tok.offset)
            return Lit(a, b)
        self.expect(")")
        return Call(name, first)


def _real_constant(node: Node, tok: Token, what: str) -> float:
    if not isinstance(node, Complex):
        raise ParseError(f"{what} must be a constant", tok.offset)
    if node.im != 0:
        raise ParseError(f"{what} must be real", tok.offset)
    return node.re


def _fold(node: Node, tok: Token) -> Node:
    """Collapse an operator over constant scalars into a single :class:`Complex`."""
    if isinstance(node, Neg):
        if isinstance(node.arg, Complex):
            return Complex(-node.arg.re, -node.arg.im)
        return node
    left = getattr(node, "left", getattr(node, "base", None))
    right = getattr(node, "right", getattr(node, "exponent", None))
    if not (isinstance(left, Complex) and isinstance(right, Complex)):
        return node
    a, b = left.value, right.value
    try:
        if isinstance(node, Add):
            v = a + b
        elif isinstance(node, Sub):
            v = a - b
        elif isinstance(node, Mul):
            v = a * b
        elif isinstance(node, Div):
            v = a / b
        else:
            v = _cpow(a, b)
    except ZeroDivisionError:
        raise ParseError("division by zero in constant", tok.offset) from None
    except (OverflowError, ValueError):
        raise ParseError("constant out of range", tok.offset) from None
    if not cmath.isfinite(v):
        raise ParseError("constant out of range", tok.offset)
    return Complex(v.real, v.imag)


def _cpow(a: complex, b: complex) -> complex:
    if b.imag == 0 and a.imag == 0 and a.real > 0:
        return complex(a.real ** b.real, 0.0)
    return a**b


def parse_expression(text: str) -> Node:
    """Parse ``text`` into an AST or raise :class:`ParseError`."""
    if not isinstance(text, str):
        raise ParseError("expression must be text", 0)
    try:
        return _Parser(text).parse()
    except RecursionError:
        raise ParseError("expression nested too deeply", 0) from None


# ---------------------------------------------------------------------- printing


def to_text(node: Node) -> str:
    """Print an AST so that ``parse_expression(to_text(n)) == n``."""
    if isinstance(node, Lit):
        return f"b({node.r!r}, {node.theta!r})"
    if isinstance(node, Complex):
        return f"c({node.re!r}, {node.im!r})"
    if isinstance(node, Var):
        return "z"
    if isinstance(node, Neg):
        return f"(-{to_text(node.arg)})"
    if isinstance(node, Pow):
        return f"({to_text(node.base)} ^ {to_text(node.exponent)})"
    if isinstance(node, (Add, Sub, Mul, Div)):
        return f"({to_text(node.left)} {_SYMBOL[type(node)]} {to_text(node.right)})"
    if isinstance(node, Call):
        return f"{node.name}({to_text(node.arg)})"
    if isinstance(node, Root):
        return f"root({to_text(node.arg)}, {node.n})"
    if isinstance(node, Lift):
        if node.arg is None:
            return f"lift({node.name})"
        return f"lift({node.name})({to_text(node.arg)})"
    raise TypeError(f"not an expression node: {node!r}")


# -------------------------------------------------------------------- evaluation

Value = Union[complex, BNumber]


def _as_b(v: Value) -> BNumber:
    return v if isinstance(v, BNumber) else embed_complex(v)


def _scalar(v: Value, what: str) -> complex:
    if isinstance(v, BNumber):
        raise BDomainError(f"{what} must be a complex scalar, got b-number {v!r}")
    return v


def evaluate(node: Node, z: Optional[BNumber] = None) -> Value:
    """Evaluate ``node`` with the variable bound to ``z``."""
    if isinstance(node, Complex):
        return node.value
    if isinstance(node, Lit):
        return BNumber(node.r, node.theta)
    if isinstance(node, Var):
        if z is None:
            raise BDomainError("variable z is unbound here")
        return z
    if isinstance(node, Neg):
        return -_scalar(evaluate(node.arg, z), "operand of unary minus")
    if isinstance(node, (Add, Sub)):
        a, b = evaluate(node.left, z), evaluate(node.right, z)
        if isinstance(a, BNumber) or isinstance(b, BNumber):
            raise BDomainError("addition and subtraction are not defined on b-numbers")
        return a + b if isinstance(node, Add) else a - b
    if isinstance(node, (Mul, Div)):
        a, b = evaluate(node.left, z), evaluate(node.right, z)
        if isinstance(a, BNumber) or isinstance(b, BNumber):
            f = mul if isinstance(node, Mul) else div
            return f(_as_b(a), _as_b(b))
        if isinstance(node, Mul):
            return a * b
        if b == 0:
            raise BDomainError("division by zero")
        return a / b
    if isinstance(node, Pow):
        a, w = evaluate(node.base, z), evaluate(node.exponent, z)
        w = _scalar(w, "exponent")
        if isinstance(a, BNumber):
            return pow_complex(a, w)
        try:
            return _cpow(a, w)
        except (ZeroDivisionError, OverflowError) as exc:
            raise BDomainError(f"cannot raise {a} to {w}: {exc}") from exc
    if isinstance(node, Root):
        return root_n(_as_b(evaluate(node.arg, z)), node.n)
    if isinstance(node, Call):
        v = evaluate(node.arg, z)
        if node.name == "log":
            return blog(_as_b(v))
        if node.name == "exp":
            return bexp(project(v) if isinstance(v, BNumber) else v)
        return trig_hyp(node.name, _as_b(v))
    if isinstance(node, Lift):
        arg = z if node.arg is None else evaluate(node.arg, z)
        if arg is None:
            raise BDomainError("variable z is unbound here")
        f = CLASSICAL[node.name][0]
        try:
            return bexp(f(blog(_as_b(arg))))
        except (ValueError, ZeroDivisionError, OverflowError) as exc:
            if isinstance(exc, BDomainError):
                raise
            raise BDomainError(f"lift({node.name}) undefined at {arg!r}: {exc}") from exc
    raise TypeError(f"not an expression node: {node!r}")


def evaluate_text(text: str, z: Optional[BNumber] = None) -> Value:
    return evaluate(parse_expression(text), z)


def expression_function(node: Node, name: Optional[str] = None) -> SurfaceFunction:
    """Surface function ``z -> node(z)``; scalar results are embedded."""

    def fld(r, theta):
        w = blog(_as_b(evaluate(node, BNumber(r, theta))))
        return w.real, w.imag

    return SurfaceFunction(fld, name=name or to_text(node))
