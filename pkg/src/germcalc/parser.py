"""Text syntax for polynomials and one-parameter generator templates.

Grammar (whitespace-insensitive, ``*`` required between factors)::

    expr     := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := atom ['^' nat]
    atom     := rational | 'i' | var | '-' factor | '(' expr ')'
    var      := 'x_' (nat | '{' affine '}')
    affine   := [nat ['*']] param [('+' | '-') nat] | nat
    rational := int ['/' nat]

Templates such as ``x_{2k+1}^2 + (x_{2k+2} - x_{2k+3})^2`` use a single
parameter inside subscripts; instantiating at ``k`` yields a polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .poly import Polynomial, grevlex_key
from .scalars import Field, GaussianRational, format_scalar


class ParseError(ValueError):
    """A positioned error in polynomial or template text."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.message = message
        self.line = line
        self.column = column


class SubscriptOutOfRange(ParseError):
    pass


class NonAffineSubscript(ParseError):
    pass


class UnboundParameter(ParseError):
    pass


class FieldError(ParseError):
    pass


# -- tokens -------------------------------------------------------------------


@dataclass(frozen=True)
class Token:
    kind: str  # NUM, IDENT, VAR, OP, EOF
    text: str
    line: int
    column: int


_OPS = set("+-*/^(){}")


def tokenize(text: str) -> list[Token]:
    tokens = []
    line, col, pos = 1, 1, 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch == "\n":
            line, col, pos = line + 1, 1, pos + 1
            continue
        if ch.isspace():
            col, pos = col + 1, pos + 1
            continue
        start_col = col
        if ch.isdigit():
            end = pos
            while end < n and text[end].isdigit():
                end += 1
            tokens.append(Token("NUM", text[pos:end], line, start_col))
        elif ch.isalpha():
            if ch == "x" and pos + 1 < n and text[pos + 1] == "_":
                end = pos + 2
                tokens.append(Token("VAR", "x_", line, start_col))
            else:
                end = pos
                while end < n and text[end].isalpha():
                    end += 1
                tokens.append(Token("IDENT", text[pos:end], line, start_col))
        elif ch in _OPS:
            end = pos + 1
            tokens.append(Token("OP", ch, line, start_col))
        else:
            raise ParseError(f"unexpected character {ch!r}", line, start_col)
        col += end - pos
        pos = end
    tokens.append(Token("EOF", "", line, col))
    return tokens


# -- AST ----------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Imag:
    pass


@dataclass(frozen=True)
class Var:
    slope: int  # coefficient of the template parameter
    offset: int


@dataclass(frozen=True)
class Sym:
    index: int


@dataclass(frozen=True)
class BinOp:
    op: str  # '+', '-', '*'
    left: object
    right: object


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


class _Parser:
    def __init__(self, text: str, allow_param: bool, symbols: Mapping[str, int] | None = None):
        self.tokens = tokenize(text)
        self.pos = 0
        self.allow_param = allow_param
        self.symbols = dict(symbols or {})
        self.params: set[str] = set()
        self.param_token: Token | None = None

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def error(self, message: str, tok: Token | None = None, cls=ParseError):
        tok = tok or self.tok
        raise cls(message, tok.line, tok.column)

    def expect(self, kind: str, text: str | None = None) -> Token:
        t = self.tok
        if t.kind != kind or (text is not None and t.text != text):
            want = text or kind
            got = t.text or "end of input"
            self.error(f"expected {want!r}, found {got!r}")
        return self.advance()

    def at_op(self, text: str) -> bool:
        return self.tok.kind == "OP" and self.tok.text == text

    def parse(self):
        if self.tok.kind == "EOF":
            self.error("empty expression")
        node = self.expr()
        if self.tok.kind != "EOF":
            self.error(f"unexpected {self.tok.text!r}")
        return node

    def expr(self):
        node = self.term()
        while self.at_op("+") or self.at_op("-"):
            op = self.advance().text
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.at_op("*"):
            self.advance()
            node = BinOp("*", node, self.factor())
        return node

    def factor(self):
        node = self.atom()
        if self.at_op("^"):
            self.advance()
            exp = self.expect("NUM")
            node = Pow(node, int(exp.text))
        return node

    def atom(self):
        t = self.tok
        if t.kind == "NUM":
            self.advance()
            value = Fraction(int(t.text))
            if self.at_op("/"):
                self.advance()
                den = self.expect("NUM")
                if int(den.text) == 0:
                    self.error("zero denominator", den)
                value = value / int(den.text)
            return Num(value)
        if t.kind == "IDENT":
            if t.text == "i":
                self.advance()
                return Imag()
            if t.text in self.symbols:
                self.advance()
                return Sym(self.symbols[t.text])
            self.error(f"unexpected identifier {t.text!r}")
        if t.kind == "VAR":
            self.advance()
            return self.subscript()
        if self.at_op("-"):
            self.advance()
            return Neg(self.factor())
        if self.at_op("("):
            self.advance()
            node = self.expr()
            self.expect("OP", ")")
            return node
        self.error(f"unexpected {t.text or 'end of input'!r}")

    def subscript(self) -> Var:
        t = self.tok
        if t.kind == "NUM":
            self.advance()
            idx = int(t.text)
            if idx < 1:
                self.error("variable subscript must be at least 1", t, SubscriptOutOfRange)
            return Var(0, idx)
        if not self.at_op("{"):
            self.error("expected a subscript after 'x_'")
        open_tok = self.advance()
        slope, offset = self.affine()
        self.expect("OP", "}")
        if slope < 0:
            self.error("subscript decreases with the parameter", open_tok, SubscriptOutOfRange)
        if offset < 1:
            self.error("subscript must be at least 1 for every k >= 0", open_tok, SubscriptOutOfRange)
        return Var(slope, offset)

    def affine(self) -> tuple[int, int]:
        slope, offset = 0, 0
        sign = 1
        if self.at_op("-") or self.at_op("+"):
            sign = -1 if self.advance().text == "-" else 1
        while True:
            a, b = self.affine_term()
            slope += sign * a
            offset += sign * b
            if self.at_op("+") or self.at_op("-"):
                sign = -1 if self.advance().text == "-" else 1
                continue
            return slope, offset

    def affine_term(self) -> tuple[int, int]:
        # product of naturals and at most one parameter occurrence
        coeff, params = 1, 0
        first = self.tok
        while True:
            t = self.tok
            if t.kind == "NUM":
                self.advance()
                coeff *= int(t.text)
            elif t.kind == "IDENT" and t.text != "i":
                self.advance()
                self.note_param(t)
                params += 1
                if self.at_op("^"):
                    self.advance()
                    e = int(self.expect("NUM").text)
                    params += e - 1
                    if e == 0:
                        params -= 1
            elif self.at_op("("):
                self.error("parentheses are not allowed in subscripts", t, NonAffineSubscript)
            else:
                self.error(f"unexpected {t.text or 'end of input'!r} in subscript")
            if params > 1:
                self.error("subscript is not affine in the parameter", first, NonAffineSubscript)
            if self.at_op("*"):
                self.advance()
                continue
            if self.tok.kind in ("NUM", "IDENT") and self.tok.text != "i":
                continue  # juxtaposition such as 2k
            break
        return (coeff, 0) if params == 1 else (0, coeff)

    def note_param(self, t: Token):
        if not self.allow_param:
            self.error(f"parameter {t.text!r} is not bound here", t, UnboundParameter)
        if self.params and t.text not in self.params:
            self.error("templates take a single parameter", t, UnboundParameter)
        if not self.params:
            self.param_token = t
        self.params.add(t.text)


def build(node, field: Field, k: int = 0) -> Polynomial:
    """Evaluate an AST to a polynomial, with the template parameter set to ``k``."""
    if isinstance(node, Num):
        return Polynomial.constant(node.value, field)
    if isinstance(node, Imag):
        if field is not Field.COMPLEX:
            raise FieldError("imaginary unit under the real field")
        return Polynomial.constant(GaussianRational(0, 1), field)
    if isinstance(node, Var):
        return Polynomial.var(node.slope * k + node.offset, field)
    if isinstance(node, Sym):
        return Polynomial.var(node.index, field)
    if isinstance(node, Neg):
        return -build(node.operand, field, k)
    if isinstance(node, Pow):
        return build(node.base, field, k) ** node.exponent
    if isinstance(node, BinOp):
        a, b = build(node.left, field, k), build(node.right, field, k)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        return a * b
    raise TypeError(f"unknown node {node!r}")


def _check_field(node, field: Field, text: str):
    # locate an imaginary unit for a positioned FieldError
    if field is Field.COMPLEX:
        return
    for tok in tokenize(text):
        if tok.kind == "IDENT" and tok.text == "i":
            raise FieldError("imaginary unit under the real field", tok.line, tok.column)


def parse_poly(text: str, field: Field | str = Field.REAL, symbols: Mapping[str, int] | None = None) -> Polynomial:
    """Parse polynomial text into a canonical :class:`Polynomial`."""
    field = Field.parse(field)
    parser = _Parser(text, allow_param=False, symbols=symbols)
    node = parser.parse()
    _check_field(node, field, text)
    return build(node, field)


@dataclass(frozen=True)
class GeneratorTemplate:
    """A polynomial family indexed by one nonnegative integer parameter."""

    param: str
    body: object
    text: str

    def instantiate(self, k: int, field: Field | str = Field.REAL) -> Polynomial:
        return instantiate(self, k, field)

    def subscripts(self, k: int) -> frozenset:
        out = set()
        stack = [self.body]
        while stack:
            node = stack.pop()
            if isinstance(node, Var):
                out.add(node.slope * k + node.offset)
            elif isinstance(node, BinOp):
                stack += [node.left, node.right]
            elif isinstance(node, Neg):
                stack.append(node.operand)
            elif isinstance(node, Pow):
                stack.append(node.base)
        return frozenset(out)


def parse_template(text: str) -> GeneratorTemplate:
    parser = _Parser(text, allow_param=True)
    node = parser.parse()
    if not parser.params:
        raise UnboundParameter("template has no parameter", 1, 1)
    return GeneratorTemplate(next(iter(parser.params)), node, text)


def instantiate(t: GeneratorTemplate, k: int, field: Field | str = Field.REAL) -> Polynomial:
    if k < 0:
        raise ValueError("template parameter must be nonnegative")
    field = Field.parse(field)
    if field is Field.REAL:
        _check_field(t.body, field, t.text)
    return build(t.body, field, k)


def _format_monomial(m, names: Mapping[int, str]) -> str:
    parts = []
    for v, e in m:
        name = names.get(v, f"x_{v}")
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def _split_sign(c):
    """Return (negative, magnitude) so that c == -magnitude when negative."""
    if isinstance(c, GaussianRational):
        if c.im == 0:
            return c.re < 0, abs(c.re)
        if c.re == 0 and c.im < 0:
            return True, -c
        return False, c
    return c < 0, abs(c)


def print_canonical(p: Polynomial, names: Mapping[int, str] | None = None) -> str:
    """Deterministic text for ``p``: terms in decreasing grevlex order."""
    if p.is_zero():
        return "0"
    names = names or {}
    out = []
    for idx, (m, c) in enumerate(p.sorted_terms()):
        negative, mag = _split_sign(c)
        mono = _format_monomial(m, names)
        if not mono:
            body = format_scalar(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{format_scalar(mag)}*{mono}"
        if idx == 0:
            out.append(f"-{body}" if negative else body)
        else:
            out.append(f" - {body}" if negative else f" + {body}")
    return "".join(out)


def _node_text(node, param: str) -> str:
    if isinstance(node, Num):
        v = node.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(node, Imag):
        return "i"
    if isinstance(node, Var):
        if node.slope == 0:
            return f"x_{node.offset}"
        a = param if node.slope == 1 else f"{node.slope}*{param}"
        return f"x_{{{a} + {node.offset}}}"
    if isinstance(node, Neg):
        inner = _node_text(node.operand, param)
        return f"-({inner})" if isinstance(node.operand, (BinOp, Neg)) else f"-{inner}"
    if isinstance(node, Pow):
        base = _node_text(node.base, param)
        atomic = isinstance(node.base, (Var, Imag)) or (isinstance(node.base, Num) and node.base.value.denominator == 1)
        return f"{base if atomic else f'({base})'}^{node.exponent}"
    if isinstance(node, BinOp):
        left, right = _node_text(node.left, param), _node_text(node.right, param)
        additive = lambda n: isinstance(n, BinOp) and n.op in "+-"
        if node.op == "*":
            if additive(node.left):
                left = f"({left})"
            if isinstance(node.right, BinOp) or isinstance(node.right, Neg):
                right = f"({right})"
            return f"{left}*{right}"
        if additive(node.right) or isinstance(node.right, Neg):
            right = f"({right})"
        return f"{left} {node.op} {right}"
    raise TypeError(f"cannot print node {node!r}")


def print_template(t: GeneratorTemplate) -> str:
    """Text that parses back to the same template tree."""
    return _node_text(t.body, t.param)


__all__ = [
    "ParseError",
    "SubscriptOutOfRange",
    "NonAffineSubscript",
    "UnboundParameter",
    "FieldError",
    "GeneratorTemplate",
    "parse_poly",
    "parse_template",
    "instantiate",
    "print_canonical",
    "print_template",
    "grevlex_key",
]
