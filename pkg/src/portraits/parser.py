"""Recursive-descent parser for maps, points, places and portraits.

Grammar (no implicit multiplication)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | factor
    factor := base ('^' uint)?
    base   := 'z' | 't' | uint | '(' expr ')'

Rationals are written as quotients, e.g. ``3/2``.  An expression evaluates to
a quotient of polynomials in z with coefficients in QQ[t].
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from .dynmap import PlaceSet, Portrait, ProjPointK, new_map
from .errors import ParseError, PreconditionError
from .exactalg import QQ, QQt, Poly, RatFunc, exquo, poly_gcd, rational_roots, squarefree_part
from .places import Place

MAX_EXPONENT = 512
MAX_DEGREE = 4096
MAX_DEPTH = 200

_TOKEN = re.compile(r"\s*(?:(?P<num>[0-9]+)|(?P<name>[A-Za-z_]+)|(?P<op>[-+*/^()]))")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def _position(text, offset):
    line = text.count("\n", 0, offset) + 1
    column = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, column


def tokenize(text):
    tokens = []
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos] in " \t\r\n":
            pos += 1
        if pos >= n:
            break
        m = _TOKEN.match(text, pos)
        if not m:
            line, col = _position(text, pos)
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        start = m.start(m.lastgroup)
        line, col = _position(text, start)
        tokens.append(Token(m.lastgroup, m.group(m.lastgroup), line, col))
        pos = m.end()
    line, col = _position(text, n)
    tokens.append(Token("end", "", line, col))
    return tokens


def _zpoly(c):
    return Poly.const(c, QQt, "z")


_Z = Poly.gen(QQt, "z")
_T = _zpoly(Poly.gen(QQ, "t"))
_ONE = _zpoly(1)


def _normalize(num, den):
    if not den:
        raise ZeroDivisionError
    if not num:
        return num, _ONE
    if den.degree > 0 or den.lc.degree > 0:
        g = poly_gcd(num, den)
        if g.degree > 0 or g.lc.degree > 0:
            num, den = exquo(num, g), exquo(den, g)
    return num, den


def _degree(v):
    num, den = v
    tdeg = max((c.degree for p in v for c in p.coeffs if c), default=0)
    return max(num.degree, den.degree, tdeg)


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0
        self.depth = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def fail(self, message, tok=None):
        tok = tok or self.tok
        raise ParseError(message, tok.line, tok.column)

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def accept(self, op):
        if self.tok.kind == "op" and self.tok.text == op:
            return self.advance()
        return None

    def check_size(self, v, tok):
        if _degree(v) > MAX_DEGREE:
            self.fail(f"expression degree exceeds {MAX_DEGREE}", tok)
        return v

    def parse(self):
        v = self.expr()
        if self.tok.kind != "end":
            self.fail(f"unexpected {self.tok.text!r}")
        return _normalize(*v)

    def expr(self):
        v = self.term()
        while True:
            tok = self.tok
            if self.accept("+"):
                w = self.term()
                v = (v[0] * w[1] + w[0] * v[1], v[1] * w[1])
            elif self.accept("-"):
                w = self.term()
                v = (v[0] * w[1] - w[0] * v[1], v[1] * w[1])
            else:
                return v
            v = self.check_size(v, tok)

    def term(self):
        v = self.unary()
        while True:
            tok = self.tok
            if self.accept("*"):
                w = self.unary()
                v = (v[0] * w[0], v[1] * w[1])
            elif self.accept("/"):
                w = self.unary()
                if not w[0]:
                    self.fail("division by the zero polynomial", tok)
                v = _normalize(v[0] * w[1], v[1] * w[0])
            else:
                return v
            v = self.check_size(v, tok)

    def unary(self):
        if self.accept("-"):
            self.enter()
            v = self.unary()
            self.depth -= 1
            return (-v[0], v[1])
        return self.factor()

    def enter(self):
        self.depth += 1
        if self.depth > MAX_DEPTH:
            self.fail("expression nested too deeply")

    def factor(self):
        v = self.base()
        tok = self.tok
        if self.accept("^"):
            etok = self.tok
            if etok.kind != "num":
                self.fail("expected a nonnegative integer exponent")
            self.advance()
            e = int(etok.text)
            if e > MAX_EXPONENT:
                self.fail(f"exponent larger than {MAX_EXPONENT}", etok)
            if e and _degree(v) * e > MAX_DEGREE:
                self.fail(f"expression degree exceeds {MAX_DEGREE}", tok)
            v = (v[0] ** e, v[1] ** e)
        return v

    def base(self):
        tok = self.tok
        if tok.kind == "num":
            self.advance()
            return (_zpoly(int(tok.text)), _ONE)
        if tok.kind == "name":
            self.advance()
            if tok.text == "z":
                return (_Z, _ONE)
            if tok.text == "t":
                return (_T, _ONE)
            self.fail(f"unknown name {tok.text!r}", tok)
        if self.accept("("):
            self.enter()
            v = self.expr()
            self.depth -= 1
            if not self.accept(")"):
                self.fail("expected ')'")
            return v
        if tok.kind == "end":
            self.fail("unexpected end of input")
        self.fail(f"unexpected {tok.text!r}")


def parse_expression(text):
    """(numerator, denominator) as polynomials in z over QQ[t], reduced."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError("input is not valid UTF-8", 1, exc.start + 1) from None
    try:
        return _Parser(text).parse()
    except RecursionError:
        raise ParseError("expression nested too deeply") from None


@dataclass(frozen=True)
class MapExpression:
    source: str
    numerator: Poly
    denominator: Poly

    def to_map(self):
        return new_map(self.numerator, self.denominator)


def parse_map_expression(text):
    num, den = parse_expression(text)
    return MapExpression(text, num, den)


def parse_map(text):
    return parse_map_expression(text).to_map()


def _constant_in_z(text):
    num, den = parse_expression(text)
    if num.degree > 0 or den.degree > 0:
        raise ParseError("expected an expression in t only")
    return RatFunc(num.coeff(0) if num else Poly((), QQ, "t"), den.coeff(0))


def parse_point(text):
    if text.strip() == "inf":
        return ProjPointK.infinity()
    return ProjPointK.of(_constant_in_z(text))


def parse_rational(text):
    r = _constant_in_z(text)
    if not r.is_constant():
        raise ParseError("expected a rational number")
    return Fraction(r.num.coeff(0))


def parse_t_polynomial(text):
    r = _constant_in_z(text)
    if r.den.degree > 0:
        raise ParseError("expected a polynomial in t")
    return r.num * (1 / r.den.lc)


def check_irreducible(q, trust=False):
    """Certify irreducibility over QQ for degree <= 3; above that rely on ``trust``."""
    if q.degree <= 1:
        return
    if q.degree <= 3:
        if rational_roots(q) or squarefree_part(q).degree < q.degree:
            raise PreconditionError(f"{q} is reducible over QQ")
        return
    if not trust:
        raise PreconditionError(f"cannot certify that {q} is irreducible; pass --trust-irreducible to accept it")


def parse_place(text, trust=False):
    if text.strip() == "inf":
        return Place.infinity()
    q = parse_t_polynomial(text)
    if q.degree < 1:
        raise PreconditionError("a place needs a nonconstant polynomial in t")
    q = q.monic()
    check_irreducible(q, trust)
    return Place.finite(q)


def parse_exclusions(text):
    """'poly;poly;inf' -> PlaceSet (polynomials need not be irreducible)."""
    finite = Poly.const(1, QQ, "t")
    at_inf = False
    for part in (text or "").split(";"):
        part = part.strip()
        if not part:
            continue
        if part == "inf":
            at_inf = True
            continue
        q = parse_t_polynomial(part)
        if not q:
            raise PreconditionError("cannot exclude the zero polynomial")
        finite = finite * q
    return PlaceSet(finite, at_inf)


_PORTRAIT = re.compile(r"\s*\(?\s*(\d+)\s*,\s*(\d+)\s*\)?\s*$")


def parse_portrait(text):
    m = _PORTRAIT.match(text)
    if not m:
        raise ParseError(f"expected a portrait like (m,n), got {text!r}")
    return Portrait(int(m.group(1)), int(m.group(2)))
