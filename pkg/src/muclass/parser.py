"""Recursive-descent parser for polynomial expressions and field specs.

Grammar (whitespace is ignored)::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/')? factor)*  # juxtaposition multiplies: 2t^3
    factor := '-' factor | base ('^' nat)?
    base   := number ('/' number)? | ident | '(' expr ')'

Unary minus binds looser than ``^`` so ``-t^2`` is ``-(t^2)``. The divisor
of ``/`` must not involve the polynomial variable; it is inverted in the
coefficient field, which is how printed ``K(eps)`` coefficients read back.
Identifiers: the polynomial variable (``t`` by default), ``eps`` (or ``ε``)
when the target field is a rational function field, and the generator name
(``x``) when it is an extension.
"""

import re
from fractions import Fraction

from .errors import InvalidField, PolySyntaxError, WrongVariable
from .fields import QQ, Extension, PrimeField, RatFunc
from .poly import Poly

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_ε][A-Za-z_0-9]*)|(\S))")

EPS_NAMES = ("eps", "ε")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # trailing whitespace
            break
        num, ident, sym = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            tokens.append(("num", int(num), start))
        elif ident is not None:
            tokens.append(("ident", ident, start))
        else:
            tokens.append(("sym", sym, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, ctx, var):
        self.text = text
        self.ctx = ctx
        self.var = var
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def offset(self, tok):
        # byte offset of a character index
        return len(self.text[:tok[2]].encode())

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return PolySyntaxError(msg, self.offset(tok))

    def parse(self):
        if self.peek()[0] == "end":
            raise self.error("empty expression")
        value = self.expr()
        if self.peek()[0] != "end":
            raise self.error(f"unexpected {self.peek()[1]!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek()[0] == "sym" and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def _starts_factor(self, tok):
        kind, val, _ = tok
        return kind in ("num", "ident") or (kind == "sym" and val == "(")

    def term(self):
        value = self.factor()
        while True:
            tok = self.peek()
            if tok[0] == "sym" and tok[1] == "*":
                self.take()
                value = value * self.factor()
            elif tok[0] == "sym" and tok[1] == "/":
                self.take()
                start = self.peek()
                value = self.divide(value, self.factor(), start)
            elif self._starts_factor(tok):
                value = value * self.factor()
            else:
                return value

    def divide(self, value, divisor, tok):
        if divisor.degree > 0:
            raise self.error(f"cannot divide by {self.var}-dependent {divisor}", tok)
        if not divisor:
            raise self.error("zero denominator", tok)
        return value.scale(self.ctx.inv(divisor.lc))

    def factor(self):
        tok = self.peek()
        if tok[0] == "sym" and tok[1] == "-":
            self.take()
            return -self.factor()
        value = self.base()
        if self.peek()[0] == "sym" and self.peek()[1] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "num":
                raise self.error("exponent must be a nonnegative integer", tok)
            value = value ** tok[1]
        return value

    def base(self):
        tok = self.take()
        kind, val, _ = tok
        if kind == "num":
            nxt = self.tokens[self.i + 1] if self.i + 1 < len(self.tokens) else None
            if self.peek()[:2] == ("sym", "/") and nxt[0] == "num":
                self.take()
                den = self.take()
                if den[1] == 0:
                    raise self.error("zero denominator", den)
                return Poly(self.ctx, (Fraction(val, den[1]),))
            return Poly(self.ctx, (val,))
        if kind == "ident":
            return self.ident(tok)
        if kind == "sym" and val == "(":
            value = self.expr()
            close = self.take()
            if close[0] != "sym" or close[1] != ")":
                raise self.error("expected ')'", close)
            return value
        if kind == "end":
            raise self.error("unexpected end of input", tok)
        raise self.error(f"unexpected {val!r}", tok)

    def ident(self, tok):
        name = tok[1]
        ctx = self.ctx
        if name == self.var:
            return Poly.gen(ctx)
        if isinstance(ctx, RatFunc) and name in EPS_NAMES:
            return Poly.const(ctx, ctx.gen)
        if isinstance(ctx, Extension) and name == ctx.var:
            return Poly.const(ctx, ctx.gen)
        raise WrongVariable(f"unknown variable {name!r} (expected {self.var!r})", self.offset(tok))


def parse_poly(text, ctx=QQ, var="t"):
    """Parse ``text`` into a :class:`Poly` over ``ctx``.

    >>> parse_poly("(t-1)^2").coeffs
    (Fraction(1, 1), Fraction(-2, 1), Fraction(1, 1))
    """
    return _Parser(text, ctx, var).parse()


def parse_field(spec):
    """``q`` | ``fp:<prime>`` | ``fp:<prime>/<monic poly in x>`` | ``q/<monic poly in x>``."""
    spec = spec.strip()
    base_spec, _, modulus = spec.partition("/")
    base_spec = base_spec.strip().lower()
    if base_spec in ("q", "qq"):
        base = QQ
    elif base_spec.startswith("fp:"):
        try:
            p = int(base_spec[3:])
        except ValueError:
            raise InvalidField(f"bad prime in field spec {spec!r}") from None
        base = PrimeField(p)
    else:
        raise InvalidField(f"unknown field spec {spec!r}")
    if not modulus:
        return base
    try:
        m = parse_poly(modulus, base, var="x")
    except PolySyntaxError as exc:
        raise InvalidField(f"bad modulus in field spec {spec!r}: {exc}") from None
    return Extension(base, m.coeffs)
