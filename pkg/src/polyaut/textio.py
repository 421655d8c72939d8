"""Text format for polynomials and polynomial maps.

Grammar::

    poly     := ['-'] term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := base ['^' nat]
    base     := rational | var | '(' poly ')'
    rational := nat ['/' nat]
    var      := 'x' | 'y' | 'z'
    map      := '(' poly (';' poly)* ')'        -- 2 or 3 components

Whitespace is ignored. Juxtaposition (``2x``) is rejected.
"""

import re
from fractions import Fraction

from .errors import ArityError, ParseDiagnostic, ParseError  # noqa: F401
from .polycore import VARS, Polynomial

_TOKEN = re.compile(r"\s*(?:(\d+)|([xyz])|([-+*^/();])|(\S))")


def _tokenize(text):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        if m.group(1) is not None:
            tokens.append(("num", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("var", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            tokens.append((m.group(3), m.group(3), m.start(3)))
        elif m.group(4) is not None:
            raise ParseError(m.start(4), f"unexpected character {m.group(4)!r}", text)
        else:
            break
        pos = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def advance(self):
        t = self.tokens[self.i]
        self.i += 1
        return t

    def error(self, message, tok=None):
        tok = tok or self.tok
        raise ParseError(tok[2], message, self.text)

    def expect(self, kind):
        if self.tok[0] != kind:
            found = self.tok[1] or "end of input"
            self.error(f"expected {kind!r}, found {found!r}")
        return self.advance()

    def finish(self):
        if self.tok[0] != "eof":
            self.error(f"unexpected {self.tok[1]!r}")

    def poly(self):
        negate = False
        if self.tok[0] == "-":
            self.advance()
            negate = True
        acc = self.term()
        if negate:
            acc = -acc
        while self.tok[0] in ("+", "-"):
            op = self.advance()[0]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self):
        acc = self.factor()
        while self.tok[0] == "*":
            self.advance()
            acc = acc * self.factor()
        return acc

    def factor(self):
        base = self.base()
        if self.tok[0] == "^":
            self.advance()
            return base ** int(self.expect("num")[1])
        return base

    def base(self):
        kind = self.tok[0]
        if kind == "num":
            num = int(self.advance()[1])
            if self.tok[0] == "/":
                self.advance()
                den_tok = self.expect("num")
                den = int(den_tok[1])
                if den == 0:
                    self.error("zero denominator", den_tok)
                return Polynomial.constant(Fraction(num, den))
            return Polynomial.constant(num)
        if kind == "var":
            return Polynomial.var(self.advance()[1])
        if kind == "(":
            self.advance()
            inner = self.poly()
            self.expect(")")
            return inner
        found = self.tok[1] or "end of input"
        self.error(f"expected a number, variable or '(', found {found!r}")

    def components(self):
        self.expect("(")
        comps = [self.poly()]
        while self.tok[0] == ";":
            self.advance()
            comps.append(self.poly())
        self.expect(")")
        self.finish()
        return comps


def parse_poly(src):
    parser = _Parser(src)
    result = parser.poly()
    parser.finish()
    return result


def parse_components(src):
    """Parse ``(p1; p2; ...)`` into a list of polynomials, any length >= 1."""
    return _Parser(src).components()


def parse_map(src):
    from .autcore import PolyMap

    comps = parse_components(src)
    if len(comps) not in (2, 3):
        raise ArityError(f"a map needs 2 or 3 components, got {len(comps)}")
    return PolyMap(comps)


def _format_rational(c):
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _format_monomial(mon):
    parts = []
    for name, e in zip(VARS, mon):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def print_canonical(p):
    if p.is_zero():
        return "0"
    out = []
    for k, (mon, c) in enumerate(p.items()):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = _format_monomial(mon)
        if not body:
            text = _format_rational(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{_format_rational(mag)}*{body}"
        if k == 0:
            out.append(("-" if sign == "-" else "") + text)
        else:
            out.append(f" {sign} {text}")
    return "".join(out)


def print_map(F):
    return "(" + "; ".join(print_canonical(c) for c in F.components) + ")"
