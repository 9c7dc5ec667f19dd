"""Text form of polynomials.

Grammar (whitespace insignificant, no implicit multiplication)::

    expression := ['+'|'-'] term (('+'|'-') term)*
    term       := factor ('*' factor)*
    factor     := base ('^' natural)?
    base       := rational | variable | '(' expression ')'
    rational   := integer ('/' positive-integer)?
    variable   := x | y | z   (up to three variables)  or  x1 .. xN
"""

from fractions import Fraction

from ..errors import ArityError, ParseError
from .core import MultiPoly

_LETTERS = "xyz"


def _tokenize(text):
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("int", text[i:j], i))
            i = j
        elif ch.isalpha():
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(("id", text[i:j], i))
            i = j
        elif ch in "+-*/^()":
            toks.append((ch, ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    toks.append(("end", "", n))
    return toks


class _Parser:
    def __init__(self, text, nvars):
        self.toks = _tokenize(text)
        self.k = 0
        self.nvars = nvars

    def peek(self):
        return self.toks[self.k]

    def take(self, kind=None):
        t = self.toks[self.k]
        if kind is not None and t[0] != kind:
            want = "integer" if kind == "int" else repr(kind)
            got = "end of input" if t[0] == "end" else repr(t[1])
            raise ParseError(f"expected {want}, found {got}", t[2])
        self.k += 1
        return t

    def expression(self):
        sign = 1
        if self.peek()[0] in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self):
        acc = self.factor()
        while self.peek()[0] == "*":
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self):
        base = self.base()
        if self.peek()[0] == "^":
            self.take()
            t = self.take("int")
            base = base ** int(t[1])
            if self.peek()[0] == "^":
                raise ParseError("chained exponent needs parentheses", self.peek()[2])
        return base

    def base(self):
        t = self.peek()
        if t[0] == "int":
            self.take()
            num = int(t[1])
            if self.peek()[0] == "/":
                self.take()
                d = self.take("int")
                den = int(d[1])
                if den == 0:
                    raise ParseError("zero denominator", d[2])
                return MultiPoly.const(self.nvars, Fraction(num, den))
            return MultiPoly.const(self.nvars, num)
        if t[0] == "id":
            self.take()
            return MultiPoly.var(self.nvars, self.variable(t))
        if t[0] == "(":
            self.take()
            inner = self.expression()
            self.take(")")
            return inner
        got = "end of input" if t[0] == "end" else repr(t[1])
        raise ParseError(f"expected a number, variable or '(', found {got}", t[2])

    def variable(self, t):
        name, pos = t[1], t[2]
        if len(name) == 1 and name in _LETTERS:
            idx = _LETTERS.index(name)
        elif name[0] == "x" and name[1:].isdigit() and not name[1:].startswith("0"):
            idx = int(name[1:]) - 1
        else:
            raise ParseError(f"unknown variable {name!r}", pos)
        if idx >= self.nvars:
            raise ArityError(f"variable {name!r} at position {pos} exceeds nvars={self.nvars}")
        return idx


def parse_poly(text: str, nvars: int) -> MultiPoly:
    if nvars < 1:
        raise ArityError("nvars must be positive")
    p = _Parser(text, nvars)
    if p.peek()[0] == "end":
        raise ParseError("empty expression", 0)
    out = p.expression()
    t = p.peek()
    if t[0] != "end":
        raise ParseError(f"unexpected {t[1]!r}", t[2])
    return out


def variable_names(nvars):
    if nvars <= 3:
        return list(_LETTERS[:nvars])
    return [f"x{i + 1}" for i in range(nvars)]


def _monomial(exps, names):
    parts = []
    for e, name in zip(exps, names):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(p: MultiPoly) -> str:
    if p.is_zero():
        return "0"
    names = variable_names(p.nvars)
    out = []
    for exps, c in p.sorted_terms():
        mono = _monomial(exps, names)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)
