"""Text grammar for polynomials with Gaussian-rational coefficients.

Whitespace is ignored.  Terms combine rational or complex literals (``3``,
``-7/2``, ``2i``, ``(1+2i)``), variables ``z1, z2, ...``, integer powers with
``^`` (or ``**``), explicit ``*`` or juxtaposition, ``+``/``-`` and
parentheses.  Division is only allowed by a nonzero rational constant.
:meth:`MPoly.to_text` produces text in this grammar.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .algebra import CQ, MPoly

__all__ = ["MAX_EXPONENT", "PolyParseError", "parse_poly", "read_poly_arg", "serialize"]

MAX_EXPONENT = 1000

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<var>z(?P<idx>\d+))|(?P<i>i)|(?P<op>\*\*|[-+*/^()]))")


class PolyParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass
class _Tok:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    text = text.replace("−", "-").replace("·", "*")
    toks: list[_Tok] = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise PolyParseError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastgroup if m.lastgroup != "idx" else "var")
        if m.group("num") is not None:
            toks.append(_Tok("num", m.group("num"), start))
        elif m.group("var") is not None:
            if int(m.group("idx")) < 1:
                raise PolyParseError("variables are numbered from z1", start)
            toks.append(_Tok("var", m.group("idx"), start))
        elif m.group("i") is not None:
            toks.append(_Tok("i", "i", start))
        else:
            op = m.group("op")
            toks.append(_Tok("op", "^" if op == "**" else op, start))
        pos = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


class _Parser:
    """Recursive descent; polynomials are built as ``{exponent tuple: CQ}`` dicts
    over a variable count fixed after a first scan."""

    def __init__(self, toks: list[_Tok], nvars: int):
        self.toks = toks
        self.k = 0
        self.n = nvars

    def peek(self) -> _Tok:
        return self.toks[self.k]

    def take(self) -> _Tok:
        t = self.toks[self.k]
        self.k += 1
        return t

    def expect(self, kind: str, text: str | None = None) -> _Tok:
        t = self.peek()
        if t.kind != kind or (text is not None and t.text != text):
            want = text or kind
            got = t.text or "end of input"
            raise PolyParseError(f"expected {want!r}, found {got!r}", t.pos)
        return self.take()

    def parse(self) -> MPoly:
        if self.peek().kind == "end":
            raise PolyParseError("empty expression", 0)
        p = self.expr()
        t = self.peek()
        if t.kind != "end":
            raise PolyParseError(f"unexpected {t.text!r}", t.pos)
        return p

    def expr(self) -> MPoly:
        t = self.peek()
        sign = 1
        if t.kind == "op" and t.text in "+-":
            self.take()
            sign = -1 if t.text == "-" else 1
        p = self.term()
        if sign < 0:
            p = -p
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.take().text
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def _starts_base(self, t: _Tok) -> bool:
        return t.kind in ("num", "var", "i") or (t.kind == "op" and t.text == "(")

    def term(self) -> MPoly:
        p = self.factor()
        while True:
            t = self.peek()
            if t.kind == "op" and t.text == "*":
                self.take()
                p = p * self.factor()
            elif t.kind == "op" and t.text == "/":
                self.take()
                q = self.factor()
                if not q.is_constant() or not q.constant_term().is_real() or not q:
                    raise PolyParseError("division is only allowed by a nonzero rational constant", t.pos)
                p = p.scale(1 / q.constant_term())
            elif self._starts_base(t):
                p = p * self.factor()
            else:
                return p

    def factor(self) -> MPoly:
        t = self.peek()
        if t.kind == "op" and t.text in "+-":
            self.take()
            f = self.factor()
            return -f if t.text == "-" else f
        b = self.base()
        if self.peek().kind == "op" and self.peek().text == "^":
            self.take()
            et = self.peek()
            if et.kind == "op" and et.text == "-":
                raise PolyParseError("negative exponents are not polynomials", et.pos)
            et = self.expect("num")
            k = int(et.text)
            if k > MAX_EXPONENT:
                raise PolyParseError(f"exponent {k} exceeds the limit {MAX_EXPONENT}", et.pos)
            if self.peek().kind == "op" and self.peek().text == "^":
                raise PolyParseError("chained exponents need parentheses", self.peek().pos)
            b = b**k
        return b

    def base(self) -> MPoly:
        t = self.take()
        if t.kind == "num":
            return MPoly.const(int(t.text), self.n)
        if t.kind == "i":
            return MPoly.const(CQ(0, 1), self.n)
        if t.kind == "var":
            return MPoly.var(int(t.text) - 1, self.n)
        if t.kind == "op" and t.text == "(":
            p = self.expr()
            self.expect("op", ")")
            return p
        got = t.text or "end of input"
        raise PolyParseError(f"unexpected {got!r}", t.pos)


def parse_poly(text: str, nvars: int | None = None) -> MPoly:
    """Parse ``text``; the variable count is the highest index used unless ``nvars`` is given."""
    toks = _tokenize(text)
    top = max((int(t.text) for t in toks if t.kind == "var"), default=0)
    if nvars is None:
        nvars = max(1, top)
    elif top > nvars:
        pos = next(t.pos for t in toks if t.kind == "var" and int(t.text) > nvars)
        raise PolyParseError(f"variable z{top} exceeds the declared {nvars} variables", pos)
    return _Parser(toks, nvars).parse()


def serialize(f: MPoly) -> str:
    return f.to_text()


def read_poly_arg(arg: str, nvars: int | None = None) -> MPoly:
    """Parse a command-line polynomial, reading ``@path`` arguments from a file."""
    if arg.startswith("@"):
        arg = Path(arg[1:]).read_text()
    return parse_poly(arg, nvars)


def parse_rationals(text: str) -> tuple[Fraction, ...]:
    """Comma-separated rationals such as ``1,-2,3/4``."""
    try:
        return tuple(Fraction(s.strip()) for s in text.split(",") if s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a list of rationals: {text!r}") from exc
