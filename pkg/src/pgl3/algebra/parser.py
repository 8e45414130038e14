# src/pgl3/algebra/parser.py
import re
from typing import List, Tuple

from pgl3.algebra.ratfunc import RatFunc, format_expr
from pgl3.core.exceptions import ParseError


TOKEN = re.compile(
    r"\s*(?:(?P<number>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_:@.]*)|(?P<op>[-+*/^()]))"
)


def tokenize(text: str) -> List[Tuple[str, str]]:
    tokens: List[Tuple[str, str]] = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        match = TOKEN.match(text, pos)
        if not match or match.end() == pos:
            raise ParseError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        kind = match.lastgroup
        tokens.append((kind, match.group(kind)))
        pos = match.end()
    return tokens


class _Parser:
    """Recursive descent over ``expr := term (('+'|'-') term)*``."""

    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0

    def peek(self) -> Tuple[str, str]:
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        return ("end", "")

    def take(self, value: str = None) -> Tuple[str, str]:
        token = self.peek()
        if value is not None and token[1] != value:
            raise ParseError(f"expected {value!r} in {self.text!r}, got {token[1]!r}")
        if token[0] == "end":
            raise ParseError(f"unexpected end of {self.text!r}")
        self.pos += 1
        return token

    def parse(self) -> RatFunc:
        result = self.expr()
        if self.peek()[0] != "end":
            raise ParseError(f"trailing input {self.peek()[1]!r} in {self.text!r}")
        return result

    def expr(self) -> RatFunc:
        result = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> RatFunc:
        result = self.unary()
        while self.peek()[1] in ("*", "/"):
            op = self.take()[1]
            rhs = self.unary()
            if op == "*":
                result = result * rhs
            else:
                if rhs.is_zero():
                    raise ParseError(f"division by zero in {self.text!r}")
                result = result / rhs
        return result

    def unary(self) -> RatFunc:
        if self.peek()[1] == "-":
            self.take()
            return -self.unary()
        if self.peek()[1] == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> RatFunc:
        base = self.atom()
        if self.peek()[1] != "^":
            return base
        self.take()
        sign = 1
        if self.peek()[1] == "-":
            self.take()
            sign = -1
        kind, value = self.take()
        if kind != "number":
            raise ParseError(f"exponent must be an integer in {self.text!r}")
        exponent = sign * int(value)
        if exponent < 0 and base.is_zero():
            raise ParseError(f"negative power of zero in {self.text!r}")
        return base**exponent

    def atom(self) -> RatFunc:
        kind, value = self.take()
        if kind == "number":
            return RatFunc.const(int(value))
        if kind == "name":
            return RatFunc.var(value)
        if value == "(":
            inner = self.expr()
            self.take(")")
            return inner
        raise ParseError(f"unexpected {value!r} in {self.text!r}")


def parse_expr(text: str) -> RatFunc:
    if not text or not text.strip():
        raise ParseError("empty expression")
    return _Parser(text).parse()


__all__ = ["parse_expr", "format_expr", "tokenize"]
