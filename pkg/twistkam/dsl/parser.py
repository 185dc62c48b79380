# Copyright (C) 2024-2026 The twistkam authors
#
# Permission is hereby granted, free of charge, to any person obtaining a copy of this software and associated
# documentation files (the "Software"), to deal in the Software without restriction, including without limitation the
# rights to use, copy, modify, merge, publish, distribute, sublicense, and/or sell copies of the Software, and to
# permit persons to whom the Software is furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all copies or substantial portions of the
# Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE
# WARRANTIES OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR
# COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR
# OTHERWISE, ARISING FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE SOFTWARE.

import math
import re
from dataclasses import dataclass

from ..errors import ParseError
from .evaluate import evaluate
from .nodes import Binary, Call, Neg, Number, Pi, Power, Symbol, free_symbols

# expression -> term (("+" | "-") term)*
# term       -> unary (("*" | "/") unary)*
# unary      -> "-" unary | power
# power      -> primary ("^" INTEGER)*
# primary    -> NUMBER | "x" | "y" | "pi" | ("sin" | "cos") "(" expression ")" | "(" expression ")"

_TOKENS = re.compile(
    r"\s*(?:(?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*/^()]))"
)

FUNCTIONS = ("sin", "cos")
SYMBOLS = ("x", "y")
_PRIMARY_START = ("number", "x", "y", "pi", "sin", "cos", "(")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    offset: int


def tokenize(src):
    tokens = []
    pos = 0
    while pos < len(src):
        if src[pos:].strip() == "":
            break
        match = _TOKENS.match(src, pos)
        if match is None:
            offset = len(src) - len(src[pos:].lstrip())
            raise ParseError("unexpected character {!r}".format(src[offset]), offset, _PRIMARY_START)

        if match.group("number") is not None:
            tokens.append(Token("number", match.group("number"), match.start("number")))
        elif match.group("name") is not None:
            name = match.group("name")
            if name not in SYMBOLS + FUNCTIONS + ("pi",):
                raise ParseError("unknown name {!r}".format(name), match.start("name"), SYMBOLS + FUNCTIONS + ("pi",))
            tokens.append(Token(name, name, match.start("name")))
        else:
            tokens.append(Token(match.group("op"), match.group("op"), match.start("op")))
        pos = match.end()

    tokens.append(Token("end", "", len(src)))
    return tokens


class Parser:
    """Recursive descent over the token list, one method per grammar rule."""

    def __init__(self, src):
        self.src = src
        self.tokens = tokenize(src)
        self.current = 0

    def next(self):
        return self.tokens[self.current]

    def advance(self):
        token = self.tokens[self.current]
        self.current += 1
        return token

    def check(self, kinds):
        return self.next().kind in kinds

    def expect(self, kind, expected=None):
        if not self.check((kind,)):
            self.fail(expected or (kind,))
        return self.advance()

    def fail(self, expected):
        token = self.next()
        found = "end of input" if token.kind == "end" else repr(token.text)
        raise ParseError("unexpected {}".format(found), token.offset, expected)

    def parse(self):
        node = self.expression()
        if not self.check(("end",)):
            self.fail(("+", "-", "*", "/", "^", "end"))
        return node

    def expression(self):
        node = self.term()
        while self.check(("+", "-")):
            op = self.advance().kind
            node = Binary(op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.check(("*", "/")):
            op = self.advance().kind
            offset = self.next().offset
            right = self.unary()
            if op == "/":
                self.require_divisor(right, offset)
            node = Binary(op, node, right)
        return node

    def unary(self):
        if self.check(("-",)):
            self.advance()
            return Neg(self.unary())
        return self.power()

    def power(self):
        node = self.primary()
        while self.check(("^",)):
            self.advance()
            token = self.next()
            if token.kind != "number" or not token.text.isdigit():
                raise ParseError("exponent must be a non-negative integer literal", token.offset, ("integer",))
            self.advance()
            node = Power(node, int(token.text))
        return node

    def primary(self):
        token = self.next()
        if token.kind == "number":
            self.advance()
            value = float(token.text)
            if not math.isfinite(value):
                raise ParseError("literal {} is not finite".format(token.text), token.offset)
            return Number(value)
        elif token.kind in SYMBOLS:
            self.advance()
            return Symbol(token.kind)
        elif token.kind == "pi":
            self.advance()
            return Pi()
        elif token.kind in FUNCTIONS:
            self.advance()
            self.expect("(")
            arg = self.expression()
            self.expect(")", (")", "+", "-", "*", "/", "^"))
            return Call(token.kind, arg)
        elif token.kind == "(":
            self.advance()
            node = self.expression()
            self.expect(")", (")", "+", "-", "*", "/", "^"))
            return node
        self.fail(_PRIMARY_START)

    @staticmethod
    def require_divisor(node, offset):
        # Division only by constants that do not vanish
        if free_symbols(node):
            raise ParseError("divisor must not depend on x or y", offset, ("constant",))
        value = float(evaluate(node, 0.0, 0.0))
        if value == 0.0 or not math.isfinite(value):
            raise ParseError("division by a constant equal to {}".format(value), offset, ("nonzero constant",))


def parse(src):
    """Parse a perturbation expression in x and y into its syntax tree."""
    return Parser(src).parse()
