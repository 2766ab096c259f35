# -*- coding: utf-8 -*-

"""
Foliage: Poisson Structure Classifier
Copyright (C) 2021 Foliage Developers

This program is free software: you can redistribute it and/or modify
it under the terms of the GNU Affero General Public License as published by
the Free Software Foundation, either version 3 of the License, or
(at your option) any later version.

This program is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU Affero General Public License for more details.

You should have received a copy of the GNU Affero General Public License
along with this program.  If not, see <https://www.gnu.org/licenses/>.
"""

import re

from ..errors import NonIntegerExponent, ParseError, UnknownVariable
from .expression import FUNCTIONS, BinaryOp, Call, Negate, Number, Power, Variable


TOKEN_RE = re.compile(
    r'\s*(?:'
    r'(?P<number>(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)|'
    r'(?P<name>[A-Za-z_][A-Za-z_0-9]*)|'
    r'(?P<op>[-+*/^()])'
    r')'
)

BASE_START = ('number', 'variable', 'function', '"("', '"-"')


class Token:
    __slots__ = ('kind', 'text', 'position')

    def __init__(self, kind, text, position):
        self.kind = kind
        self.text = text
        self.position = position

    def __repr__(self):
        return f'<Token kind={self.kind} text="{self.text}" position={self.position}>'


def tokenize(text):
    tokens = []
    position = 0

    while True:
        # Skip trailing whitespace before checking for the end
        while position < len(text) and text[position].isspace():
            position += 1

        if position >= len(text):
            break

        match = TOKEN_RE.match(text, position)

        if match is None or match.lastgroup is None:
            raise ParseError(text, position, BASE_START + ('operator',))

        kind = match.lastgroup
        tokens.append(Token(kind, match.group(kind), match.start(kind)))

        position = match.end()

    tokens.append(Token('end', '', len(text)))
    return tokens


class Parser:
    """
    Recursive descent parser for the field grammar.

        expr   := term (("+"|"-") term)*
        term   := factor (("*"|"/") factor)*
        factor := base ("^" integer)?
        base   := number | variable | function "(" expr ")" | "(" expr ")" | "-" base
    """

    def __init__(self, text, variables, surface):
        self.text = text
        self.surface = surface
        self.variables = frozenset(variables)

        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self):
        return self.tokens[self.index]

    def advance(self):
        token = self.current
        self.index += 1

        return token

    def accept(self, *ops):
        token = self.current

        if token.kind == 'op' and token.text in ops:
            self.index += 1
            return token

    def expect(self, op):
        if self.accept(op) is None:
            raise ParseError(self.text, self.current.position, (f'"{op}"',))

    def parse(self):
        if self.current.kind == 'end':
            raise ParseError(self.text, 0, ('expression',))

        expr = self.expr()

        if self.current.kind != 'end':
            raise ParseError(self.text, self.current.position, ('operator', 'end of input'))

        return expr

    def expr(self):
        node = self.term()

        while True:
            token = self.accept('+', '-')

            if token is None:
                return node

            node = BinaryOp(token.text, node, self.term())

    def term(self):
        node = self.factor()

        while True:
            token = self.accept('*', '/')

            if token is None:
                return node

            node = BinaryOp(token.text, node, self.factor())

    def factor(self):
        node = self.base()

        if self.accept('^') is None:
            return node

        token = self.current

        if token.kind == 'end':
            raise ParseError(self.text, token.position, ('integer',))

        if token.kind != 'number' or not token.text.isdigit():
            raise NonIntegerExponent(token.text, token.position)

        self.advance()
        return Power(node, int(token.text))

    def base(self):
        token = self.current

        if token.kind == 'number':
            self.advance()
            return Number(float(token.text))

        if token.kind == 'name':
            self.advance()

            if token.text in FUNCTIONS:
                self.expect('(')
                argument = self.expr()
                self.expect(')')

                return Call(token.text, argument)

            if token.text not in self.variables:
                raise UnknownVariable(token.text, self.surface)

            return Variable(token.text)

        if self.accept('('):
            node = self.expr()
            self.expect(')')

            return node

        if self.accept('-'):
            return Negate(self.base())

        raise ParseError(self.text, token.position, BASE_START)


def parse_expression(text, variables, surface='field'):
    return Parser(text, variables, surface).parse()
