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

import dataclasses
import functools

import numpy as np

from ..errors import DomainError


FUNCTIONS = {
    'sin': np.sin,
    'cos': np.cos,
    'exp': np.exp,
    'ln': np.log,
}

# Binding strength used when printing, atoms bind tightest
PRECEDENCE = {'+': 1, '-': 1, '*': 2, '/': 2}

NEGATE_PRECEDENCE = 3
POWER_PRECEDENCE = 4
ATOM_PRECEDENCE = 5


class Expression:
    """Base class of the expression tree nodes."""

    __slots__ = ()

    def __str__(self):
        return format_expression(self)


@dataclasses.dataclass(frozen=True)
class Number(Expression):
    value: float


@dataclasses.dataclass(frozen=True)
class Variable(Expression):
    name: str


@dataclasses.dataclass(frozen=True)
class BinaryOp(Expression):
    op: str
    left: Expression
    right: Expression


@dataclasses.dataclass(frozen=True)
class Power(Expression):
    base: Expression
    exponent: int


@dataclasses.dataclass(frozen=True)
class Call(Expression):
    function: str
    argument: Expression


@dataclasses.dataclass(frozen=True)
class Negate(Expression):
    operand: Expression


def variables(expr):
    """All variable names used by an expression."""

    if isinstance(expr, Variable):
        return {expr.name}

    if isinstance(expr, BinaryOp):
        return variables(expr.left) | variables(expr.right)

    if isinstance(expr, Power):
        return variables(expr.base)

    if isinstance(expr, Call):
        return variables(expr.argument)

    if isinstance(expr, Negate):
        return variables(expr.operand)

    return set()


# Evaluation works on floats and numpy arrays alike, domain violations carry the offending mask


def _violation(reason, mask):
    error = DomainError(reason)
    error.mask = mask

    return error


@functools.singledispatch
def evaluate(expr, env):
    raise TypeError(f'Can not evaluate {type(expr).__name__}.')


@evaluate.register
def _(expr: Number, env):
    return expr.value


@evaluate.register
def _(expr: Variable, env):
    return env[expr.name]


@evaluate.register
def _(expr: BinaryOp, env):
    left = evaluate(expr.left, env)
    right = evaluate(expr.right, env)

    if expr.op == '+':
        return left + right
    if expr.op == '-':
        return left - right
    if expr.op == '*':
        return left * right

    zero = np.equal(right, 0)

    if np.any(zero):
        raise _violation('Division by zero', zero)

    return np.divide(left, right)


@evaluate.register
def _(expr: Power, env):
    base = evaluate(expr.base, env)

    if expr.exponent == 0:
        return np.ones_like(base, dtype=float) if isinstance(base, np.ndarray) else 1.0

    return base**expr.exponent


@evaluate.register
def _(expr: Call, env):
    argument = evaluate(expr.argument, env)

    if expr.function == 'ln':
        invalid = np.less_equal(argument, 0)

        if np.any(invalid):
            raise _violation('Logarithm of a non-positive number', invalid)

    with np.errstate(over='ignore'):
        return FUNCTIONS[expr.function](argument)


@evaluate.register
def _(expr: Negate, env):
    return -evaluate(expr.operand, env)


# Printing, the output parses back to the same tree


def _precedence(expr):
    if isinstance(expr, BinaryOp):
        return PRECEDENCE[expr.op]

    if isinstance(expr, Negate) or isinstance(expr, Number) and expr.value < 0:
        return NEGATE_PRECEDENCE

    if isinstance(expr, Power):
        return POWER_PRECEDENCE

    return ATOM_PRECEDENCE


def format_number(value, digits=None):
    if digits is not None:
        value = float(f'{value:.{digits}g}')

    if value == 0:
        return '0'

    if float(value).is_integer() and abs(value) < 1e16:
        return str(int(value))

    return repr(float(value))


def format_expression(expr, digits=None):
    """
    Render an expression in the field grammar.

    Parameters
    ----------
    expr: Expression
        The tree to print.
    digits: Optional[int]
        Significant digits for number literals, the shortest exact form is used when omitted.

    Returns
    -------
    str
        Text which parses back to an equal tree (exactly so when digits is omitted).
    """

    def wrap(node, minimum):
        text = format_expression(node, digits)
        return f'({text})' if _precedence(node) < minimum else text

    def base(node):
        # Only atoms and negations may precede "^" or follow a unary minus
        text = format_expression(node, digits)
        return f'({text})' if isinstance(node, (BinaryOp, Power)) else text

    if isinstance(expr, Number):
        return format_number(expr.value, digits)

    if isinstance(expr, Variable):
        return expr.name

    if isinstance(expr, Call):
        return f'{expr.function}({format_expression(expr.argument, digits)})'

    if isinstance(expr, Negate):
        return '-' + base(expr.operand)

    if isinstance(expr, Power):
        return f'{base(expr.base)}^{expr.exponent}'

    precedence = PRECEDENCE[expr.op]

    # Operators are left associative, a right operand of equal strength needs parentheses
    left = wrap(expr.left, precedence)
    right = wrap(expr.right, precedence + 1)

    separator = f' {expr.op} ' if precedence == 1 else expr.op
    return left + separator + right
