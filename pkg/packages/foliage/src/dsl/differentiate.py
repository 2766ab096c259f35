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

import functools

from .expression import BinaryOp, Call, Negate, Number, Power, Variable


ZERO = Number(0.0)
ONE = Number(1.0)


def _is(expr, value):
    return isinstance(expr, Number) and expr.value == value


# Constructors folding constants and neutral elements, keeps derivative trees small


def add(left, right):
    if isinstance(left, Number) and isinstance(right, Number):
        return Number(left.value + right.value)

    if _is(left, 0):
        return right

    if _is(right, 0):
        return left

    return BinaryOp('+', left, right)


def sub(left, right):
    if isinstance(left, Number) and isinstance(right, Number):
        return Number(left.value - right.value)

    if _is(right, 0):
        return left

    if _is(left, 0):
        return neg(right)

    return BinaryOp('-', left, right)


def mul(left, right):
    if _is(left, 0) or _is(right, 0):
        return ZERO

    if isinstance(left, Number) and isinstance(right, Number):
        return Number(left.value * right.value)

    if _is(left, 1):
        return right

    if _is(right, 1):
        return left

    if _is(left, -1):
        return neg(right)

    if _is(right, -1):
        return neg(left)

    return BinaryOp('*', left, right)


def div(left, right):
    if _is(right, 1):
        return left

    if _is(left, 0) and not _is(right, 0):
        return ZERO

    if isinstance(left, Number) and isinstance(right, Number) and right.value != 0:
        return Number(left.value / right.value)

    return BinaryOp('/', left, right)


def power(base, exponent):
    if exponent == 0:
        return ONE

    if exponent == 1:
        return base

    if isinstance(base, Number):
        return Number(base.value**exponent)

    return Power(base, exponent)


def neg(operand):
    if isinstance(operand, Number):
        return Number(-operand.value)

    if isinstance(operand, Negate):
        return operand.operand

    return Negate(operand)


@functools.singledispatch
def differentiate(expr, var):
    raise TypeError(f'Can not differentiate {type(expr).__name__}.')


@differentiate.register
def _(expr: Number, var):
    return ZERO


@differentiate.register
def _(expr: Variable, var):
    return ONE if expr.name == var else ZERO


@differentiate.register
def _(expr: BinaryOp, var):
    left, right = expr.left, expr.right

    d_left = differentiate(left, var)
    d_right = differentiate(right, var)

    if expr.op == '+':
        return add(d_left, d_right)

    if expr.op == '-':
        return sub(d_left, d_right)

    if expr.op == '*':
        return add(mul(d_left, right), mul(left, d_right))

    # Quotient rule
    numerator = sub(mul(d_left, right), mul(left, d_right))
    return div(numerator, power(right, 2))


@differentiate.register
def _(expr: Power, var):
    if expr.exponent == 0:
        return ZERO

    inner = differentiate(expr.base, var)
    outer = mul(Number(float(expr.exponent)), power(expr.base, expr.exponent - 1))

    return mul(outer, inner)


@differentiate.register
def _(expr: Call, var):
    argument = expr.argument
    inner = differentiate(argument, var)

    if _is(inner, 0):
        return ZERO

    if expr.function == 'sin':
        return mul(Call('cos', argument), inner)

    if expr.function == 'cos':
        return neg(mul(Call('sin', argument), inner))

    if expr.function == 'exp':
        return mul(expr, inner)

    return div(inner, argument)


@differentiate.register
def _(expr: Negate, var):
    return neg(differentiate(expr.operand, var))
