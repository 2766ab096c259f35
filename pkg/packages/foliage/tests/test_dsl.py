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

import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from src.dsl import (
    VARIABLES,
    BinaryOp,
    Call,
    Negate,
    Number,
    Power,
    Variable,
    eval_chart,
    format_expression,
    parse_expression,
    parse_field,
    partials_chart,
    scale_field,
    shift_field,
)
from src.enums import SurfaceKind
from src.errors import DomainError, NonIntegerExponent, ParseError, UnknownVariable


SPHERE_VARIABLES = VARIABLES[SurfaceKind.sphere]

expressions = st.recursive(
    st.one_of(
        st.floats(min_value=0, max_value=1e6, allow_nan=False).map(Number),
        st.sampled_from(SPHERE_VARIABLES).map(Variable),
    ),
    lambda children: st.one_of(
        st.builds(BinaryOp, st.sampled_from('+-*/'), children, children),
        st.builds(Power, children, st.integers(0, 4)),
        st.builds(Call, st.sampled_from(['sin', 'cos', 'exp', 'ln']), children),
        st.builds(Negate, children),
    ),
    max_leaves=12,
)

# Smooth everywhere on the sphere: divisors and logarithms stay away from zero, exponents stay bounded
smooth_expressions = st.recursive(
    st.one_of(
        st.floats(min_value=0, max_value=1).map(Number),
        st.sampled_from(SPHERE_VARIABLES).map(Variable),
    ),
    lambda children: st.one_of(
        st.builds(BinaryOp, st.sampled_from('+-*'), children, children),
        st.builds(Power, children, st.integers(0, 3)),
        st.builds(Call, st.sampled_from(['sin', 'cos']), children),
        children.map(lambda child: Call('exp', Call('sin', child))),
        children.map(lambda child: Call('ln', BinaryOp('+', Number(2.0), Call('cos', child)))),
        st.builds(lambda a, b: BinaryOp('/', a, BinaryOp('+', Number(2.0), Call('sin', b))), children, children),
        st.builds(Negate, children),
    ),
    max_leaves=8,
)


def test_precedence():
    assert parse_expression('1 + 2*z^2', SPHERE_VARIABLES) == BinaryOp(
        '+', Number(1.0), BinaryOp('*', Number(2.0), Power(Variable('z'), 2))
    )
    assert parse_expression('-z^2', SPHERE_VARIABLES) == Power(Negate(Variable('z')), 2)
    assert parse_expression('1 - z - x', SPHERE_VARIABLES) == BinaryOp(
        '-', BinaryOp('-', Number(1.0), Variable('z')), Variable('x')
    )


@given(expressions)
def test_printed_expressions_parse_back(expr):
    assert parse_expression(format_expression(expr), SPHERE_VARIABLES) == expr


def test_ambient_variables():
    field = parse_field('x + 2*y + 3*z', 'sphere')
    z, theta = 0.6, 1.1

    expected = 0.8 * math.cos(theta) + 1.6 * math.sin(theta) + 1.8
    assert eval_chart(field, (z, theta)) == pytest.approx(expected)

    torus = parse_field('cos_u*sin_v', 'torus')
    assert eval_chart(torus, (0.3, 0.4)) == pytest.approx(math.cos(0.3) * math.sin(0.4))


def test_chart_partials_of_x():
    field = parse_field('x', 'sphere')
    z, theta = 0.6, 1.1

    d_z, d_theta = partials_chart(field, (z, theta))

    assert d_z == pytest.approx(-z * math.cos(theta) / math.sqrt(1 - z * z))
    assert d_theta == pytest.approx(-math.sqrt(1 - z * z) * math.sin(theta))


@pytest.mark.parametrize(
    'text, surface',
    [
        ('x*y + z^3', 'sphere'),
        ('exp(x)*sin(y) - z/(2 + x)', 'sphere'),
        ('(y*sin(0.7) + z*cos(0.7))^2 + x/2 - 0.3', 'sphere'),
        ('cos_u*cos_v + 0.5*sin_u^2', 'torus'),
        ('ln(2 + sin_v) - cos_u', 'torus'),
    ],
)
@given(p1=st.floats(-0.9, 0.9), p2=st.floats(0, 2 * math.pi))
def test_chart_partials_match_finite_differences(text, surface, p1, p2):
    field = parse_field(text, surface)
    step = 1e-6

    d_first, d_second = partials_chart(field, (p1, p2))

    first = (eval_chart(field, (p1 + step, p2)) - eval_chart(field, (p1 - step, p2))) / (2 * step)
    second = (eval_chart(field, (p1, p2 + step)) - eval_chart(field, (p1, p2 - step))) / (2 * step)

    assert d_first == pytest.approx(first, rel=1e-5, abs=1e-6)
    assert d_second == pytest.approx(second, rel=1e-5, abs=1e-6)


@settings(max_examples=200)
@given(
    smooth_expressions,
    st.lists(st.tuples(st.floats(-0.9, 0.9), st.floats(0, 2 * math.pi)), min_size=5, max_size=5),
)
def test_random_fields_match_finite_differences(expr, points):
    field = parse_field(format_expression(expr), 'sphere')
    p1, p2 = np.array(points).T

    def difference(step):
        first = (field.values(p1 + step, p2) - field.values(p1 - step, p2)) / (2 * step)
        second = (field.values(p1, p2 + step) - field.values(p1, p2 - step)) / (2 * step)
        return np.concatenate([first, second])

    coarse, fine = difference(1e-5), difference(5e-6)
    scale = 1 + np.abs(field.values(p1, p2))

    # Too steep for a difference quotient at this step
    assume(np.all(np.abs(coarse - fine) <= 1e-7 * np.tile(scale, 2)))

    partials = np.concatenate(field.gradient(p1, p2))
    assert np.all(np.abs(partials - fine) <= 1e-6 * np.tile(scale, 2))


@given(smooth_expressions, st.lists(st.floats(0, 2 * math.pi), min_size=2, max_size=8))
def test_poles_have_one_value(expr, angles):
    field = parse_field(format_expression(expr), 'sphere')

    for pole in (-1.0, 1.0):
        values = field.values(pole, np.array(angles))
        assert np.all((values == values[0]) | np.isnan(values))


@pytest.mark.parametrize(
    'text', ['x*y + z^3', 'exp(x)*sin(y) - z/(2 + x)', '(y*sin(0.7) + z*cos(0.7))^2 + x/2 - 0.3', 'x + 2*y + 3*z']
)
@given(first=st.floats(0, 2 * math.pi), second=st.floats(0, 2 * math.pi))
def test_values_converge_at_poles(text, first, second):
    field = parse_field(text, 'sphere')

    for z in (1 - 1e-10, -1 + 1e-10):
        assert eval_chart(field, (z, first)) == pytest.approx(eval_chart(field, (z, second)), abs=1e-4)


def test_values_broadcast_over_arrays():
    field = parse_field('z^2 - 0.25', 'sphere')
    z = np.linspace(-1, 1, 5)

    assert np.allclose(field.values(z, 0.0), z**2 - 0.25)


def test_parse_error_position():
    with pytest.raises(ParseError) as info:
        parse_field('z +', 'sphere')

    assert info.value.position == 3
    assert 'number' in info.value.expected
    assert info.value.stage == 'parse'


def test_unbalanced_parenthesis():
    with pytest.raises(ParseError) as info:
        parse_field('(z - 1', 'sphere')

    assert info.value.expected == ('")"',)


def test_unknown_variable():
    with pytest.raises(UnknownVariable) as info:
        parse_field('cos_u + z', 'sphere')

    assert info.value.name == 'cos_u'

    with pytest.raises(UnknownVariable):
        parse_field('z', 'torus')


@pytest.mark.parametrize('text', ['z^0.5', 'z^-1', 'z^x'])
def test_exponent_must_be_integer(text):
    with pytest.raises(NonIntegerExponent):
        parse_field(text, 'sphere')


def test_domain_errors_carry_location():
    with pytest.raises(DomainError) as info:
        parse_field('ln(z)', 'sphere').values(np.array([0.5, -0.5]), np.array([0.0, 1.0]))

    assert info.value.location == (-0.5, 1.0)

    with pytest.raises(DomainError):
        eval_chart(parse_field('1/z', 'sphere'), (0.0, 0.0))


def test_scale_and_shift():
    field = parse_field('z - 0.5', 'sphere')

    assert eval_chart(scale_field(field, 2), (0.0, 0.0)) == pytest.approx(-1.0)
    assert eval_chart(shift_field(field, -0.1), (0.0, 0.0)) == pytest.approx(-0.6)
    assert shift_field(field, 0.25).text == 'z - 0.5 + 0.25'
