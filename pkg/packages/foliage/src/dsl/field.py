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

import abc
import dataclasses

import numpy as np

from ..enums import SurfaceKind
from ..errors import DomainError
from .differentiate import ONE, add, differentiate, div, mul, power, sub
from .expression import Expression, Number, Variable, evaluate, format_expression
from .parser import parse_expression


VARIABLES = {
    SurfaceKind.sphere: ('x', 'y', 'z'),
    SurfaceKind.torus: ('cos_u', 'sin_u', 'cos_v', 'sin_v'),
}


def chart_environment(surface, p1, p2):
    """Ambient variable values at chart points, (z, theta) on the sphere and (u, v) on the torus."""

    if surface is SurfaceKind.sphere:
        radius = np.sqrt(np.clip(1 - p1 * p1, 0, None))
        return {'x': radius * np.cos(p2), 'y': radius * np.sin(p2), 'z': p1}

    return {'cos_u': np.cos(p1), 'sin_u': np.sin(p1), 'cos_v': np.cos(p2), 'sin_v': np.sin(p2)}


def chart_partials(expr, surface):
    """
    Differentiate an ambient expression with respect to the chart coordinates.

    On the sphere x = sqrt(1 - z^2) cos(theta) and y = sqrt(1 - z^2) sin(theta), hence
    d/dz = f_z - z (x f_x + y f_y) / (1 - z^2) and d/dtheta = x f_y - y f_x.
    On the torus d/du = cos_u f_sin_u - sin_u f_cos_u, likewise for v.
    """

    if surface is SurfaceKind.sphere:
        x, y, z = map(Variable, VARIABLES[surface])
        d_x, d_y, d_z = (differentiate(expr, name) for name in VARIABLES[surface])

        radial = add(mul(x, d_x), mul(y, d_y))
        d_first = sub(d_z, div(mul(z, radial), sub(ONE, power(z, 2))))
        d_second = sub(mul(x, d_y), mul(y, d_x))

        return d_first, d_second

    cos_u, sin_u, cos_v, sin_v = map(Variable, VARIABLES[surface])
    d_cos_u, d_sin_u, d_cos_v, d_sin_v = (differentiate(expr, name) for name in VARIABLES[surface])

    d_first = sub(mul(cos_u, d_sin_u), mul(sin_u, d_cos_u))
    d_second = sub(mul(cos_v, d_sin_v), mul(sin_v, d_cos_v))

    return d_first, d_second


class Field(abc.ABC):
    """A function f on a surface, defining the Poisson structure f times the reference bivector."""

    surface: SurfaceKind

    @abc.abstractmethod
    def values(self, p1, p2):
        """Field values at chart points, accepts scalars or broadcastable arrays."""

    @abc.abstractmethod
    def gradient(self, p1, p2):
        """Chart partials (d/dp1, d/dp2) at chart points away from the poles."""

    @abc.abstractmethod
    def describe(self):
        """JSON-friendly description of the field."""


def _evaluate_at(expr, surface, p1, p2):
    p1, p2 = np.broadcast_arrays(np.asarray(p1, dtype=float), np.asarray(p2, dtype=float))
    env = chart_environment(surface, p1, p2)

    try:
        with np.errstate(invalid='ignore', over='ignore'):
            result = evaluate(expr, env)
    except DomainError as error:
        mask = np.broadcast_to(getattr(error, 'mask', True), p1.shape)
        index = tuple(np.argwhere(mask)[0]) if p1.ndim else ()

        raise DomainError(error.reason, (float(p1[index]), float(p2[index]))) from None

    return np.array(np.broadcast_to(result, p1.shape), dtype=float)


@dataclasses.dataclass(frozen=True)
class ScalarField(Field):
    surface: SurfaceKind
    expression: Expression
    partials: tuple = dataclasses.field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'partials', chart_partials(self.expression, self.surface))

    def __str__(self):
        return self.text

    @property
    def text(self):
        return format_expression(self.expression)

    def values(self, p1, p2):
        return _evaluate_at(self.expression, self.surface, p1, p2)

    def gradient(self, p1, p2):
        d_first, d_second = self.partials
        return _evaluate_at(d_first, self.surface, p1, p2), _evaluate_at(d_second, self.surface, p1, p2)

    def describe(self):
        return {'surface': self.surface.value, 'field': self.text}


def parse_field(text, surface):
    surface = SurfaceKind(surface)
    expr = parse_expression(text, VARIABLES[surface], surface.value)

    return ScalarField(surface, expr)


def eval_chart(field, p):
    return float(field.values(*p))


def partials_chart(field, p):
    d_first, d_second = field.gradient(*p)
    return float(d_first), float(d_second)


def scale_field(field, factor):
    """The field factor * f, a rescaling of the Poisson structure."""

    return ScalarField(field.surface, mul(Number(float(factor)), field.expression))


def shift_field(field, amount):
    """The field f + amount, the deformation of the structure along the reference bivector."""

    if amount < 0:
        return ScalarField(field.surface, sub(field.expression, Number(-float(amount))))

    return ScalarField(field.surface, add(field.expression, Number(float(amount))))
