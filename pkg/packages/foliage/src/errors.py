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


class FoliageError(Exception):
    """Base class for all errors raised while computing or comparing invariants."""

    stage = 'internal'

    @property
    def kind(self):
        return type(self).__name__


# Field DSL


class ParseError(FoliageError):
    stage = 'parse'

    def __init__(self, text, position, expected):
        self.text = text
        self.position = position
        self.expected = tuple(expected)

        found = text[position : position + 1] or 'end of input'
        super().__init__(f'Expected {" or ".join(self.expected)} at position {position}, found "{found}".')


class UnknownVariable(FoliageError):
    stage = 'parse'

    def __init__(self, name, surface):
        self.name = name
        self.surface = surface

        super().__init__(f'Unknown variable "{name}" for a {surface} field.')


class NonIntegerExponent(FoliageError):
    stage = 'parse'

    def __init__(self, exponent, position):
        self.exponent = exponent
        self.position = position

        super().__init__(f'Exponent "{exponent}" at position {position} must be a non-negative integer.')


class DomainError(FoliageError):
    stage = 'sample'

    def __init__(self, reason, location=None):
        self.reason = reason
        self.location = location

        where = '' if location is None else f' at chart point ({location[0]:.6g}, {location[1]:.6g})'
        super().__init__(f'{reason}{where}.')


class ShapeMismatch(FoliageError):
    stage = 'sample'

    def __init__(self, expected, actual):
        self.expected = tuple(expected)
        self.actual = tuple(actual)

        super().__init__(f'Array of shape {self.actual} does not match grid shape {self.expected}.')


# Zero set


class NonRegularZero(FoliageError):
    stage = 'zero-set'

    def __init__(self, gradient, g_tol, location=None):
        self.gradient = gradient
        self.g_tol = g_tol
        self.location = location

        super().__init__(
            f'Zero is not a regular value: |grad f| = {gradient:.3g} on the zero set is below g_tol = {g_tol:.3g}.'
        )


class PoleContact(FoliageError):
    stage = 'zero-set'

    def __init__(self, pole):
        self.pole = pole

        super().__init__(f'A zero curve enters the polar cell rows near z = {pole:+d}, rotate the field away from it.')


class AmbiguousTopology(FoliageError):
    stage = 'zero-set'

    def __init__(self, reason):
        self.reason = reason
        super().__init__(reason)


class CollarTooThin(FoliageError):
    stage = 'collar'

    def __init__(self, curve, halfwidth, required):
        self.curve = curve
        self.halfwidth = halfwidth
        self.required = required

        super().__init__(
            f'Collar of curve {curve} is {halfwidth:.3g} wide in f but at least {required:.3g} is needed, '
            f'increase the grid resolution.'
        )


class NonConvergent(FoliageError):
    stage = 'volume'

    def __init__(self, reason, sequence=()):
        self.reason = reason
        self.sequence = tuple(sequence)

        super().__init__(reason)


# Topology


class SignInconsistent(FoliageError):
    stage = 'topology'

    def __init__(self, curve):
        self.curve = curve
        super().__init__(f'The two sides of curve {curve} do not resolve to a single pair of regions.')


class TreeViolation(FoliageError):
    stage = 'topology'

    def __init__(self, vertices, edges):
        self.vertices = vertices
        self.edges = edges

        super().__init__(f'Region graph on the sphere is not a tree ({vertices} vertices, {edges} edges).')


class NonInteger(FoliageError):
    stage = 'topology'

    def __init__(self, curve, displacement):
        self.curve = curve
        self.displacement = tuple(displacement)

        winding = ', '.join(f'{x:.6g}' for x in self.displacement)
        super().__init__(f'Curve {curve} winds ({winding}) times around the torus, which is not an integer pair.')


class HomologyImbalance(FoliageError):
    stage = 'topology'

    def __init__(self, total):
        self.total = tuple(total)
        super().__init__(f'Winding pairs of the zero curves sum to {self.total} instead of (0, 0).')


# Classification and deformations


class SurfaceMismatch(FoliageError):
    stage = 'classify'

    def __init__(self, a, b):
        self.a = a
        self.b = b

        super().__init__(f'Can not compare a {a} structure with a {b} structure.')


class TorusUnsupported(FoliageError):
    stage = 'classify'

    def __init__(self, operation):
        self.operation = operation
        super().__init__(f'{operation} is only available for structures on the sphere.')


class TopologyChanged(FoliageError):
    stage = 'deform'

    def __init__(self, before, after, epsilon):
        self.before = before
        self.after = after
        self.epsilon = epsilon

        super().__init__(f'Deformation by epsilon = {epsilon:.6g} changes the curve count from {before} to {after}.')


class InvalidProblem(FoliageError):
    stage = 'input'

    def __init__(self, reason):
        self.reason = reason
        super().__init__(reason)
