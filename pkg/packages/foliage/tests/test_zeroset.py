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
from scipy.spatial.distance import directed_hausdorff

from src.chart import GridSpec, SurfaceChart, sample
from src.dsl import parse_field
from src.errors import AmbiguousTopology, CollarTooThin, NonRegularZero, PoleContact, SurfaceMismatch
from src.zeroset import extract_zero_set, serialize_curve

from .utils import COARSE, FINE


def zero_set(text, surface='sphere', n=COARSE):
    chart = SurfaceChart.of(surface)
    return extract_zero_set(sample(parse_field(text, surface), chart, GridSpec(n, n)), chart)


def test_equator():
    zeroset = zero_set('z')
    (curve,) = zeroset.curves

    assert np.allclose(curve.points[:, 0], 0, atol=1e-12)
    assert curve.length == pytest.approx(2 * math.pi, rel=1e-4)
    assert curve.displacement[1] == pytest.approx(-2 * math.pi)
    assert curve.orientation == -1
    assert curve.min_grad == pytest.approx(1)
    assert curve.collar_halfwidth == pytest.approx(0.2)


def test_two_parallels_have_opposite_orientations():
    lower, upper = zero_set('z^2 - 0.25').curves

    assert np.allclose(lower.points[:, 0], -0.5, atol=1e-9)
    assert np.allclose(upper.points[:, 0], 0.5, atol=1e-9)
    assert (lower.orientation, upper.orientation) == (1, -1)


@pytest.mark.parametrize(
    'text',
    ['z', 'z^2 - 0.25', '(z - 0.3)*(z + 0.4)', '0.6*z + 0.8*x - 0.2', 'x + 0.5'],
)
def test_negation_reverses_orientation(text):
    positive = zero_set(text)
    negative = zero_set(f'-({text})')

    assert [curve.orientation for curve in negative.curves] == [-curve.orientation for curve in positive.curves]


def test_traversal_follows_modular_field():
    field = parse_field('x + 0.5', 'sphere')
    (curve,) = zero_set('x + 0.5').curves

    middle = (curve.points[1:] + curve.points[:-1]) / 2
    d_first, d_second = field.gradient(middle[:, 0], middle[:, 1])

    flow = np.stack([d_second, -d_first], axis=1)
    assert (np.einsum('ij,ij->i', np.diff(curve.points, axis=0), flow) > 0).all()

    # A contractible curve returns to its first point
    assert np.allclose(curve.displacement, 0)


def test_square_is_not_regular():
    with pytest.raises(NonRegularZero) as info:
        zero_set('z^2')

    assert info.value.stage == 'zero-set'


@pytest.mark.slow
@pytest.mark.parametrize('text, n, location', [('(z - 0.3)^2', FINE, 0.3), ('z^2', FINE - 1, 0.0)])
def test_double_zero_between_nodes(text, n, location):
    with pytest.raises(NonRegularZero) as info:
        zero_set(text, n=n)

    assert info.value.stage == 'zero-set'
    assert info.value.location[0] == pytest.approx(location, abs=1e-4)


@pytest.mark.slow
@pytest.mark.parametrize('text, pole', [('1 - z', 1), ('1 + z', -1)])
def test_zero_at_pole(text, pole):
    with pytest.raises(NonRegularZero) as info:
        zero_set(text, n=FINE)

    assert info.value.location == (pole, 0.0)


@pytest.mark.slow
def test_collar_measured_where_it_is_limited():
    # The rotated curve is steep near the pole and flat where the collar stops
    (curve,) = zero_set('(y*sin(0.7) + z*cos(0.7))^2 + x/2 - 0.3', n=FINE).curves

    assert curve.collar_halfwidth == pytest.approx(0.2 * curve.min_grad)


def test_collars_stop_between_curves():
    lower, upper = zero_set('(z - 0.3)*(z + 0.4)').curves

    # |f| at the midpoint z = -0.05 between the curves
    midpoint = 0.35 * 0.35

    for curve in (lower, upper):
        assert 0.9 * midpoint < curve.collar_halfwidth <= midpoint + 1e-3


def test_collar_limited_by_pole():
    (curve,) = zero_set('z - 0.95').curves
    assert curve.collar_halfwidth == pytest.approx(0.05, abs=2e-3)


def test_collar_too_thin_at_low_resolution():
    with pytest.raises(CollarTooThin) as info:
        zero_set('(z - 0.3)*(z + 0.4)', n=32)

    assert info.value.stage == 'collar'


@pytest.mark.parametrize('text, pole', [('z - 0.999', 1), ('z + 0.999', -1)])
def test_pole_contact(text, pole):
    with pytest.raises(PoleContact) as info:
        zero_set(text)

    assert info.value.pole == pole


def test_close_curves_are_ambiguous():
    with pytest.raises(AmbiguousTopology):
        zero_set('(z - 0.3)*(z - 0.32)', n=64)


def test_no_zeros():
    zeroset = zero_set('2 + z')

    assert zeroset.n == 0
    assert zeroset.g_min == math.inf


def test_torus_meridians():
    first, second = zero_set('cos_u', 'torus').curves

    assert np.allclose(first.points[:, 0], math.pi / 2, atol=1e-9)
    assert np.allclose(second.points[:, 0], 3 * math.pi / 2, atol=1e-9)
    assert abs(first.displacement[1]) == pytest.approx(2 * math.pi)
    assert first.orientation == -second.orientation


def test_chart_must_match():
    grid = sample(parse_field('z', 'sphere'), SurfaceChart.of('sphere'), GridSpec(32, 32))

    with pytest.raises(SurfaceMismatch):
        extract_zero_set(grid, SurfaceChart.of('torus'))


def test_serialized_curve():
    data = serialize_curve(zero_set('z').curves[0])

    assert set(data) == {'index', 'orientation', 'min_grad', 'collar_halfwidth', 'length', 'points'}
    assert data['points'][0][0] == pytest.approx(0, abs=1e-12)


@pytest.mark.slow
@pytest.mark.parametrize('text', ['(z - 0.5)*z*(z + 0.5)', 'x + 0.5'])
def test_stable_under_refinement(text):
    coarse, fine = zero_set(text, n=COARSE), zero_set(text, n=FINE)

    assert coarse.n == fine.n

    # Distances in coarse grid cells, with the angle wrapped since unwrapping starts anywhere
    scale = np.array(coarse.sample.spacing)

    def cells(curve):
        points = curve.points.copy()
        points[:, 1] = np.mod(points[:, 1], 2 * math.pi)

        return points / scale

    for a, b in zip(coarse.curves, fine.curves):
        distance = max(directed_hausdorff(cells(a), cells(b))[0], directed_hausdorff(cells(b), cells(a))[0])
        assert distance <= 2
