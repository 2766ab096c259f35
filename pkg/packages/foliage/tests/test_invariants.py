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

import pytest

from src.chart import GridSpec, SurfaceChart
from src.dsl import parse_field, scale_field
from src.errors import InvalidProblem, NonConvergent
from src.invariants import compute_invariants, modular_period, regularized_volume, serialize_record
from src.tolerances import Tolerances
from src.topology import HomologyClass

from .utils import COARSE, FINE, TWO_PI, invariants_of, volume_closed_form


@pytest.mark.parametrize('text, period', [('z - 0.5', TWO_PI), ('2*(z - 0.5)', math.pi), ('z', TWO_PI)])
def test_single_curve_periods(text, period):
    record = invariants_of(text)

    assert record.n == 1
    assert record.periods[0] == pytest.approx(period, rel=1e-6)


def test_periods_of_two_parallels():
    record = invariants_of('(z - 0.3)*(z + 0.4)')
    assert record.periods == pytest.approx((TWO_PI / 0.7, TWO_PI / 0.7), rel=1e-6)


def test_period_of_tilted_curve():
    # |grad f| is not constant along the curve of a tilted plane, the period still is 2 pi / a
    record = invariants_of('0.6*z + 0.8*x - 0.2')
    assert record.periods[0] == pytest.approx(TWO_PI, rel=1e-3)


@pytest.mark.parametrize(
    'text, volume',
    [('z', 0), ('z - 0.5', volume_closed_form(1, 0.5)), ('z + 0.5', -volume_closed_form(1, 0.5))],
)
def test_volumes(text, volume):
    record = invariants_of(text)

    assert record.volume == pytest.approx(volume, abs=1e-2)
    assert record.volume_error < 1e-2


def test_symplectic_volume():
    record = invariants_of('1')

    assert record.n == 0
    assert record.periods == ()
    assert record.volume == pytest.approx(-4 * math.pi, rel=1e-9)
    assert invariants_of('-1').volume == pytest.approx(4 * math.pi, rel=1e-9)

    assert record.topology.vertex_count == 1
    assert record.topology.sign(0) == 1


def test_volume_without_zeros():
    assert invariants_of('2 + z').volume == pytest.approx(-TWO_PI * math.log(3), rel=1e-4)


@pytest.mark.parametrize(
    'text', ['z - 0.5', 'z^2 - 0.25', '(z - 0.3)*(z + 0.4)', '0.6*z + 0.8*x - 0.2', 'x + 0.5', '2 + z']
)
def test_negation_law(text):
    record = invariants_of(text)
    negated = invariants_of(f'-({text})')

    assert negated.volume == pytest.approx(-record.volume, rel=1e-6, abs=1e-6)
    assert sorted(negated.periods) == pytest.approx(sorted(record.periods), rel=1e-6)


@pytest.mark.parametrize('factor', [0.5, 2, 7])
def test_scaling_law(factor):
    field = parse_field('x + 0.5', 'sphere')
    chart, spec = SurfaceChart.of('sphere'), GridSpec(COARSE, COARSE)

    base = compute_invariants(field, chart, spec)
    scaled = compute_invariants(scale_field(field, factor), chart, spec)

    assert scaled.periods[0] == pytest.approx(base.periods[0] / factor, rel=1e-3)
    assert scaled.volume == pytest.approx(base.volume / factor, rel=1e-3)


def test_period_of_curve():
    record = invariants_of('z^2 - 0.25')
    lower, upper = record.zeroset.curves

    assert modular_period(record.field, lower) == pytest.approx(TWO_PI, rel=1e-6)
    assert modular_period(record.field, upper) == pytest.approx(TWO_PI, rel=1e-6)


def test_explicit_eps0():
    record = invariants_of('z - 0.5', eps0=0.05)
    assert record.volume == pytest.approx(volume_closed_form(1, 0.5), abs=1e-2)


def test_eps0_wider_than_collar():
    with pytest.raises(InvalidProblem):
        invariants_of('z - 0.5', eps0=0.5)


def test_unresolved_cutoff_band():
    with pytest.raises(NonConvergent) as info:
        invariants_of('z - 0.5', eps0=1e-3)

    assert info.value.stage == 'volume'


def test_cutoff_weight_must_be_positive():
    record = invariants_of('z - 0.3')

    with pytest.raises(InvalidProblem):
        regularized_volume(record.field, record.zeroset.sample, record.zeroset, cutoff=parse_field('z', 'sphere'))


def test_cutoff_sequence():
    record = invariants_of('z - 0.3')
    estimate = regularized_volume(record.field, record.zeroset.sample, record.zeroset, eps0=0.1)

    assert estimate.epsilons == pytest.approx((0.1, 0.05, 0.025))
    assert len(estimate.sequence) == 3
    assert estimate.value == pytest.approx(2 * estimate.sequence[2] - estimate.sequence[1])


def test_torus_meridians():
    record = invariants_of('cos_u', 'torus')

    assert record.genus == 1
    assert record.periods == pytest.approx((TWO_PI, TWO_PI), rel=1e-6)
    assert record.volume == pytest.approx(0, abs=1e-6)
    assert record.windings == (HomologyClass(0, 1), HomologyClass(0, -1))
    assert all(winding.nontrivial for winding in record.windings)


@pytest.mark.slow
def test_torus_contractible_curve():
    record = invariants_of('cos_u + 0.5*cos_v + 1.2', 'torus', FINE)

    assert record.n == 1
    assert record.windings == (HomologyClass(0, 0),)
    assert (record.topology.vertex_count, record.topology.edge_count) == (2, 1)


def test_serialized_record():
    data = serialize_record(invariants_of('z - 0.5'))

    assert data['n'] == 1
    assert data['surface'] == 'sphere'
    assert data['genus'] == 0
    assert 'windings' not in data
    assert data['topology']['is_tree']
    assert data['topology']['code'].startswith('T')

    torus = serialize_record(invariants_of('cos_u', 'torus'))
    assert torus['windings'] == [[0, 1], [0, -1]]


def test_tolerances_are_validated():
    with pytest.raises(InvalidProblem):
        Tolerances(rel_tol=0)

    with pytest.raises(InvalidProblem):
        Tolerances(eps0=-1.0)
