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
import logging
from typing import Optional

import numpy as np

from .chart import sample as sample_field
from .dsl import Field, shift_field
from .enums import DeformationMode
from .errors import InvalidProblem, TopologyChanged
from .invariants import compute_invariants, serialize_record
from .tolerances import Tolerances
from .topology import closest_matching, relative_difference
from .utils import label_periodic
from .zeroset import Lattice, extract_zero_set


log = logging.getLogger(__name__)


# Bump half-width as a fraction of the collar half-width, leaves room for the nearest-node mask lookup
BUMP_FRACTION = 0.5


def smoothstep(t):
    t = np.clip(t, 0, 1)
    return t * t * t * (t * (6 * t - 15) + 10)


def smoothstep_slope(t):
    t = np.clip(t, 0, 1)
    return 30 * t * t * (1 - t) ** 2


@dataclasses.dataclass(frozen=True)
class BumpSpec:
    """Even profile B of f: 1 on |f| <= c / 2, 0 on |f| >= c, a quintic smoothstep in between."""

    curve: int
    halfwidth: float

    def _position(self, f):
        return 2 * np.abs(f) / self.halfwidth - 1

    def profile(self, f):
        return 1 - smoothstep(self._position(f))

    def slope(self, f):
        return -smoothstep_slope(self._position(f)) * 2 * np.sign(f) / self.halfwidth


class CollarMask:
    """Indicator of the collar component around one curve, looked up at the nearest grid node."""

    def __init__(self, zeroset, curve):
        sample = zeroset.sample

        labels, _ = label_periodic(np.abs(sample.values) < curve.collar_halfwidth, (sample.chart.periodic_first, True))
        flat = labels.ravel()

        own = np.unique(flat[curve.sides.ravel()])
        self.inside = np.isin(labels, own[own > 0])

        self.sample = sample
        self.lattice = Lattice.of(sample)

    def __call__(self, p1, p2):
        (a1, _), (a2, _) = self.sample.chart.domain
        h1, h2 = self.sample.spacing

        i = np.rint((np.asarray(p1) - a1) / h1).astype(int)
        j = np.rint((np.asarray(p2) - a2) / h2).astype(int) % self.lattice.columns

        if self.sample.chart.periodic_first:
            i %= self.lattice.rows
        else:
            i = np.clip(i, 0, self.lattice.rows - 1)

        return self.inside[i, j].astype(float)


class BumpDeformedField(Field):
    """The field f * (1 + epsilon * B(f) * mask), rescaling the structure near a single zero curve."""

    def __init__(self, base, bump, epsilon, mask):
        self.base = base
        self.bump = bump
        self.epsilon = epsilon
        self.mask = mask

    @property
    def surface(self):
        return self.base.surface

    @property
    def text(self):
        return f'{self.base.text} with a bump of {self.epsilon:g} about curve {self.bump.curve}'

    def values(self, p1, p2):
        f = self.base.values(p1, p2)
        return f * (1 + self.epsilon * self.bump.profile(f) * self.mask(p1, p2))

    def gradient(self, p1, p2):
        f = self.base.values(p1, p2)
        d_first, d_second = self.base.gradient(p1, p2)

        factor = 1 + self.epsilon * self.mask(p1, p2) * (self.bump.profile(f) + f * self.bump.slope(f))
        return d_first * factor, d_second * factor

    def describe(self):
        data = {
            'surface': self.surface.value,
            'field': self.base.text,
            'bump': {'curve': self.bump.curve, 'halfwidth': self.bump.halfwidth, 'epsilon': self.epsilon},
        }

        return data


def deform_volume(field, epsilon, zeroset=None, g_tol=None):
    """
    The field f + epsilon, moving the structure along the reference bivector.

    With a zero set of f given, the deformed zero set is extracted on the same grid and must have
    the same number of curves.
    """

    deformed = shift_field(field, epsilon)

    if zeroset is not None:
        sample = sample_field(deformed, zeroset.sample.chart, zeroset.sample.spec)
        after = extract_zero_set(sample, g_tol=g_tol or Tolerances().g_tol)

        if after.n != zeroset.n:
            raise TopologyChanged(zeroset.n, after.n, epsilon)

    return deformed


def deform_period(field, zeroset, i, epsilon):
    if not epsilon > -1:
        raise InvalidProblem(f'Period deformation needs epsilon > -1, got {epsilon}.')

    if not 0 <= i < zeroset.n:
        raise InvalidProblem(f'Curve {i} does not exist, the zero set has {zeroset.n} curves.')

    curve = zeroset.curves[i]
    bump = BumpSpec(i, BUMP_FRACTION * curve.collar_halfwidth)

    return BumpDeformedField(field, bump, epsilon, CollarMask(zeroset, curve))


def safe_bound(zeroset):
    """Largest |epsilon| for which a volume deformation keeps the zero set topology."""

    if zeroset.n:
        return 0.5 * min(curve.collar_halfwidth for curve in zeroset.curves)

    return 0.5 * float(np.min(np.abs(zeroset.sample.values)))


@dataclasses.dataclass(frozen=True, eq=False)
class DeformationResult:
    mode: DeformationMode
    epsilon: float
    curve: Optional[int]
    field: object
    before: object
    after: object
    safe_bound: float
    period_deltas: tuple
    volume_delta: float
    moved: dict


def deformation_report(field, chart, spec, mode, epsilon, curve=0, tolerances=None):
    """Deform a structure and measure the change of every classifying invariant."""

    tolerances = tolerances or Tolerances()
    mode = DeformationMode(mode)

    before = compute_invariants(field, chart, spec, tolerances)

    if mode is DeformationMode.volume:
        deformed = deform_volume(field, epsilon, before.zeroset, tolerances.g_tol)
        curve = None
    else:
        deformed = deform_period(field, before.zeroset, curve, epsilon)

    after = compute_invariants(deformed, chart, spec, tolerances)
    matching = closest_matching(before.topology, after.topology)

    if matching is None:
        raise TopologyChanged(before.n, after.n, epsilon)

    period_deltas = tuple(
        {'curve': curve_before, 'before': a, 'after': b, 'delta': b - a, 'relative': relative_difference(a, b)}
        for curve_before, _, a, b in matching
    )
    volume_delta = after.volume - before.volume

    moved = {
        'periods': [delta['relative'] > tolerances.rel_tol for delta in period_deltas],
        'volume': abs(volume_delta) > tolerances.abs_tol,
    }

    log.info(f'{mode.value} deformation by {epsilon:g}: volume moved by {volume_delta:.6g}.')

    return DeformationResult(
        mode, epsilon, curve, deformed, before, after, safe_bound(before.zeroset), period_deltas, volume_delta, moved
    )


def serialize_deformation(result, weight_quantum=None):
    extra = {} if weight_quantum is None else {'weight_quantum': weight_quantum}

    data = {
        'mode': result.mode.value,
        'epsilon': result.epsilon,
        'curve': result.curve,
        'field': result.field.describe(),
        'safe_bound': result.safe_bound,
        'before': serialize_record(result.before, **extra),
        'after': serialize_record(result.after, **extra),
        'deltas': {'periods': list(result.period_deltas), 'volume': result.volume_delta},
        'moved': result.moved,
    }

    return data
