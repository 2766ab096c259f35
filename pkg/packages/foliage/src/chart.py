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
import math

import numpy as np
import scipy.integrate

from . import config
from .enums import SurfaceKind
from .errors import DomainError, InvalidProblem, ShapeMismatch, SurfaceMismatch


log = logging.getLogger(__name__)


MIN_RESOLUTION = 16


@dataclasses.dataclass(frozen=True)
class SurfaceChart:
    """
    The chart of a supported surface together with its reference area form.

    The sphere uses cylindrical coordinates (z, theta) in [-1, 1] x [0, 2 pi) with dz dtheta,
    the flat torus (u, v) in [0, 2 pi)^2 with du dv.
    """

    kind: SurfaceKind

    @classmethod
    def of(cls, kind):
        return cls(SurfaceKind(kind))

    @property
    def genus(self):
        return self.kind.genus

    @property
    def periodic_first(self):
        return self.kind is SurfaceKind.torus

    @property
    def domain(self):
        if self.kind is SurfaceKind.sphere:
            return (-1.0, 1.0), (0.0, 2 * math.pi)

        return (0.0, 2 * math.pi), (0.0, 2 * math.pi)

    @property
    def area(self):
        (a1, b1), (a2, b2) = self.domain
        return (b1 - a1) * (b2 - a2)


@dataclasses.dataclass(frozen=True)
class GridSpec:
    n1: int = config.GRID_N1
    n2: int = config.GRID_N2
    pole_margin: float = config.POLE_MARGIN

    def __post_init__(self):
        if self.n1 < MIN_RESOLUTION or self.n2 < MIN_RESOLUTION:
            raise InvalidProblem(
                f'Grid must have at least {MIN_RESOLUTION} cells per direction, got {self.n1}x{self.n2}.'
            )

    def refined(self):
        return dataclasses.replace(self, n1=self.n1 * 2, n2=self.n2 * 2)


@dataclasses.dataclass(frozen=True, eq=False)
class GridSample:
    """
    Field values and chart partials on a uniform lattice.

    Arrays are indexed [i, j] with i along the first coordinate and j along the second, which wraps
    (node n2 is node 0). On the sphere the first coordinate has n1 + 1 nodes including both poles, where
    partials are not defined and stored as NaN. On the torus both coordinates wrap.
    """

    field: object
    chart: SurfaceChart
    spec: GridSpec
    first: np.ndarray
    second: np.ndarray
    values: np.ndarray
    d_first: np.ndarray
    d_second: np.ndarray

    @property
    def shape(self):
        return self.values.shape

    @property
    def spacing(self):
        (a1, b1), (a2, b2) = self.chart.domain
        return (b1 - a1) / self.spec.n1, (b2 - a2) / self.spec.n2

    @property
    def pole_rows(self):
        """Boolean mask over first-coordinate nodes sitting on a pole."""

        if self.chart.kind is SurfaceKind.torus:
            return np.zeros(self.first.shape, dtype=bool)

        return 1 - np.abs(self.first) <= self.spec.pole_margin

    def mesh(self):
        return np.meshgrid(self.first, self.second, indexing='ij')

    def gradient_norm(self):
        return np.hypot(self.d_first, self.d_second)


def sample(field, chart, spec):
    if field.surface is not chart.kind:
        raise SurfaceMismatch(field.surface.value, chart.kind.value)

    (a1, b1), (a2, b2) = chart.domain

    if chart.kind is SurfaceKind.sphere:
        first = np.linspace(a1, b1, spec.n1 + 1)
    else:
        first = a1 + np.arange(spec.n1) * (b1 - a1) / spec.n1

    second = a2 + np.arange(spec.n2) * (b2 - a2) / spec.n2
    p1, p2 = np.meshgrid(first, second, indexing='ij')

    try:
        values = field.values(p1, p2)

        d_first = np.full(values.shape, np.nan)
        d_second = np.full(values.shape, np.nan)

        rows = np.ones(first.shape, dtype=bool)

        if chart.kind is SurfaceKind.sphere:
            rows = 1 - np.abs(first) > spec.pole_margin

        d_first[rows], d_second[rows] = field.gradient(p1[rows], p2[rows])
    except DomainError as error:
        error.stage = 'sample'
        raise

    log.debug(f'Sampled {chart.kind.value} field on a {spec.n1}x{spec.n2} grid.')
    return GridSample(field, chart, spec, first, second, values, d_first, d_second)


def integrate(sample, integrand):
    """
    Integrate a per-node array against the chart area form.

    The non-periodic sphere coordinate uses the composite trapezoid rule,
    periodic coordinates the rectangle rule (the periodic trapezoid rule).
    """

    integrand = np.asarray(integrand, dtype=float)

    if integrand.shape != sample.shape:
        raise ShapeMismatch(sample.shape, integrand.shape)

    h1, h2 = sample.spacing

    if sample.chart.kind is SurfaceKind.sphere:
        columns = scipy.integrate.trapezoid(integrand, dx=h1, axis=0)
    else:
        columns = integrand.sum(axis=0) * h1

    return float(columns.sum() * h2)
