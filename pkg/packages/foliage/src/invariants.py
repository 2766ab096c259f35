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

from . import config
from .chart import integrate, sample
from .enums import SurfaceKind
from .errors import InvalidProblem, NonConvergent, NonRegularZero
from .tolerances import Tolerances
from .topology import build_region_graph, canonical_code, check_balance, serialize_graph, winding_numbers
from .utils import significant
from .zeroset import extract_zero_set


log = logging.getLogger(__name__)


# Smallest width of the thinnest cutoff band, in grid cells
MIN_BAND_CELLS = 4

REFINEMENTS = 3


@dataclasses.dataclass(frozen=True)
class VolumeEstimate:
    value: float
    error: float
    epsilons: tuple = ()
    sequence: tuple = ()


@dataclasses.dataclass(frozen=True, eq=False)
class InvariantRecord:
    surface: SurfaceKind
    periods: tuple
    volume: float
    volume_error: float
    topology: object
    windings: tuple = ()
    zeroset: object = dataclasses.field(default=None, repr=False)
    field: object = dataclasses.field(default=None, repr=False)

    @property
    def n(self):
        return len(self.periods)

    @property
    def genus(self):
        return self.surface.genus


def modular_period(field, curve):
    """
    Travel time of the modular field around a zero curve, the line integral of 1/|grad f| along it.

    Each polyline segment combines the midpoint and trapezoid values of 1/|grad f| into a Simpson estimate.
    """

    points = curve.points
    lengths = np.linalg.norm(np.diff(points, axis=0), axis=1)

    def inverse_speed(p):
        d_first, d_second = field.gradient(p[:, 0], p[:, 1])
        return 1 / np.hypot(d_first, d_second)

    ends = inverse_speed(points)
    middle = inverse_speed((points[1:] + points[:-1]) / 2)

    trapezoid = (ends[1:] + ends[:-1]) / 2
    period = float(np.sum(lengths * (2 * middle + trapezoid) / 3))

    log.debug(f'Modular period of curve {curve.index}: {significant(period)}.')
    return period


def _band_cells(field, sample, zeroset, eps0):
    """Cells spanned by {|f| < eps0} across a typical vertex of the least resolved curve."""

    h1, h2 = sample.spacing
    variation = 0.0

    for curve in zeroset.curves:
        d_first, d_second = field.gradient(curve.vertices[:, 0], curve.vertices[:, 1])
        variation = max(variation, float(np.median(np.abs(d_first) * h1 + np.abs(d_second) * h2)))

    return 2 * eps0 / variation if variation else math.inf


def regularized_volume(field, sample, zeroset, eps0=None, cutoff=None, abs_tol=config.ABS_TOL):
    """
    Principal value of the Liouville volume, -P.V. of the integral of dz dtheta / f.

    The cutoff {|h| > eps} (h = f, or f times a positive ``cutoff`` weight) is smoothed into
    1 - exp(-(h / eps)^2). The volume is computed at eps0, eps0 / 2 and eps0 / 4 and extrapolated
    linearly to eps = 0 from the last two values.

    Parameters
    ----------
    field: Field
        The structure, must be the field sampled in ``sample``.
    sample: GridSample
        Grid to integrate on, use the (possibly refined) sample of the zero set.
    zeroset: ZeroSet
        Extracted zero set with collars.
    eps0: Optional[float]
        Coarsest cutoff, defaults to a fraction of the smallest gradient on the zero set capped at half the
        narrowest collar. An explicit value wider than the narrowest collar is rejected.
    cutoff: Optional[Field]
        Positive weight w for the cutoff function h = f * w.
    abs_tol: float
        Volume tolerance, differences below a tenth of it are treated as quadrature noise.

    Returns
    -------
    VolumeEstimate
        Extrapolated volume, error estimate and the cutoff sequence.
    """

    values = sample.values

    if not zeroset.n:
        if np.any(values == 0):
            i, j = np.argwhere(values == 0)[0]
            gradient = float(np.nan_to_num(sample.gradient_norm()[i, j]))

            # A zero without a zero curve around it is a tangency
            raise NonRegularZero(gradient, config.G_TOL, (float(sample.first[i]), float(sample.second[j])))

        volume = integrate(sample, -1 / values)

        return VolumeEstimate(volume, 1e-9 * (1 + abs(volume)))

    narrowest = min(curve.collar_halfwidth for curve in zeroset.curves)

    if eps0 is None:
        eps0 = min(config.EPS_FACTOR * zeroset.g_min, narrowest / 2)
    elif eps0 > narrowest:
        raise InvalidProblem(f'eps0 = {eps0:.6g} must not exceed the narrowest collar half-width {narrowest:.6g}.')

    if _band_cells(field, sample, zeroset, eps0) < MIN_BAND_CELLS:
        raise NonConvergent(f'Cutoff band at eps0 = {eps0:.6g} spans fewer than {MIN_BAND_CELLS} grid cells.')

    weight = 1.0

    if cutoff is not None:
        weight = cutoff.values(*sample.mesh())

        if np.any(weight <= 0):
            raise InvalidProblem('Cutoff weight must be positive everywhere.')

    h = values * weight
    epsilons = tuple(eps0 / 2**k for k in range(REFINEMENTS))
    sequence = []

    for eps in epsilons:
        with np.errstate(divide='ignore', invalid='ignore'):
            integrand = np.where(values != 0, np.expm1(-((h / eps) ** 2)) / values, 0.0)

        sequence.append(integrate(sample, integrand))

    first, second = sequence[1] - sequence[0], sequence[2] - sequence[1]

    if abs(second) > abs(first) and abs(second) > 0.1 * abs_tol:
        raise NonConvergent('Cutoff volumes do not settle as eps decreases.', sequence)

    volume = 2 * sequence[2] - sequence[1]
    error = max(abs(second), 1e-9 * (1 + abs(volume)))

    log.debug(f'Volume sequence {[significant(x) for x in sequence]}, extrapolated {significant(volume)}.')
    return VolumeEstimate(volume, error, epsilons, tuple(sequence))


def compute_invariants(field, chart, spec, tolerances=None):
    """Run the pipeline sample, zero set, periods, topology, volume on a field."""

    tolerances = tolerances or Tolerances()

    zeroset = extract_zero_set(sample(field, chart, spec), chart, tolerances.g_tol)
    periods = tuple(modular_period(field, curve) for curve in zeroset.curves)

    windings = ()

    if chart.kind is SurfaceKind.torus:
        windings = tuple(winding_numbers(curve) for curve in zeroset.curves)
        check_balance(windings)

    topology = build_region_graph(zeroset.sample, zeroset, periods, windings or None)
    volume = regularized_volume(field, zeroset.sample, zeroset, tolerances.eps0, abs_tol=tolerances.abs_tol)

    log.info(f'Invariants of {field.describe()["field"]}: n = {len(periods)}, V = {significant(volume.value)}.')
    return InvariantRecord(chart.kind, periods, volume.value, volume.error, topology, windings, zeroset, field)


def serialize_record(record, weight_quantum=config.WEIGHT_QUANTUM):
    topology = serialize_graph(record.topology)
    topology['code'] = canonical_code(record.topology, weight_quantum)

    data = {
        'n': record.n,
        'periods': list(record.periods),
        'volume': record.volume,
        'volume_error_estimate': record.volume_error,
        'topology': topology,
        'surface': record.surface.value,
        'genus': record.genus,
    }

    if record.surface is SurfaceKind.torus:
        data['windings'] = [list(winding) for winding in record.windings]

    return data
