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
import itertools
import logging
import math
from typing import Optional

import networkx as nx
import numpy as np
import scipy.ndimage
import scipy.optimize
import scipy.spatial

from . import config
from .chart import sample as sample_field
from .errors import AmbiguousTopology, CollarTooThin, NonRegularZero, PoleContact, SurfaceMismatch
from .utils import Plural, label_periodic


log = logging.getLogger(__name__)


# Cell edges, counted from the bottom edge (a - b) counterclockwise
BOTTOM, RIGHT, TOP, LEFT = range(4)

# Bit per corner with f >= 0: a = (i, j), b = (i, j + 1), c = (i + 1, j + 1), d = (i + 1, j)
CASE_SEGMENTS = {
    1: ((LEFT, BOTTOM),),
    2: ((BOTTOM, RIGHT),),
    3: ((LEFT, RIGHT),),
    4: ((RIGHT, TOP),),
    6: ((BOTTOM, TOP),),
    7: ((LEFT, TOP),),
    8: ((TOP, LEFT),),
    9: ((BOTTOM, TOP),),
    11: ((RIGHT, TOP),),
    12: ((LEFT, RIGHT),),
    13: ((BOTTOM, RIGHT),),
    14: ((LEFT, BOTTOM),),
}

SADDLES = (5, 10)

# Saddle whose center shares the sign of a: a and c are joined, b and d get cut off
CUT_B_AND_D = ((BOTTOM, RIGHT), (TOP, LEFT))
CUT_A_AND_C = ((LEFT, BOTTOM), (RIGHT, TOP))

AMBIGUITY_RTOL = 1e-10

# Minimum distance between two curves, in grid cells
MIN_SEPARATION = 2

COLLAR_STEPS = 24


class _Unresolved(Exception):
    """Raised internally when a grid can not resolve the zero set, the caller retries on a finer grid."""


@dataclasses.dataclass(frozen=True)
class Lattice:
    """Flat node and edge numbering of a sample grid whose columns (and on the torus rows) wrap."""

    rows: int
    columns: int
    cells: int

    @classmethod
    def of(cls, sample):
        rows, columns = sample.shape
        return cls(rows, columns, rows if sample.chart.periodic_first else rows - 1)

    @property
    def size(self):
        return self.rows * self.columns

    def node(self, i, j):
        return (i % self.rows) * self.columns + j % self.columns

    def h_edge(self, i, j):
        return self.node(i, j)

    def v_edge(self, i, j):
        return self.size + self.node(i, j)

    def edge_nodes(self, edges):
        """Both end nodes of each edge, the second one further along its axis."""

        edges = np.asarray(edges)
        horizontal = edges < self.size

        i, j = np.divmod(np.where(horizontal, edges, edges - self.size), self.columns)
        other = np.where(horizontal, self.node(i, j + 1), self.node(i + 1, j))

        return self.node(i, j), other, horizontal, i, j


@dataclasses.dataclass(frozen=True, eq=False)
class OrientedZeroCurve:
    """
    A closed zero curve of the field, traversed along the modular vector field.

    ``points`` holds the closed polyline in chart coordinates with the periodic coordinates unwrapped,
    the last point repeats the first one shifted by the net winding. ``orientation`` is the direction of
    traversal in the chart: the sign of the winding in the second (then first) coordinate, or the sign of
    the enclosed chart area for curves that do not wind.
    """

    index: int
    points: np.ndarray
    orientation: int
    min_grad: float
    collar_halfwidth: Optional[float] = None
    sides: np.ndarray = dataclasses.field(default=None, repr=False)

    @property
    def vertices(self):
        return self.points[:-1]

    @property
    def displacement(self):
        return self.points[-1] - self.points[0]

    @property
    def length(self):
        return float(np.linalg.norm(np.diff(self.points, axis=0), axis=1).sum())


@dataclasses.dataclass(frozen=True, eq=False)
class ZeroSet:
    curves: tuple
    sample: object
    links: np.ndarray = dataclasses.field(repr=False)

    @property
    def n(self):
        return len(self.curves)

    @property
    def g_min(self):
        return min((curve.min_grad for curve in self.curves), default=math.inf)


def _pole_slope(sample, ring):
    """Tangential |grad f| at a pole, from the first order variation of f around the nearest ring of nodes."""

    radius = math.sqrt(max(1 - sample.first[ring] ** 2, 0.0))
    values = sample.values[ring]

    return float(values.max() - values.min()) / (2 * radius)


def _critical_point(sample, start):
    """Critical point of f closest to a grid node, searched within two cells of it."""

    h = np.asarray(sample.spacing)
    lower, upper = start - 2 * h, start + 2 * h

    if not sample.chart.periodic_first:
        lower[0], upper[0] = max(lower[0], h[0] / 2 - 1), min(upper[0], 1 - h[0] / 2)

    def residual(p):
        return np.concatenate(sample.field.gradient(p[:1], p[1:]))

    return scipy.optimize.least_squares(residual, start, bounds=(lower, upper), x_scale=h).x


def _check_regular_value(sample, g_tol):
    """
    Reject fields for which 0 is not numerically a regular value.

    Nodes where f nearly vanishes without a usable gradient fail directly, eg. z^2. Grid minima of |f| that
    stay on one side of zero are refined to the nearest critical point of f, which finds double zeros
    between nodes. A zero on a pole is regular only when a curve passes through it (a pole contact).
    """

    rho = max(sample.spacing)
    tiny = g_tol * rho

    magnitude = np.abs(sample.values)
    gradient = sample.gradient_norm()

    with np.errstate(invalid='ignore'):
        flat = (magnitude <= tiny) & (gradient < g_tol)

    if flat.any():
        i, j = np.argwhere(flat)[0]
        raise NonRegularZero(float(gradient[i, j]), g_tol, (float(sample.first[i]), float(sample.second[j])))

    for row in np.flatnonzero(sample.pole_rows):
        if magnitude[row, 0] <= tiny:
            slope = _pole_slope(sample, 1 if row == 0 else row - 1)

            if slope < g_tol:
                raise NonRegularZero(slope, g_tol, (float(sample.first[row]), 0.0))

    modes = ('wrap' if sample.chart.periodic_first else 'nearest', 'wrap')
    positive = (sample.values >= 0).astype(np.int8)

    one_sided = scipy.ndimage.minimum_filter(positive, size=3, mode=modes) == scipy.ndimage.maximum_filter(
        positive, size=3, mode=modes
    )
    minima = magnitude == scipy.ndimage.minimum_filter(magnitude, size=3, mode=modes)

    with np.errstate(invalid='ignore'):
        candidates = one_sided & minima & (magnitude <= rho * gradient)

    labels, count = label_periodic(candidates, (sample.chart.periodic_first, True))

    if not count:
        return

    log.debug(f'Refining {Plural(count):grid minimum|grid minima} of |f| that do not change sign.')

    for i, j in scipy.ndimage.minimum_position(magnitude, labels, np.arange(1, count + 1)):
        point = _critical_point(sample, np.array([sample.first[i], sample.second[j]]))

        value = float(sample.field.values(point[:1], point[1:])[0])
        slope = float(np.hypot(*sample.field.gradient(point[:1], point[1:]))[0])

        if abs(value) <= tiny and slope < g_tol:
            raise NonRegularZero(slope, g_tol, tuple(point.tolist()))


def _cell_cases(sample, lattice):
    positive = sample.values >= 0
    upper = (np.arange(lattice.cells) + 1) % lattice.rows

    a = positive[: lattice.cells]
    d = positive[upper]
    b = np.roll(a, -1, axis=1)
    c = np.roll(d, -1, axis=1)

    return a * 1 + b * 2 + c * 4 + d * 8


def _resolve_saddles(sample, lattice, cases):
    """Evaluate f exactly at saddle cell centers, True where the center shares the sign of corner a."""

    i, j = np.nonzero(np.isin(cases, SADDLES))

    if not len(i):
        return {}, np.empty((0, 2), dtype=int)

    h1, h2 = sample.spacing
    center = sample.field.values(sample.first[i] + h1 / 2, sample.second[j] + h2 / 2)

    corners = np.stack(
        [
            sample.values[i % lattice.rows, j],
            sample.values[i % lattice.rows, (j + 1) % lattice.columns],
            sample.values[(i + 1) % lattice.rows, j],
            sample.values[(i + 1) % lattice.rows, (j + 1) % lattice.columns],
        ]
    )

    if np.any(np.abs(center) <= AMBIGUITY_RTOL * np.abs(corners).max(axis=0)):
        raise _Unresolved(f'{Plural(int(len(i))):saddle cell} with a vanishing center value')

    joined = (center >= 0) == (cases[i, j] == 5)

    # Diagonal through the center connects same-sign corners of the resolved saddle
    links = np.where(
        joined[:, None],
        np.stack([lattice.node(i, j), lattice.node(i + 1, j + 1)], axis=1),
        np.stack([lattice.node(i, j + 1), lattice.node(i + 1, j)], axis=1),
    )

    return dict(zip(zip(i.tolist(), j.tolist()), joined.tolist())), links


def _crossings(sample, lattice, edges):
    """Zero crossing on each edge: linear interpolation followed by one Newton step along the edge."""

    edges = np.asarray(sorted(edges))
    start, end, horizontal, i, j = lattice.edge_nodes(edges)

    values = sample.values.ravel()
    f_start, f_end = values[start], values[end]
    t = f_start / (f_start - f_end)

    h1, h2 = sample.spacing
    step1 = np.where(horizontal, 0.0, h1)
    step2 = np.where(horizontal, h2, 0.0)

    p1 = sample.first[i] + t * step1
    p2 = sample.second[j] + t * step2

    f = sample.field.values(p1, p2)
    d_first, d_second = sample.field.gradient(p1, p2)
    slope = np.where(horizontal, d_second * h2, d_first * h1)

    with np.errstate(divide='ignore', invalid='ignore'):
        correction = np.where(slope != 0, f / slope, 0.0)

    t = np.clip(t - np.nan_to_num(correction), 0, 1)

    points = np.stack([sample.first[i] + t * step1, sample.second[j] + t * step2], axis=1)
    sides = np.where((f_start >= 0)[:, None], np.stack([start, end], axis=1), np.stack([end, start], axis=1))

    return {edge: (point, side) for edge, point, side in zip(edges.tolist(), points, sides)}


def _orientation(points):
    shift = points[-1] - points[0]

    if abs(shift[1]) > math.pi:
        return int(np.sign(shift[1]))

    if abs(shift[0]) > math.pi:
        return int(np.sign(shift[0]))

    x, y = points[:-1, 0], points[:-1, 1]
    area = np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1))

    return 1 if area > 0 else -1


def _close_polyline(sample, raw):
    h1, h2 = sample.spacing
    tiny = 1e-9 * min(h1, h2)

    closed = np.vstack([raw, raw[:1]])
    closed[:, 1] = np.unwrap(closed[:, 1], period=2 * math.pi)

    if sample.chart.periodic_first:
        closed[:, 0] = np.unwrap(closed[:, 0], period=2 * math.pi)

    # Crossings on edges sharing a vanishing node coincide
    steps = np.linalg.norm(np.diff(closed, axis=0), axis=1)
    keep = np.concatenate([[True], steps > tiny])

    if not keep[-1]:
        keep[-1], keep[-2] = True, False

    return closed[keep]


def _orient(sample, closed):
    """Reverse the polyline if needed so it follows the modular field (d/dp2, -d/dp1)."""

    middle = (closed[1:] + closed[:-1]) / 2
    d_first, d_second = sample.field.gradient(middle[:, 0], middle[:, 1])

    flow = np.stack([d_second, -d_first], axis=1)
    dots = np.einsum('ij,ij->i', np.diff(closed, axis=0), flow)

    if np.sum(np.sign(dots)) < 0:
        closed, dots = closed[::-1].copy(), -dots

    if np.any(dots <= 0):
        raise _Unresolved('a zero curve is not transversal to the modular field at grid resolution')

    return closed


def _cell_tree(sample, points):
    """KD-tree over chart points in grid cell units, wrapping along the periodic coordinates."""

    lattice = Lattice.of(sample)
    h1, h2 = sample.spacing
    (a1, _), (a2, _) = sample.chart.domain

    box = (lattice.rows if sample.chart.periodic_first else 4 * lattice.rows, lattice.columns)

    cells = np.stack([(points[:, 0] - a1) / h1, (points[:, 1] - a2) / h2], axis=1)
    cells = np.mod(cells, box)
    cells = np.where(cells >= np.asarray(box), 0.0, cells)

    return scipy.spatial.cKDTree(cells, boxsize=box)


def _check_separation(sample, curves):
    trees = [_cell_tree(sample, curve.vertices) for curve in curves]

    for (a, first), (b, second) in itertools.combinations(enumerate(trees), 2):
        distance, _ = second.query(first.data, k=1)

        if distance.min() <= MIN_SEPARATION:
            raise _Unresolved(f'curves {a} and {b} are closer than {MIN_SEPARATION} grid cells')


def _trace(sample, g_tol):
    lattice = Lattice.of(sample)
    cases = _cell_cases(sample, lattice)

    i, j = np.nonzero((cases != 0) & (cases != 15))

    if not sample.chart.periodic_first and len(i):
        if np.any(i == 0):
            raise PoleContact(-1)
        if np.any(i == lattice.cells - 1):
            raise PoleContact(1)

    joined, links = _resolve_saddles(sample, lattice, cases)

    segments = []

    for row, column in zip(i.tolist(), j.tolist()):
        edges = (
            lattice.h_edge(row, column),
            lattice.v_edge(row, column + 1),
            lattice.h_edge(row + 1, column),
            lattice.v_edge(row, column),
        )

        case = int(cases[row, column])
        pairs = CASE_SEGMENTS.get(case) or (CUT_B_AND_D if joined[row, column] else CUT_A_AND_C)

        segments.extend((edges[start], edges[end]) for start, end in pairs)

    graph = nx.Graph(segments)

    if not graph:
        return ZeroSet((), sample, links)

    if any(degree != 2 for _, degree in graph.degree):
        raise _Unresolved('a traced zero curve does not close up')

    crossings = _crossings(sample, lattice, graph.nodes)
    curves = []

    for index, component in enumerate(sorted(nx.connected_components(graph), key=min)):
        cycle = [edge for edge, _ in nx.find_cycle(graph.subgraph(component), source=min(component))]

        raw = np.array([crossings[edge][0] for edge in cycle])
        closed = _orient(sample, _close_polyline(sample, raw))

        d_first, d_second = sample.field.gradient(closed[:-1, 0], closed[:-1, 1])
        min_grad = float(np.hypot(d_first, d_second).min())

        if min_grad < g_tol:
            k = int(np.hypot(d_first, d_second).argmin())
            raise NonRegularZero(min_grad, g_tol, tuple(closed[k].tolist()))

        sides = np.array([crossings[edge][1] for edge in cycle])
        curves.append(OrientedZeroCurve(index, closed, _orientation(closed), min_grad, sides=sides))

    _check_separation(sample, curves)

    return ZeroSet(tuple(curves), sample, links)


def extract_zero_set(sample, chart=None, g_tol=config.G_TOL):
    """
    Extract, validate and orient the zero curves of a sampled field.

    Saddle cells are resolved by the exact field value at the cell center. A grid that can not resolve
    the zero set (vanishing saddle centers, curves too close together) is retried once at twice the
    resolution, the returned zero set then refers to the finer sample.

    Parameters
    ----------
    sample: GridSample
        The sampled field.
    chart: Optional[SurfaceChart]
        Must match the chart of the sample.
    g_tol: float
        Smallest gradient norm accepted on the zero set.

    Returns
    -------
    ZeroSet
        The oriented curves, each with its collar half-width.
    """

    if chart is not None and chart != sample.chart:
        raise SurfaceMismatch(chart.kind.value, sample.chart.kind.value)

    _check_regular_value(sample, g_tol)

    try:
        zeroset = _trace(sample, g_tol)
    except _Unresolved as error:
        log.info(f'Could not resolve zero set at {sample.spec.n1}x{sample.spec.n2} ({error}), refining grid.')

        sample = sample_field(sample.field, sample.chart, sample.spec.refined())

        try:
            zeroset = _trace(sample, g_tol)
        except _Unresolved as error:
            raise AmbiguousTopology(f'Zero set remains ambiguous after refinement: {error}.') from None

    curves = tuple(dataclasses.replace(curve, collar_halfwidth=collar(curve, zeroset)) for curve in zeroset.curves)
    log.debug(f'Extracted {Plural(len(curves)):zero curve} with g_min = {zeroset.g_min:.6g}.')

    return dataclasses.replace(zeroset, curves=curves)


def collar(curve, zeroset, sample=None):
    """
    Largest c <= c_max for which the component of {|f| < c} around the curve meets no other curve or pole.

    The collar must span at least 4 cells of f-variation where it is limited: at the vertex nearest to the
    first contact with another curve or a pole, or at the flattest vertex when c_max = COLLAR_FACTOR * g_min
    is reached.
    """

    sample = sample or zeroset.sample
    lattice = Lattice.of(sample)

    c_max = config.COLLAR_FACTOR * zeroset.g_min
    magnitude = np.abs(sample.values)

    own = np.unique(curve.sides)
    others = [other.sides.ravel() for other in zeroset.curves if other.index != curve.index]
    poles = np.flatnonzero(np.repeat(sample.pole_rows, lattice.columns))

    forbidden_nodes = np.unique(np.concatenate([*others, poles])).astype(int)

    def contacts(c):
        labels, _ = label_periodic(magnitude < c, (sample.chart.periodic_first, True))
        flat = labels.ravel()

        mine = np.unique(flat[own])
        return forbidden_nodes[np.isin(flat[forbidden_nodes], mine[mine > 0])]

    def isolated(c):
        return not len(contacts(c))

    h1, h2 = sample.spacing
    d_first, d_second = sample.field.gradient(curve.vertices[:, 0], curve.vertices[:, 1])
    variation = np.abs(d_first) * h1 + np.abs(d_second) * h2

    if isolated(c_max):
        halfwidth = c_max
        limit = int(np.argmin(np.hypot(d_first, d_second)))
    else:
        low, high = 0.0, c_max

        for _ in range(COLLAR_STEPS):
            middle = (low + high) / 2
            low, high = (middle, high) if isolated(middle) else (low, middle)

        halfwidth = low

        nodes = np.stack(np.divmod(contacts(high), lattice.columns), axis=1)
        distance, nearest = _cell_tree(sample, curve.vertices).query(nodes, k=1)
        limit = int(nearest[np.argmin(distance)])

    required = 4 * float(variation[limit])

    if halfwidth < required:
        raise CollarTooThin(curve.index, halfwidth, required)

    log.debug(f'Collar of curve {curve.index}: c = {halfwidth:.6g} (c_max = {c_max:.6g}), limited near vertex {limit}.')
    return halfwidth


def serialize_curve(curve):
    data = {
        'index': curve.index,
        'orientation': curve.orientation,
        'min_grad': curve.min_grad,
        'collar_halfwidth': curve.collar_halfwidth,
        'length': curve.length,
        'points': curve.points.tolist(),
    }

    return data
