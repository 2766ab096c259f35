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
import numbers


try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .chart import GridSpec, SurfaceChart
from .dsl import parse_field
from .enums import SurfaceKind
from .errors import InvalidProblem
from .tolerances import Tolerances


log = logging.getLogger(__name__)


KEYS = ('surface', 'field', 'grid', 'tolerances')

GRID_KEYS = ('n1', 'n2')
TOLERANCE_KEYS = ('g_tol', 'rel_tol', 'abs_tol', 'eps0')


@dataclasses.dataclass(frozen=True, eq=False)
class ProblemFile:
    field: object
    chart: SurfaceChart
    spec: GridSpec
    tolerances: Tolerances

    @property
    def surface(self):
        return self.chart.kind


def _check_keys(data, allowed, where):
    if not isinstance(data, dict):
        raise InvalidProblem(f'{where} must be a table.')

    unknown = [key for key in data if key not in allowed]

    if unknown:
        raise InvalidProblem(f'Unknown key "{unknown[0]}" in {where}.')


def _number(data, key, kind, where):
    value = data.get(key)

    if value is None:
        return None

    # bool is an int subclass
    if isinstance(value, bool) or not isinstance(value, kind):
        raise InvalidProblem(f'Key "{key}" in {where} must be a number, got {value!r}.')

    return value


def parse_problem(data):
    """Validate a problem document (the parsed TOML or JSON body) into field, grid and tolerances."""

    _check_keys(data, KEYS, 'problem')

    surface = data.get('surface')
    text = data.get('field')

    if surface not in {kind.value for kind in SurfaceKind}:
        raise InvalidProblem(f'Key "surface" must be "sphere" or "torus", got {surface!r}.')

    if not isinstance(text, str):
        raise InvalidProblem('Key "field" must be a string.')

    grid = data.get('grid', {})
    _check_keys(grid, GRID_KEYS, '[grid]')

    n1, n2 = (_number(grid, key, numbers.Integral, '[grid]') for key in GRID_KEYS)
    spec = GridSpec(**{key: value for key, value in (('n1', n1), ('n2', n2)) if value is not None})

    tolerances = data.get('tolerances', {})
    _check_keys(tolerances, TOLERANCE_KEYS, '[tolerances]')

    overrides = {key: _number(tolerances, key, numbers.Real, '[tolerances]') for key in TOLERANCE_KEYS}
    tolerances = Tolerances().replace(**{key: float(value) for key, value in overrides.items() if value is not None})

    field = parse_field(text, surface)
    return ProblemFile(field, SurfaceChart.of(surface), spec, tolerances)


def load_problem(path):
    try:
        with open(path, 'rb') as file:
            data = tomllib.load(file)
    except OSError as error:
        raise InvalidProblem(f'Can not read problem file "{path}": {error.strerror}.') from None
    except tomllib.TOMLDecodeError as error:
        raise InvalidProblem(f'Problem file "{path}" is not valid TOML: {error}.') from None

    log.debug(f'Loaded problem file {path}.')
    return parse_problem(data)


def serialize_problem(problem):
    data = {
        'surface': problem.surface.value,
        'field': problem.field.text,
        'grid': {'n1': problem.spec.n1, 'n2': problem.spec.n2},
        'tolerances': {key: getattr(problem.tolerances, key) for key in TOLERANCE_KEYS},
    }

    return data
