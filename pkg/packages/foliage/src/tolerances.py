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
from typing import Optional

from . import config
from .errors import InvalidProblem


@dataclasses.dataclass(frozen=True)
class Tolerances:
    g_tol: float = config.G_TOL
    rel_tol: float = config.REL_TOL
    abs_tol: float = config.ABS_TOL
    weight_quantum: float = config.WEIGHT_QUANTUM
    eps0: Optional[float] = None

    def __post_init__(self):
        for name in ('g_tol', 'rel_tol', 'abs_tol', 'weight_quantum'):
            if not getattr(self, name) > 0:
                raise InvalidProblem(f'Tolerance "{name}" must be positive, got {getattr(self, name)}.')

        if self.eps0 is not None and not self.eps0 > 0:
            raise InvalidProblem(f'Tolerance "eps0" must be positive, got {self.eps0}.')

    def replace(self, **changes):
        return dataclasses.replace(self, **{key: value for key, value in changes.items() if value is not None})


def serialize_tolerances(tolerances):
    data = {
        'g_tol': tolerances.g_tol,
        'rel_tol': tolerances.rel_tol,
        'abs_tol': tolerances.abs_tol,
        'weight_quantum': tolerances.weight_quantum,
        'eps0': tolerances.eps0,
    }

    return data
