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
from typing import NamedTuple

import numpy as np

from ..errors import HomologyImbalance, NonInteger


WINDING_TOL = 1e-3


class HomologyClass(NamedTuple):
    """Winding pair of a closed curve on the torus, p around u and q around v."""

    p: int
    q: int

    @property
    def nontrivial(self):
        return (self.p, self.q) != (0, 0)

    def reversed(self):
        return HomologyClass(-self.p, -self.q)


def winding_numbers(curve):
    displacement = curve.displacement / (2 * math.pi)
    rounded = np.rint(displacement)

    if np.any(np.abs(displacement - rounded) > WINDING_TOL):
        raise NonInteger(curve.index, displacement.tolist())

    return HomologyClass(int(rounded[0]), int(rounded[1]))


def check_balance(classes):
    """The zero curves bound {f > 0}, so their classes must add up to zero."""

    total = (sum(x.p for x in classes), sum(x.q for x in classes))

    if total != (0, 0):
        raise HomologyImbalance(total)

    return total
