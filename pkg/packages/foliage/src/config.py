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

import os

from starlette.config import Config


config = Config('.env' if os.path.isfile('.env') else None)


# Sampling grid
GRID_N1 = config('FOLIAGE_GRID_N1', cast=int, default=512)
GRID_N2 = config('FOLIAGE_GRID_N2', cast=int, default=512)

POLE_MARGIN = config('FOLIAGE_POLE_MARGIN', cast=float, default=1e-9)

# Regular-value margin and comparison tolerances
G_TOL = config('FOLIAGE_G_TOL', cast=float, default=1e-3)
REL_TOL = config('FOLIAGE_REL_TOL', cast=float, default=1e-3)
ABS_TOL = config('FOLIAGE_ABS_TOL', cast=float, default=1e-2)

WEIGHT_QUANTUM = config('FOLIAGE_WEIGHT_QUANTUM', cast=float, default=1e-3)

# c_max and eps0 as multiples of the smallest gradient on the zero set
COLLAR_FACTOR = config('FOLIAGE_COLLAR_FACTOR', cast=float, default=0.2)
EPS_FACTOR = config('FOLIAGE_EPS_FACTOR', cast=float, default=0.1)

LOG_LEVEL = config('FOLIAGE_LOG_LEVEL', default='WARNING')

# HTTP surface
HOST = config('FOLIAGE_HOST', default='127.0.0.1')
PORT = config('FOLIAGE_PORT', cast=int, default=8000)
