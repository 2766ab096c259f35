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

import json
import math

import numpy as np


FLOAT_DIGITS = 12


def round_float(value, digits=FLOAT_DIGITS):
    value = float(value)

    if not math.isfinite(value):
        return None

    return float(f'{value:.{digits}g}')


def round_floats(data, digits=FLOAT_DIGITS):
    """Recursively round every float in a JSON-like structure to the given significant digits."""

    if isinstance(data, (bool, np.bool_)):
        return bool(data)

    if isinstance(data, (int, np.integer)):
        return int(data)

    if isinstance(data, (float, np.floating)):
        return round_float(data, digits)

    if isinstance(data, dict):
        return {key: round_floats(value, digits) for key, value in data.items()}

    if isinstance(data, (list, tuple, np.ndarray)):
        return [round_floats(value, digits) for value in data]

    return data


def dumps(data):
    return json.dumps(round_floats(data), indent=2, ensure_ascii=False)


def significant(value, digits=6):
    return f'{value:.{digits}g}'


# Copied from https://github.com/Rapptz/RoboDanny
class Plural:
    __slots__ = ('value',)

    def __init__(self, value):
        self.value = value

    def __format__(self, format_spec):
        singular, sep, plural = format_spec.partition('|')

        if abs(self.value) == 1:
            return f'{self.value} {singular}'

        plural = plural or f'{singular}s'
        return f'{self.value} {plural}'
