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

import pytest
from hypothesis import settings

from .utils import COARSE


# Examples evaluate fields on numpy arrays, timings vary too much for a deadline
settings.register_profile('foliage', deadline=None, max_examples=50)
settings.load_profile('foliage')


@pytest.fixture
def problem_file(tmp_path):
    """Write a TOML problem file and return its path."""

    count = 0

    def write(field, surface='sphere', n=COARSE, **tolerances):
        nonlocal count
        count += 1

        lines = [f'surface = "{surface}"', f'field = "{field}"', '', '[grid]', f'n1 = {n}', f'n2 = {n}']

        if tolerances:
            lines += ['', '[tolerances]'] + [f'{key} = {value!r}' for key, value in tolerances.items()]

        path = tmp_path / f'problem_{count}.toml'
        path.write_text('\n'.join(lines) + '\n')

        return str(path)

    return write
