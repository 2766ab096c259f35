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

import numbers

from starlette.exceptions import HTTPException


async def read_object(request):
    data = await request.json()

    if not isinstance(data, dict):
        raise HTTPException(400, 'JSON body must be an object.')

    return data


def require(data, *keys):
    try:
        return [data[key] for key in keys]
    except KeyError:
        fields = ' and '.join(f'"{key}"' for key in keys)
        raise HTTPException(400, f'Missing {fields} JSON field.')


def parse_number(value, name, kind=numbers.Real):
    if isinstance(value, bool) or not isinstance(value, kind):
        raise HTTPException(400, f'Invalid "{name}" value, must be a number.')

    return value
