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

from starlette.concurrency import run_in_threadpool
from starlette.exceptions import HTTPException
from starlette.routing import Route, Router

from ...commands import run_deform
from ...enums import DeformationMode
from ...problem import parse_problem
from ..helpers import parse_number, read_object, require
from ..responses import EnvelopeResponse


async def post_deform(request):
    data = await read_object(request)
    problem, mode, epsilon = require(data, 'problem', 'mode', 'epsilon')

    if mode not in {x.value for x in DeformationMode}:
        raise HTTPException(400, 'Invalid "mode" JSON field, must be "volume" or "period".')

    epsilon = parse_number(epsilon, 'epsilon')
    curve = parse_number(data.get('curve', 0), 'curve', numbers.Integral)

    result = await run_in_threadpool(run_deform, parse_problem(problem), mode, float(epsilon), curve)
    return EnvelopeResponse(result)


router = Router([Route('/deform', post_deform, methods=['POST'])])
