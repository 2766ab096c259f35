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

from starlette.concurrency import run_in_threadpool
from starlette.exceptions import HTTPException
from starlette.routing import Route, Router

from ...commands import run_classify
from ...problem import parse_problem
from ..helpers import read_object, require
from ..responses import EnvelopeResponse


MODES = ('preserving', 'reversing', 'any', 'both')


async def post_classify(request):
    data = await read_object(request)

    a, b = require(data, 'a', 'b')
    mode = data.get('mode', 'preserving')

    if mode not in MODES:
        raise HTTPException(400, f'Invalid "mode" JSON field, must be one of {", ".join(MODES)}.')

    result = await run_in_threadpool(run_classify, parse_problem(a), parse_problem(b), mode)
    return EnvelopeResponse(result)


router = Router([Route('/classify', post_classify, methods=['POST'])])
