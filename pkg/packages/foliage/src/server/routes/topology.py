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
from starlette.responses import PlainTextResponse
from starlette.routing import Route, Router

from ...commands import run_tree
from ...problem import parse_problem
from ..helpers import read_object
from ..responses import EnvelopeResponse


async def post_tree(request):
    problem = parse_problem(await read_object(request))

    if request.query_params.get('format') == 'dot':
        return PlainTextResponse(await run_in_threadpool(run_tree, problem, True), media_type='text/vnd.graphviz')

    return EnvelopeResponse(await run_in_threadpool(run_tree, problem))


router = Router([Route('/tree', post_tree, methods=['POST'])])
