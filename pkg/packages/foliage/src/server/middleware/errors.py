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

from starlette.exceptions import HTTPException

from ...errors import FoliageError
from ...handlers import describe_error
from ..responses import EnvelopeResponse


HANDLERS = []

# Stages whose errors are caused by the request itself rather than the submitted structure
REQUEST_STAGES = ('input', 'parse')


def add_handler(exception):
    def decorator(func):
        HANDLERS.append((exception, func))
        return func

    return decorator


@add_handler(Exception)
def on_internal_error(request, error):
    return EnvelopeResponse({'error': describe_error(error)}, 500)


@add_handler(HTTPException)
def on_http_error(request, error):
    stop = '' if error.detail.endswith('.') else '.'
    data = {'stage': 'input', 'kind': 'InvalidRequest', 'detail': error.detail + stop}

    return EnvelopeResponse({'error': data}, error.status_code)


@add_handler(json.JSONDecodeError)
def on_json_error(request, error):
    data = {'stage': 'input', 'kind': 'InvalidRequest', 'detail': 'Invalid JSON body.'}
    return EnvelopeResponse({'error': data}, 400)


@add_handler(FoliageError)
def on_foliage_error(request, error):
    status = 400 if error.stage in REQUEST_STAGES else 422
    return EnvelopeResponse({'error': describe_error(error)}, status)


# See https://www.starlette.io/exceptions
# The ExceptionMiddleware is already added to the app
def register(app):
    for args in HANDLERS:
        app.add_exception_handler(*args)
