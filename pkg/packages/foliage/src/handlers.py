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

import logging

from .errors import DomainError, FoliageError, NonRegularZero, ParseError


log = logging.getLogger(__name__)


ERROR_HANDLERS = {}

INTERNAL_ERROR = 'Something unexpected went wrong during the computation.'


def add_handler(exc_type):
    def decorator(func):
        ERROR_HANDLERS[exc_type] = func
        return func

    return decorator


def get_handler(error):
    """Get the error handler for a given error."""

    chain = type(error).__mro__
    return next(filter(None, map(ERROR_HANDLERS.get, chain)))


def describe_error(error):
    """Machine-readable {stage, kind, detail} description of an error."""

    return get_handler(error)(error)


@add_handler(Exception)
def handle_internal_error(error):
    log.exception('Unhandled exception during computation.', exc_info=error)
    return {'stage': 'internal', 'kind': 'InternalError', 'detail': INTERNAL_ERROR}


@add_handler(FoliageError)
def handle_foliage_error(error):
    return {'stage': error.stage, 'kind': error.kind, 'detail': str(error)}


@add_handler(ParseError)
def handle_parse_error(error):
    data = handle_foliage_error(error)
    data.update(position=error.position, expected=list(error.expected))

    return data


@add_handler(DomainError)
@add_handler(NonRegularZero)
def handle_located_error(error):
    data = handle_foliage_error(error)

    if error.location is not None:
        data['location'] = list(error.location)

    return data
