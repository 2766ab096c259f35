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

from . import __version__
from .classify import (
    classify_pair,
    cohomology_report,
    combined_status,
    moduli_coordinates,
    normal_form,
    serialize_cohomology,
    serialize_moduli,
    serialize_verdict,
)
from .deform import deformation_report, serialize_deformation
from .enums import DeformationMode, OrientationMode, Status, SurfaceKind
from .invariants import compute_invariants, serialize_record
from .problem import serialize_problem
from .topology import to_dot
from .utils import significant
from .zeroset import serialize_curve


log = logging.getLogger(__name__)


# Curves closer than this many cells to a pole row are reported
POLE_WARNING_CELLS = 8

UNDECIDED_WARNING = 'Invariants match on the torus, where they are not known to classify structures.'
TOLERANCE_WARNING = 'EQUIVALENT holds up to the numeric tolerances, see the margins of each comparison.'


def envelope(input, result, warnings=()):
    return {'version': __version__, 'input': input, 'result': result, 'warnings': list(warnings)}


def record_warnings(record):
    warnings = []

    if record.surface is not SurfaceKind.sphere or record.zeroset is None:
        return warnings

    h1, _ = record.zeroset.sample.spacing

    for curve in record.zeroset.curves:
        closest = 1 - abs(curve.vertices[:, 0]).max()

        if closest < POLE_WARNING_CELLS * h1:
            warnings.append(f'Curve {curve.index} comes within {significant(closest, 3)} of a pole.')

    return warnings


def verdict_warnings(verdicts):
    warnings = []
    statuses = {verdict.status for verdict in verdicts}

    if Status.UNDECIDED in statuses:
        warnings.append(UNDECIDED_WARNING)

    if Status.EQUIVALENT in statuses:
        warnings.append(TOLERANCE_WARNING)

    return warnings


def _invariants(problem):
    return compute_invariants(problem.field, problem.chart, problem.spec, problem.tolerances)


def run_invariants(problem, curves=False):
    record = _invariants(problem)
    result = serialize_record(record, problem.tolerances.weight_quantum)

    if record.surface is SurfaceKind.sphere:
        result['moduli'] = serialize_moduli(moduli_coordinates(record, problem.tolerances.weight_quantum))

    if curves:
        result['curves'] = [serialize_curve(curve) for curve in record.zeroset.curves]

    return envelope(serialize_problem(problem), result, record_warnings(record))


def run_classify(first, second, mode='preserving'):
    """Compare two problems, ``mode='both'`` reports both orientation modes and their combined status."""

    a, b = _invariants(first), _invariants(second)

    tolerances = first.tolerances
    input = {'a': serialize_problem(first), 'b': serialize_problem(second), 'mode': mode}

    def classify(mode):
        return classify_pair(a, b, mode, tolerances.rel_tol, tolerances.abs_tol)

    if mode == 'both':
        verdicts = [classify(OrientationMode.preserving), classify(OrientationMode.reversing)]
        result = {
            'preserving': serialize_verdict(verdicts[0]),
            'reversing': serialize_verdict(verdicts[1]),
            'any': combined_status(verdicts).value,
        }
    else:
        verdicts = [classify(OrientationMode(mode))]
        result = serialize_verdict(verdicts[0])

    warnings = record_warnings(a) + record_warnings(b) + verdict_warnings(verdicts)
    return envelope(input, result, warnings)


def run_normal_form(T, V):
    return envelope({'T': T, 'V': V}, normal_form(T, V).describe())


def run_tree(problem, dot=False):
    record = _invariants(problem)

    if dot:
        return to_dot(record.topology)

    result = serialize_record(record, problem.tolerances.weight_quantum)['topology']
    return envelope(serialize_problem(problem), result, record_warnings(record))


def run_cohomology(problem):
    record = _invariants(problem)

    result = serialize_cohomology(cohomology_report(record))
    return envelope(serialize_problem(problem), result, record_warnings(record))


def run_deform(problem, mode, epsilon, curve=0):
    mode = DeformationMode(mode)
    report = deformation_report(problem.field, problem.chart, problem.spec, mode, epsilon, curve, problem.tolerances)

    warnings = record_warnings(report.before)

    if mode is DeformationMode.volume and abs(epsilon) > report.safe_bound:
        warnings.append(f'|epsilon| exceeds the safe bound {significant(report.safe_bound)}.')

    input = serialize_problem(problem)
    input.update(mode=mode.value, curve=curve, epsilon=epsilon)

    return envelope(input, serialize_deformation(report, problem.tolerances.weight_quantum), warnings)
