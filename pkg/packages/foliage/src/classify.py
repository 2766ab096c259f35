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

import dataclasses
import logging
import math
from typing import Optional

import more_itertools

from . import config
from .dsl import Number, ScalarField, Variable
from .dsl.differentiate import add, mul, sub
from .enums import OrientationMode, Status, SurfaceKind
from .errors import InvalidProblem, SurfaceMismatch, TorusUnsupported
from .topology import canonical_code, closest_matching, graphs_equivalent, relative_difference


log = logging.getLogger(__name__)


# Beyond this |V / T| the exponential form of the normal form overflows
OVERFLOW_RATIO = 700

# Significant digits kept in normal form coefficients
NORMAL_FORM_DIGITS = 9


@dataclasses.dataclass(frozen=True)
class Verdict:
    status: Status
    mode: OrientationMode
    rel_tol: float
    abs_tol: float
    comparisons: tuple = ()
    matching: tuple = ()
    witness: Optional[dict] = None


@dataclasses.dataclass(frozen=True)
class ModuliCoordinates:
    code: str
    periods: tuple
    volume: float


@dataclasses.dataclass(frozen=True)
class CohomologyReport:
    dims: tuple
    generators: dict
    nontrivial_curve_count: int
    wedge_dimension: int
    pairings: tuple = ()


def reverse_record(record):
    """Invariants of the same structure seen through an orientation reversing diffeomorphism."""

    return dataclasses.replace(
        record,
        volume=-record.volume,
        topology=record.topology.flipped(),
        windings=tuple(winding.reversed() for winding in record.windings),
    )


def _compare(a, b, mode, rel_tol, abs_tol):
    if mode is OrientationMode.reversing:
        b = reverse_record(b)

    comparisons = []

    def not_equivalent(witness, matching=()):
        return Verdict(Status.NOT_EQUIVALENT, mode, rel_tol, abs_tol, tuple(comparisons), matching, witness)

    if a.n != b.n or not graphs_equivalent(a.topology, b.topology, None)[0]:
        witness = {
            'invariant': 'topology',
            'a': canonical_code(a.topology, None),
            'b': canonical_code(b.topology, None),
        }
        return not_equivalent(witness)

    equivalent, matching = graphs_equivalent(a.topology, b.topology, rel_tol)

    if not equivalent:
        matching = closest_matching(a.topology, b.topology)

    for curve_a, curve_b, period_a, period_b in matching:
        difference = relative_difference(period_a, period_b)
        comparisons.append(
            {
                'invariant': 'period',
                'edge': [curve_a, curve_b],
                'a': period_a,
                'b': period_b,
                'difference': difference,
                'margin': rel_tol - difference,
            }
        )

    pairs = tuple((curve_a, curve_b) for curve_a, curve_b, _, _ in matching)

    if not equivalent:
        return not_equivalent(max(comparisons, key=lambda comparison: comparison['difference']), pairs)

    difference = abs(a.volume - b.volume)
    comparisons.append(
        {'invariant': 'volume', 'a': a.volume, 'b': b.volume, 'difference': difference, 'margin': abs_tol - difference}
    )

    if difference > abs_tol:
        return not_equivalent(comparisons[-1], pairs)

    # Matching invariants are only known to be complete on the sphere
    status = Status.EQUIVALENT if a.surface is SurfaceKind.sphere else Status.UNDECIDED
    return Verdict(status, mode, rel_tol, abs_tol, tuple(comparisons), pairs)


def classify_pair(a, b, mode=OrientationMode.preserving, rel_tol=config.REL_TOL, abs_tol=config.ABS_TOL):
    """
    Decide whether two structures are Poisson isomorphic.

    Invariants are compared in the order topology, periods, volume, the first mismatch is the witness.
    In reversing mode b is replaced by its mirror image, in ``any`` mode both modes are tried and an
    equivalence in either one wins.
    """

    if a.surface is not b.surface:
        raise SurfaceMismatch(a.surface.value, b.surface.value)

    mode = OrientationMode(mode)

    if mode is not OrientationMode.any:
        verdict = _compare(a, b, mode, rel_tol, abs_tol)
        log.debug(f'{mode.value} comparison: {verdict.status.value}.')
        return verdict

    preserving = _compare(a, b, OrientationMode.preserving, rel_tol, abs_tol)
    reversing = _compare(a, b, OrientationMode.reversing, rel_tol, abs_tol)

    for status in (Status.EQUIVALENT, Status.UNDECIDED):
        verdict = more_itertools.first_true((preserving, reversing), pred=lambda x: x.status is status)

        if verdict is not None:
            return verdict

    return preserving


def combined_status(verdicts):
    statuses = {verdict.status for verdict in verdicts}

    for status in (Status.EQUIVALENT, Status.UNDECIDED):
        if status in statuses:
            return status

    return Status.NOT_EQUIVALENT


def _rounded(value, digits=NORMAL_FORM_DIGITS):
    return float(f'{value:.{digits}g}')


def normal_form(T, V):
    """
    The sphere structure with a single zero curve, period T and volume V.

    Returns the field (2 pi / T) * (z - beta) with beta = (e^(V/T) - 1) / (e^(V/T) + 1). Coefficients are
    rounded to the precision of typed invariants, for beta close to a pole its distance 1 - |beta| is rounded
    instead, and |beta| < 1 always holds.
    """

    if not (math.isfinite(T) and T > 0) or not math.isfinite(V):
        raise InvalidProblem(f'Normal form needs a positive period and a finite volume, got T = {T}, V = {V}.')

    ratio = V / T

    if abs(ratio) > OVERFLOW_RATIO:
        beta = math.tanh(ratio / 2)
    else:
        beta = math.expm1(ratio) / (math.exp(ratio) + 1)

    if abs(beta) <= 0.5:
        beta = _rounded(beta)
    else:
        beta = math.copysign(_rounded(1 - _rounded(1 - abs(beta)), 15), beta)

    if abs(beta) >= 1:
        beta = math.copysign(math.nextafter(1.0, 0.0), beta)

    scale = _rounded(2 * math.pi / T)

    z = Variable('z')
    shifted = add(z, Number(-beta)) if beta < 0 else sub(z, Number(beta))

    return ScalarField(SurfaceKind.sphere, mul(Number(scale), shifted))



def moduli_coordinates(record, weight_quantum=config.WEIGHT_QUANTUM):
    if record.surface is not SurfaceKind.sphere:
        raise TorusUnsupported('Moduli coordinates')

    return ModuliCoordinates(
        canonical_code(record.topology, weight_quantum), tuple(sorted(record.periods)), record.volume
    )


def cohomology_report(record):
    n, genus = record.n, record.genus
    nontrivial = sum(winding.nontrivial for winding in record.windings)

    generators = {
        'H0': ['constant functions'],
        'H1': [f'modular field about curve {index}' for index in range(n)],
        'H2': ['reference structure'] + [f'bump structure about curve {index}' for index in range(n)],
    }

    pairings = ()

    if record.surface is SurfaceKind.torus:
        generators['H1'] += ['de Rham class du', 'de Rham class dv']

        # (1 / T) times the integral of du (dv) along the curve
        pairings = tuple(
            {
                'curve': index,
                'du': 2 * math.pi * winding.p / period,
                'dv': 2 * math.pi * winding.q / period,
            }
            for index, (winding, period) in enumerate(zip(record.windings, record.periods))
        )

    wedge_dimension = nontrivial + 1 if genus else 0
    return CohomologyReport((1, 2 * genus + n, n + 1), generators, nontrivial, wedge_dimension, pairings)


def serialize_verdict(verdict):
    data = {
        'status': verdict.status.value,
        'mode': verdict.mode.value,
        'tolerances': {'rel_tol': verdict.rel_tol, 'abs_tol': verdict.abs_tol},
        'comparisons': list(verdict.comparisons),
        'matching': [list(pair) for pair in verdict.matching],
        'witness': verdict.witness,
    }

    return data


def serialize_moduli(coordinates):
    return {'code': coordinates.code, 'periods': list(coordinates.periods), 'volume': coordinates.volume}


def serialize_cohomology(report):
    data = {
        'dims': list(report.dims),
        'generators': report.generators,
        'nontrivial_curve_count': report.nontrivial_curve_count,
        'wedge_dimension': report.wedge_dimension,
    }

    if report.pairings:
        data['pairings'] = list(report.pairings)

    return data
