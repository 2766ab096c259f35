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

__version__ = '1.0.0'

from .chart import GridSample, GridSpec, SurfaceChart, integrate, sample
from .classify import (
    CohomologyReport,
    ModuliCoordinates,
    Verdict,
    classify_pair,
    cohomology_report,
    moduli_coordinates,
    normal_form,
    reverse_record,
)
from .deform import BumpDeformedField, BumpSpec, DeformationResult, deform_period, deform_volume, deformation_report
from .dsl import ScalarField, eval_chart, parse_field, partials_chart, scale_field, shift_field
from .enums import DeformationMode, OrientationMode, Status, SurfaceKind
from .errors import *
from .invariants import InvariantRecord, VolumeEstimate, compute_invariants, modular_period, regularized_volume
from .problem import ProblemFile, load_problem, parse_problem
from .tolerances import Tolerances
from .topology import (
    HomologyClass,
    SignedTopologyGraph,
    build_region_graph,
    canonical_code,
    graphs_equivalent,
    winding_numbers,
)
from .zeroset import OrientedZeroCurve, ZeroSet, collar, extract_zero_set
