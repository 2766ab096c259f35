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

import functools
import math

import networkx as nx

from src import GridSpec, SignedTopologyGraph, SurfaceChart, SurfaceKind, Tolerances, compute_invariants, parse_field


TWO_PI = 2 * math.pi

# Coarse grids keep the suite fast, acceptance checks run at the default 512
COARSE = 256
FINE = 512


@functools.lru_cache(maxsize=None)
def invariants_of(text, surface='sphere', n=COARSE, eps0=None):
    field = parse_field(text, surface)
    return compute_invariants(field, SurfaceChart.of(surface), GridSpec(n, n), Tolerances(eps0=eps0))


def volume_closed_form(a, b):
    """Volume of a * (z - b) on the sphere."""

    return TWO_PI / a * math.log((1 + b) / (1 - b))


def region_graph(signs, edges, surface=SurfaceKind.sphere):
    """A signed region graph from vertex signs and (source, target, period) edges."""

    graph = nx.MultiGraph()

    for vertex, sign in enumerate(signs):
        graph.add_node(vertex, sign=sign)

    for curve, (source, target, period) in enumerate(edges):
        graph.add_edge(source, target, key=curve, curve=curve, period=float(period))

    return SignedTopologyGraph(graph, surface)
