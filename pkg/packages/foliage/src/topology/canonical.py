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

import collections
import typing

import networkx as nx

from .. import config


CanonicalCode = typing.NewType('CanonicalCode', str)

SIGNS = {1: '+', -1: '-'}


def quantize(period, quantum):
    return round(period / quantum)


def _edge_label(data, quantum):
    parts = []

    if quantum is not None:
        parts.append(str(quantize(data['period'], quantum)))

    if data.get('nontrivial'):
        parts.append('h')

    return ':'.join(parts)


def _rooted_code(graph, root, parent, quantum):
    children = []

    for _, child, data in graph.edges(root, data=True):
        if child != parent:
            children.append(f'{_edge_label(data, quantum)}{_rooted_code(graph, child, root, quantum)}')

    return f'{SIGNS[graph.nodes[root]["sign"]]}({",".join(sorted(children))})'


def _tree_code(graph, quantum):
    centers = nx.center(graph) if graph.number_of_nodes() > 1 else list(graph)
    return 'T' + min(_rooted_code(graph, center, None, quantum) for center in centers)


def _refine(graph, colors, quantum):
    """Color refinement by the multiset of (edge label, neighbor color), iterated until stable."""

    while True:
        signatures = {}

        for vertex in graph:
            neighbors = sorted(
                (_edge_label(data, quantum), colors[other]) for _, other, data in graph.edges(vertex, data=True)
            )
            signatures[vertex] = (colors[vertex], tuple(neighbors))

        ranks = {signature: rank for rank, signature in enumerate(sorted(set(signatures.values())))}
        refined = {vertex: ranks[signature] for vertex, signature in signatures.items()}

        if len(ranks) == len(set(colors.values())):
            return refined

        colors = refined


def _certificate(graph, colors, quantum):
    order = sorted(graph, key=colors.get)

    signs = ''.join(SIGNS[graph.nodes[vertex]['sign']] for vertex in order)
    edges = sorted(
        (*sorted((colors[source], colors[target])), _edge_label(data, quantum))
        for source, target, data in graph.edges(data=True)
    )

    return f'G[{signs}]' + ';'.join(f'{a}-{b}:{label}' for a, b, label in edges)


def _search(graph, colors, quantum):
    colors = _refine(graph, colors, quantum)
    sizes = collections.Counter(colors.values())

    target = min((color for color, size in sizes.items() if size > 1), default=None)

    if target is None:
        return _certificate(graph, colors, quantum)

    best = None

    # Individualize each vertex of the first non-singleton cell in turn
    for vertex in sorted(vertex for vertex, color in colors.items() if color == target):
        individualized = {other: 2 * color + (other != vertex) for other, color in colors.items()}
        code = _search(graph, individualized, quantum)

        if best is None or code < best:
            best = code

    return best


def canonical_code(topology, weight_quantum=config.WEIGHT_QUANTUM):
    """
    String identifying the signed graph up to sign and quantized-weight preserving isomorphism.

    Trees are encoded from their center(s), other graphs through color refinement with backtracking over
    the remaining symmetric vertices. Passing ``weight_quantum=None`` ignores the edge periods.
    """

    graph = topology.graph if hasattr(topology, 'graph') else topology

    if graph.number_of_nodes() and nx.is_tree(graph):
        return CanonicalCode(_tree_code(nx.Graph(graph), weight_quantum))

    colors = {vertex: int(graph.nodes[vertex]['sign'] > 0) for vertex in graph}
    return CanonicalCode(_search(graph, colors, weight_quantum))
