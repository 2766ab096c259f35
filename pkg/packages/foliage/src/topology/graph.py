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

import networkx as nx
import numpy as np

from ..enums import SurfaceKind
from ..errors import SignInconsistent, TreeViolation
from ..utils import Plural, label_periodic, significant


log = logging.getLogger(__name__)


SIGN_LABELS = {1: '+', -1: '\N{MINUS SIGN}'}


@dataclasses.dataclass(frozen=True, eq=False)
class SignedTopologyGraph:
    """
    Regions of the complement of the zero set joined by the zero curves separating them.

    Vertices carry ``sign`` (the sign of f on the region), edges are keyed by curve index and carry
    ``curve``, ``period`` and on the torus ``winding`` and ``nontrivial``.
    """

    graph: nx.MultiGraph
    surface: SurfaceKind

    @property
    def vertex_count(self):
        return self.graph.number_of_nodes()

    @property
    def edge_count(self):
        return self.graph.number_of_edges()

    @property
    def is_tree(self):
        return nx.is_tree(self.graph) if self.vertex_count else False

    def sign(self, vertex):
        return self.graph.nodes[vertex]['sign']

    def edges(self):
        """Edges as (source, target, data), ordered by curve index."""

        edges = self.graph.edges(data=True)
        return sorted(edges, key=lambda edge: edge[2]['curve'])

    def flipped(self):
        """The graph of -f: every region changes sign, curve windings reverse."""

        graph = self.graph.copy()

        for _, data in graph.nodes(data=True):
            data['sign'] = -data['sign']

        for _, _, data in graph.edges(data=True):
            if 'winding' in data:
                data['winding'] = data['winding'].reversed()

        return SignedTopologyGraph(graph, self.surface)


def _region_labels(sample, links, sign):
    mask = sample.values >= 0 if sign > 0 else sample.values < 0
    return label_periodic(mask, (sample.chart.periodic_first, True), links)


def build_region_graph(sample, zeroset, periods, windings=None):
    """
    Build the signed region-adjacency graph of a zero set.

    Grid nodes are flood filled per sign of f, joining the same-sign diagonals of resolved saddle cells.
    Both sides of every curve must fall into a single region each, on the sphere the result must be a tree.
    """

    positive, positive_count = _region_labels(sample, zeroset.links, 1)
    negative, negative_count = _region_labels(sample, zeroset.links, -1)

    graph = nx.MultiGraph()

    graph.add_nodes_from(range(positive_count), sign=1)
    graph.add_nodes_from(range(positive_count, positive_count + negative_count), sign=-1)

    for curve, period in zip(zeroset.curves, periods):
        inside = np.unique(positive.ravel()[curve.sides[:, 0]])
        outside = np.unique(negative.ravel()[curve.sides[:, 1]])

        if len(inside) != 1 or len(outside) != 1 or not inside[0] or not outside[0]:
            raise SignInconsistent(curve.index)

        data = {'curve': curve.index, 'period': float(period)}

        if windings is not None:
            data.update(winding=windings[curve.index], nontrivial=windings[curve.index].nontrivial)

        graph.add_edge(int(inside[0]) - 1, positive_count + int(outside[0]) - 1, key=curve.index, **data)

    result = SignedTopologyGraph(graph, sample.chart.kind)

    if sample.chart.kind is SurfaceKind.sphere and not result.is_tree:
        raise TreeViolation(result.vertex_count, result.edge_count)

    log.debug(f'Region graph: {Plural(result.vertex_count):region}, {Plural(result.edge_count):curve}.')
    return result


def to_dot(topology):
    lines = ['graph signed_tree {']

    for vertex, data in sorted(topology.graph.nodes(data=True)):
        lines.append(f'  v{vertex} [label="{SIGN_LABELS[data["sign"]]}"];')

    for source, target, data in topology.edges():
        lines.append(f'  v{source} -- v{target} [label="{significant(data["period"])}", curve={data["curve"]}];')

    lines.append('}')
    return '\n'.join(lines) + '\n'


def serialize_graph(topology):
    vertices = [{'id': vertex, 'sign': data['sign']} for vertex, data in sorted(topology.graph.nodes(data=True))]
    edges = []

    for source, target, data in topology.edges():
        edge = {'curve': data['curve'], 'source': source, 'target': target, 'period': data['period']}

        if 'winding' in data:
            edge.update(winding=list(data['winding']), nontrivial=data['nontrivial'])

        edges.append(edge)

    return {'vertices': vertices, 'edges': edges, 'is_tree': topology.is_tree}
