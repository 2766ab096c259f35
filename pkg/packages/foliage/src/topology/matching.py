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

import itertools
import logging

from networkx.algorithms import isomorphism

from .. import config


log = logging.getLogger(__name__)


# Cap on sign-preserving isomorphisms inspected while looking for the closest period mismatch
MAX_CANDIDATES = 1000


def relative_difference(a, b):
    scale = max(abs(a), abs(b))
    return abs(a - b) / scale if scale else 0.0


def _parallel(data):
    """Parallel edges between two regions, ordered for pairing."""

    return sorted(data.values(), key=lambda edge: (edge.get('nontrivial', False), edge['period']))


def _edges_match(rel_tol):
    def match(first, second):
        if len(first) != len(second):
            return False

        for a, b in zip(_parallel(first), _parallel(second)):
            if a.get('nontrivial', False) != b.get('nontrivial', False):
                return False

            if rel_tol is not None and relative_difference(a['period'], b['period']) > rel_tol:
                return False

        return True

    return match


def _signs_match(first, second):
    return first['sign'] == second['sign']


def _matcher(g1, g2, rel_tol):
    return isomorphism.MultiGraphMatcher(g1.graph, g2.graph, node_match=_signs_match, edge_match=_edges_match(rel_tol))


def curve_matching(g1, g2, mapping):
    """
    Pair up the curves of two graphs along a vertex mapping.

    Returns
    -------
    list[tuple[int, int, float, float]]
        (curve in g1, curve in g2, period in g1, period in g2), ordered by the first curve.
    """

    pairs = []

    for source, target in {tuple(sorted(edge)) for edge in g1.graph.edges()}:
        first = _parallel(g1.graph.get_edge_data(source, target))
        second = _parallel(g2.graph.get_edge_data(mapping[source], mapping[target]))

        pairs.extend((a['curve'], b['curve'], a['period'], b['period']) for a, b in zip(first, second))

    return sorted(pairs)


def graphs_equivalent(g1, g2, rel_tol=config.REL_TOL):
    """
    Search for an isomorphism preserving signs exactly and periods within rel_tol.

    Passing ``rel_tol=None`` compares signs (and homological triviality of curves) only.

    Returns
    -------
    tuple[bool, Optional[list]]
        Whether the graphs are equivalent and, if so, the curve matching witnessing it.
    """

    if g1.vertex_count != g2.vertex_count or g1.edge_count != g2.edge_count:
        return False, None

    mapping = next(_matcher(g1, g2, rel_tol).isomorphisms_iter(), None)

    if mapping is None:
        return False, None

    return True, curve_matching(g1, g2, mapping)


def closest_matching(g1, g2):
    """
    Among sign-preserving isomorphisms, the curve matching with the smallest worst relative period difference.

    Returns None when the graphs are not isomorphic as signed graphs.
    """

    best, best_worst = None, None
    candidates = _matcher(g1, g2, None).isomorphisms_iter()

    for mapping in itertools.islice(candidates, MAX_CANDIDATES):
        pairs = curve_matching(g1, g2, mapping)
        worst = max((relative_difference(a, b) for _, _, a, b in pairs), default=0.0)

        if best is None or worst < best_worst:
            best, best_worst = pairs, worst

    return best
