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

import networkx as nx
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.enums import SurfaceKind
from src.errors import HomologyImbalance, NonInteger
from src.topology import (
    HomologyClass,
    canonical_code,
    check_balance,
    closest_matching,
    graphs_equivalent,
    to_dot,
    winding_numbers,
)
from src.zeroset import OrientedZeroCurve

from .utils import TWO_PI, invariants_of, region_graph


@st.composite
def signed_trees(draw):
    """A random signed tree with small integer periods, as (signs, edges)."""

    size = draw(st.integers(3, 8))
    sequence = draw(st.lists(st.integers(0, size - 1), min_size=size - 2, max_size=size - 2))
    tree = nx.from_prufer_sequence(sequence)

    root_sign = draw(st.sampled_from([1, -1]))
    depth = nx.shortest_path_length(tree, 0)

    signs = [root_sign * (-1) ** depth[vertex] for vertex in range(size)]
    periods = draw(st.lists(st.integers(1, 3), min_size=size - 1, max_size=size - 1))

    return signs, [(a, b, period) for (a, b), period in zip(tree.edges(), periods)]


def relabeled(signs, edges, permutation):
    """The same tree with vertices renamed and curves listed in reverse."""

    inverse = np.argsort(permutation)
    new_signs = [signs[inverse[vertex]] for vertex in range(len(signs))]

    return new_signs, [(permutation[a], permutation[b], period) for a, b, period in reversed(edges)]


def test_single_curve_graph():
    topology = invariants_of('z - 0.5').topology

    assert (topology.vertex_count, topology.edge_count) == (2, 1)
    assert topology.is_tree

    ((source, target, data),) = topology.edges()

    assert {topology.sign(source), topology.sign(target)} == {1, -1}
    assert data['period'] == pytest.approx(TWO_PI, rel=1e-6)


def test_path_of_three_curves():
    topology = invariants_of('(z - 0.5)*z*(z + 0.5)').topology
    graph = topology.graph

    assert nx.is_isomorphic(nx.Graph(graph), nx.path_graph(4))

    for source, target, _ in topology.edges():
        assert topology.sign(source) == -topology.sign(target)


def test_torus_graph_has_parallel_edges():
    topology = invariants_of('cos_u', 'torus').topology

    assert (topology.vertex_count, topology.edge_count) == (2, 2)
    assert not topology.is_tree
    assert all(data['nontrivial'] for _, _, data in topology.edges())
    assert canonical_code(topology).startswith('G[')


def test_flipped_graph():
    topology = invariants_of('cos_u', 'torus').topology
    flipped = topology.flipped()

    for vertex in topology.graph:
        assert flipped.sign(vertex) == -topology.sign(vertex)

    windings = [data['winding'] for _, _, data in flipped.edges()]
    assert windings == [HomologyClass(0, -1), HomologyClass(0, 1)]


def test_dot_export():
    dot = to_dot(invariants_of('z - 0.5').topology)

    assert dot.startswith('graph signed_tree {')
    assert '[label="+"]' in dot
    assert '[label="\N{MINUS SIGN}"]' in dot
    assert 'label="6.28319", curve=0' in dot


def test_codes_of_negated_fields_differ():
    field, negated = invariants_of('(z - 0.5)*(z + 0.5)'), invariants_of('-(z - 0.5)*(z + 0.5)')

    assert canonical_code(field.topology) != canonical_code(negated.topology)
    assert canonical_code(field.topology) == canonical_code(negated.topology.flipped())


def test_codes_agree_across_resolutions():
    assert canonical_code(invariants_of('z - 0.5').topology) == canonical_code(invariants_of('z - 0.5', n=128).topology)


def test_sign_only_code():
    first = region_graph([1, -1], [(0, 1, 2.0)])
    second = region_graph([1, -1], [(0, 1, 3.0)])

    assert canonical_code(first) != canonical_code(second)
    assert canonical_code(first, None) == canonical_code(second, None)


@given(signed_trees(), st.randoms())
def test_code_invariant_under_relabeling(tree, random):
    signs, edges = tree

    permutation = list(range(len(signs)))
    random.shuffle(permutation)

    relabeled_graph = region_graph(*relabeled(signs, edges, permutation))
    assert canonical_code(region_graph(signs, edges)) == canonical_code(relabeled_graph)


@given(signed_trees(), signed_trees())
def test_codes_agree_with_matching(first, second):
    a, b = region_graph(*first), region_graph(*second)

    assert (canonical_code(a) == canonical_code(b)) == graphs_equivalent(a, b, 1e-9)[0]


def test_matching_pairs_curves():
    a = region_graph([1, -1, 1], [(0, 1, 2.0), (1, 2, 5.0)])
    b = region_graph([-1, 1, 1], [(1, 0, 5.0005), (0, 2, 2.0)])

    equivalent, matching = graphs_equivalent(a, b, 1e-3)

    assert equivalent
    assert [(curve_a, curve_b) for curve_a, curve_b, _, _ in matching] == [(0, 1), (1, 0)]

    assert graphs_equivalent(a, b, 1e-6) == (False, None)
    assert graphs_equivalent(a, b, None)[0]


def test_closest_matching():
    a = region_graph([-1, 1, 1], [(0, 1, 2.0), (0, 2, 5.0)])
    b = region_graph([-1, 1, 1], [(0, 1, 5.5), (0, 2, 2.1)])

    pairs = closest_matching(a, b)
    assert [(curve_a, curve_b) for curve_a, curve_b, _, _ in pairs] == [(0, 1), (1, 0)]

    assert closest_matching(a, region_graph([1, -1], [(0, 1, 2.0)])) is None


def test_torus_matching_respects_homology():
    a = region_graph([1, -1], [(0, 1, 2.0), (0, 1, 3.0)], SurfaceKind.torus)
    b = region_graph([1, -1], [(0, 1, 2.0), (0, 1, 3.0)], SurfaceKind.torus)

    b.graph.edges[0, 1, 0]['nontrivial'] = True

    assert not graphs_equivalent(a, b, 1e-3)[0]
    assert graphs_equivalent(a, a, 1e-3)[0]


def curve(points, index=0):
    return OrientedZeroCurve(index, np.asarray(points, dtype=float), 1, 1.0)


def test_winding_numbers():
    assert winding_numbers(curve([[1, 0], [1, 3], [1, TWO_PI]])) == HomologyClass(0, 1)
    assert winding_numbers(curve([[0, 0], [3, -3], [TWO_PI, -TWO_PI]])) == HomologyClass(1, -1)

    with pytest.raises(NonInteger):
        winding_numbers(curve([[0, 0], [1, 1], [1, 3]]))


def test_homology_balance():
    assert check_balance([HomologyClass(0, 1), HomologyClass(0, -1)]) == (0, 0)

    with pytest.raises(HomologyImbalance) as info:
        check_balance([HomologyClass(1, 0)])

    assert info.value.stage == 'topology'
