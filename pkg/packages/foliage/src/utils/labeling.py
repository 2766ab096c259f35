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

import numpy as np
import scipy.ndimage
import scipy.sparse
import scipy.sparse.csgraph


def label_periodic(mask, periodic=(False, True), links=None):
    """
    Label 4-connected components of a boolean node mask with wrap-around.

    Parameters
    ----------
    mask: numpy.ndarray
        Boolean array of nodes to label.
    periodic: tuple[bool, bool]
        Which axes wrap around.
    links: Optional[numpy.ndarray]
        Extra (k, 2) pairs of flat node indices to join, eg. the diagonals of resolved saddle cells.

    Returns
    -------
    tuple[numpy.ndarray, int]
        Labels (0 for nodes outside the mask, 1..count otherwise) and the component count.
    """

    labels, count = scipy.ndimage.label(mask)

    if count == 0:
        return labels, 0

    pairs = []

    if periodic[0]:
        pairs.append(np.stack([labels[0, :], labels[-1, :]], axis=1))

    if periodic[1]:
        pairs.append(np.stack([labels[:, 0], labels[:, -1]], axis=1))

    if links is not None and len(links):
        flat = labels.ravel()
        pairs.append(np.stack([flat[links[:, 0]], flat[links[:, 1]]], axis=1))

    pairs = np.concatenate(pairs) if pairs else np.empty((0, 2), dtype=int)
    pairs = pairs[(pairs[:, 0] > 0) & (pairs[:, 1] > 0)] - 1

    graph = scipy.sparse.coo_matrix((np.ones(len(pairs)), (pairs[:, 0], pairs[:, 1])), shape=(count, count))
    count, components = scipy.sparse.csgraph.connected_components(graph, directed=False)

    merged = np.zeros_like(labels)
    merged[labels > 0] = components[labels[labels > 0] - 1] + 1

    return merged, count
