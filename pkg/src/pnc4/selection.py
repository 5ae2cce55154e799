"""Distances on the relay's effective constellation and adaptive map choice.

Every pairwise distance at the relay has the form ``|h . delta|`` with
``delta`` one of the 6560 nonzero difference vectors. A relay map only
matters through the set of differences that ever occur between two cells
with *different* labels, so that set is cached per map and the per-fade
work reduces to one 6561-point projection plus masked minima.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Tuple

import numpy as np

from .constellation import EPS, psk_constellation
from .fadespace import difference_vectors
from .hypercube import ClusterMap, Codebook, cell_coords, pair_difference_index


class UnknownLabel(KeyError):
    pass


def _fade(h) -> np.ndarray:
    h = np.asarray(h, dtype=complex).reshape(-1)
    if h.shape != (4,):
        raise ValueError(f"a fade state has 4 coefficients, got {h.shape}")
    return h


def tuple_points() -> np.ndarray:
    """``(256, 4)`` complex symbols for every tuple in cell order."""
    return psk_constellation(4).points[cell_coords()]


def effective_constellation(h) -> np.ndarray:
    """All 256 noiseless superposition points, indexed like the cells."""
    return tuple_points() @ _fade(h)


def _projections(h) -> np.ndarray:
    return np.abs(difference_vectors() @ _fade(h))


def min_distance(h) -> float:
    return float(_projections(h)[1:].min())


def is_singular(h) -> bool:
    h = _fade(h)
    return min_distance(h) < EPS * np.linalg.norm(h)


def cluster_distance(m: ClusterMap, i: int, j: int, h) -> float:
    flat = m.flat
    a = np.flatnonzero(flat == i)
    b = np.flatnonzero(flat == j)
    if a.size == 0:
        raise UnknownLabel(i)
    if b.size == 0:
        raise UnknownLabel(j)
    if i == j:
        raise ValueError("cluster distance needs two different labels")
    pts = effective_constellation(h)
    return float(np.abs(pts[a][:, None] - pts[b][None, :]).min())


def cross_cluster_mask(m: ClusterMap) -> np.ndarray:
    """Boolean mask over difference vectors seen between differing labels."""
    flat = m.flat
    diff = pair_difference_index()
    cross = flat[:, None] != flat[None, :]
    mask = np.zeros(len(difference_vectors()), dtype=bool)
    mask[np.unique(diff[cross])] = True
    return mask


def min_cluster_distance(m: ClusterMap, h, mask: np.ndarray | None = None) -> float:
    if mask is None:
        mask = cross_cluster_mask(m)
    return float(_projections(h)[mask].min())


@dataclass
class MapSelector:
    """Pre-computed cross-cluster difference sets for a whole codebook.

    ``select`` returns the entry maximising the minimum cluster distance,
    lowest index on ties. The fast path only inspects the ``prefix``
    smallest projections; a map with no cross-cluster difference among them
    sends the call down the exhaustive scan.
    """

    codebook: Codebook
    prefix: int = 1024
    masks: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        self.masks = np.stack([cross_cluster_mask(m) for m in self.codebook.maps()])
        # differences absent from every cross set are irrelevant
        self.masks.setflags(write=False)

    def scores(self, h) -> np.ndarray:
        """Minimum cluster distance of every entry (exhaustive)."""
        proj = _projections(h)
        return np.where(self.masks, proj[None, :], np.inf).min(axis=1)

    def select_exhaustive(self, h) -> Tuple[int, float]:
        s = self.scores(h)
        k = int(np.argmax(s))
        return k, float(s[k])

    def select(self, h) -> Tuple[int, float]:
        proj = _projections(h)
        n = proj.size
        if self.prefix >= n:
            return self.select_exhaustive(h)
        cut = np.argpartition(proj, self.prefix)[: self.prefix]
        order = cut[np.argsort(proj[cut], kind="stable")]
        hit = self.masks[:, order]
        found = hit.any(axis=1)
        if not found.all():
            return self.select_exhaustive(h)
        first = hit.argmax(axis=1)
        # a later position in ascending order is a larger distance; among
        # equal positions argmax keeps the lowest entry index
        vals = proj[order][first]
        k = int(np.argmax(vals))
        return k, float(vals[k])


def select_map(cb: Codebook | MapSelector, h) -> Tuple[int, ClusterMap]:
    selector = cb if isinstance(cb, MapSelector) else MapSelector(cb)
    k, _ = selector.select(h)
    return k, selector.codebook[k].map
