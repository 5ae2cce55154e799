import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pnc4.fadespace import removable_subspaces, sample_subspace_point
from pnc4.hypercube import cell_coords, table2_map, trivial_map
from pnc4.selection import (
    MapSelector,
    UnknownLabel,
    cluster_distance,
    cross_cluster_mask,
    effective_constellation,
    is_singular,
    min_cluster_distance,
    min_distance,
    select_map,
)

from conftest import GENERIC_H

PTS = np.array([1, 1j, -1, -1j])


def points_oracle(h):
    return np.array([sum(h[i] * PTS[x[i]] for i in range(4)) for x in itertools.product(range(4), repeat=4)])


def min_distance_oracle(h):
    p = points_oracle(h)
    return min(abs(p[i] - p[k]) for i in range(256) for k in range(i + 1, 256))


def min_cluster_distance_oracle(labels, h):
    p = points_oracle(h)
    flat = np.asarray(labels).reshape(-1)
    best = np.inf
    for i in range(256):
        other = flat != flat[i]
        best = min(best, np.abs(p[other] - p[i]).min())
    return best


def random_fade(rng):
    return rng.standard_normal(4) + 1j * rng.standard_normal(4)


def test_effective_constellation_single_user():
    pts = effective_constellation([1, 0, 0, 0])
    assert len(np.unique(np.round(pts, 9))) == 4
    np.testing.assert_allclose(pts, PTS[cell_coords()[:, 0]])


def test_effective_constellation_matches_oracle(rng):
    h = random_fade(rng)
    np.testing.assert_allclose(effective_constellation(h), points_oracle(h), atol=1e-12)


def test_effective_constellation_rejects_bad_shape():
    with pytest.raises(ValueError):
        effective_constellation([1, 2, 3])


def test_min_distance_generic():
    d = min_distance(GENERIC_H)
    assert d > 0 and abs(d - min_distance_oracle(GENERIC_H)) < 1e-9
    assert not is_singular(GENERIC_H)


def test_min_distance_degenerate():
    assert min_distance([1, 0, 0, 0]) == 0
    assert is_singular([1, 0, 0, 0])


def test_min_distance_on_subspaces():
    for k in (0, 300, 959):
        h = sample_subspace_point(removable_subspaces()[k], seed=k)
        assert min_distance(h) < 1e-9 and is_singular(h)


@pytest.mark.parametrize("seed", range(5))
def test_min_distance_oracle(seed):
    h = random_fade(np.random.default_rng(seed))
    assert abs(min_distance(h) - min_distance_oracle(h)) < 1e-9


def test_cluster_distance_singletons():
    m = trivial_map()
    h = GENERIC_H
    p = points_oracle(h)
    for i, k in [(1, 2), (7, 200), (256, 3)]:
        assert abs(cluster_distance(m, i, k, h) - abs(p[i - 1] - p[k - 1])) < 1e-12


def test_cluster_distance_symmetric_and_oracle(codebook, rng):
    for _ in range(10):
        m = codebook[int(rng.integers(len(codebook)))].map
        h = random_fade(rng)
        i, k = rng.choice(np.arange(1, m.t + 1), 2, replace=False)
        p = points_oracle(h)
        flat = m.flat
        want = np.abs(p[flat == i][:, None] - p[flat == k][None, :]).min()
        assert abs(cluster_distance(m, i, k, h) - want) < 1e-9
        assert cluster_distance(m, i, k, h) == cluster_distance(m, k, i, h)


def test_cluster_distance_errors():
    m = table2_map()
    with pytest.raises(UnknownLabel):
        cluster_distance(m, 1, 65, GENERIC_H)
    with pytest.raises(UnknownLabel):
        cluster_distance(m, 0, 3, GENERIC_H)
    with pytest.raises(ValueError):
        cluster_distance(m, 4, 4, GENERIC_H)


def test_trivial_map_min_cluster_distance_is_min_distance(rng):
    for _ in range(5):
        h = random_fade(rng)
        assert abs(min_cluster_distance(trivial_map(), h) - min_distance(h)) < 1e-12


@pytest.mark.parametrize("seed", range(3))
def test_min_cluster_distance_oracle(codebook, seed):
    rng = np.random.default_rng(seed)
    m = codebook[int(rng.integers(len(codebook)))].map
    h = random_fade(rng)
    assert abs(min_cluster_distance(m, h) - min_cluster_distance_oracle(m.labels, h)) < 1e-9


def test_clustering_never_shrinks_distance(codebook, rng):
    for _ in range(20):
        h = random_fade(rng)
        m = codebook[int(rng.integers(len(codebook)))].map
        assert min_cluster_distance(m, h) >= min_distance(h) - 1e-12


def test_each_entry_removes_its_own_subspace(codebook):
    for k, s in enumerate(removable_subspaces()):
        h = sample_subspace_point(s, seed=k)
        assert min_cluster_distance(codebook[k].map, h) > 1e-9 * np.linalg.norm(h)


def test_table2_fails_on_some_removable_subspace():
    mask = cross_cluster_mask(table2_map())
    from pnc4.fadespace import vector_index

    split = [s for s in removable_subspaces() if any(mask[vector_index(w)] for w in s.orbit)]
    assert split
    h = sample_subspace_point(split[0], seed=0)
    assert min_cluster_distance(table2_map(), h) < 1e-9


# -- selection -------------------------------------------------------------------

@pytest.mark.parametrize("k", [0, 1, 255, 256, 640, 900, 959])
def test_selection_removes_sampled_subspace(selector, k):
    h = sample_subspace_point(removable_subspaces()[k], seed=k)
    idx, m = select_map(selector, h)
    assert min_cluster_distance(m, h) > 1e-9
    assert m == selector.codebook[idx].map


def test_fast_path_matches_exhaustive_scan(selector, rng):
    for k in range(200):
        if k % 2:
            h = sample_subspace_point(removable_subspaces()[int(rng.integers(960))], seed=k)
            h = h + 1e-3 * random_fade(rng)
        else:
            h = random_fade(rng)
        assert selector.select(h) == selector.select_exhaustive(h)


def test_exhaustive_scan_is_first_argmax(selector, rng):
    h = random_fade(rng)
    scores = np.array([min_cluster_distance(m, h) for m in selector.codebook.maps()])
    k, d = selector.select_exhaustive(h)
    assert k == int(np.flatnonzero(scores == scores.max())[0]) and d == scores.max()


def test_tiny_prefix_falls_back(codebook, rng):
    small = MapSelector(codebook, prefix=1)
    full = MapSelector(codebook, prefix=10**6)
    for _ in range(5):
        h = random_fade(rng)
        assert small.select(h) == full.select(h) == full.select_exhaustive(h)


@settings(max_examples=30, deadline=None)
@given(
    seed=st.integers(0, 2**32 - 1),
    r=st.floats(0.1, 10.0),
    phi=st.floats(0.0, 6.283),
)
def test_selection_is_scale_invariant(selector, seed, r, phi):
    h = random_fade(np.random.default_rng(seed))
    z = r * np.exp(1j * phi)
    assert select_map(selector, h)[0] == select_map(selector, z * h)[0]


def test_select_map_accepts_a_codebook(codebook):
    h = sample_subspace_point(removable_subspaces()[5], seed=5)
    idx, m = select_map(codebook, h)
    assert min_cluster_distance(m, h) > 1e-9


def test_distance_shortening_exists(selector):
    # near a subspace the fixed map can be much worse than the adaptive choice
    g = np.array([0.3 - 0.1j, -0.2j, 0.5, 0.1 + 0.4j])
    fixed = table2_map()
    gaps = []
    for k, s in enumerate(removable_subspaces()[::40]):
        h = sample_subspace_point(s, seed=k) + 1e-2 * g
        _, m = select_map(selector, h)
        gaps.append(min_cluster_distance(m, h) - min_cluster_distance(fixed, h))
    assert max(gaps) > 0.05
    assert min(gaps) >= -1e-12
