"""Adaptive physical-layer network coding for the four-way relay channel."""

from .constellation import Constellation, DifferenceSet, difference_set, psk_constellation
from .fadespace import SubspaceClass, enumerate_singular_subspaces, orbit, removable_subspaces
from .hypercube import (
    ClusterMap,
    Codebook,
    build_codebook,
    complete_map,
    load_codebook,
    satisfies_exclusive_law,
    store_codebook,
    table1_map,
    table2_map,
)
from .selection import MapSelector, min_cluster_distance, min_distance, select_map
from .simulator import BCMode, Scheme, SimConfig, run_ber, run_throughput

__all__ = [
    "BCMode", "ClusterMap", "Codebook", "Constellation", "DifferenceSet", "MapSelector",
    "Scheme", "SimConfig", "SubspaceClass", "build_codebook", "complete_map", "difference_set",
    "enumerate_singular_subspaces", "load_codebook", "min_cluster_distance", "min_distance",
    "orbit", "psk_constellation", "removable_subspaces", "run_ber", "run_throughput",
    "satisfies_exclusive_law", "select_map", "store_codebook", "table1_map", "table2_map",
]
