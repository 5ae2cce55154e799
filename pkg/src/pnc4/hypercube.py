"""Relay maps as 4-fold Latin hyper-cubes.

Cells are addressed by symbol tuples ``(a, b, c, d)`` of constellation
indices, flattened row-major (``a`` most significant). A relay map assigns a
cluster label ``1..t`` to every cell; it satisfies the exclusive law iff no
label repeats inside any hyperplane obtained by fixing one coordinate.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .constellation import psk_constellation
from .fadespace import N_USERS, SubspaceClass, Vector, removable_subspaces, vector_index
from . import fixtures

SIDE = 4
N_CELLS = SIDE ** N_USERS

CODEBOOK_MAGIC = "pnc4-codebook"
CODEBOOK_VERSION = 1


class ConflictingConstraints(ValueError):
    pass


class FormatError(ValueError):
    pass


class DisjointSet:
    """Union-find over ``0..size-1`` with path halving and union by size."""

    def __init__(self, size: int):
        self._parent = list(range(size))
        self._size = [1] * size

    def find(self, x: int) -> int:
        parent = self._parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self._size[rx] < self._size[ry]:
            rx, ry = ry, rx
        self._parent[ry] = rx
        self._size[rx] += self._size[ry]
        return True

    def groups(self) -> List[Tuple[int, ...]]:
        buckets = {}
        for x in range(len(self._parent)):
            buckets.setdefault(self.find(x), []).append(x)
        return sorted(tuple(g) for g in buckets.values())


@lru_cache(maxsize=None)
def cell_coords(side: int = SIDE) -> np.ndarray:
    """``(side**4, 4)`` array of symbol tuples in flat-index order."""
    out = np.array(list(itertools.product(range(side), repeat=N_USERS)), dtype=np.int64)
    out.setflags(write=False)
    return out


def cell_index(x: Sequence[int], side: int = SIDE) -> int:
    r = 0
    for xi in x:
        r = r * side + int(xi)
    return r


@lru_cache(maxsize=None)
def pair_difference_index() -> np.ndarray:
    """``D[i, k]`` = index of the difference vector ``x_i - x_k`` (256 x 256)."""
    pts = psk_constellation(SIDE).exact
    coords = cell_coords()
    from .fadespace import _dset

    dset = _dset()
    n = len(dset.all)
    sym_diff = np.empty((SIDE, SIDE), dtype=np.int64)
    for s, t in itertools.product(range(SIDE), repeat=2):
        sym_diff[s, t] = dset.index((pts[s][0] - pts[t][0], pts[s][1] - pts[t][1]))
    out = np.zeros((N_CELLS, N_CELLS), dtype=np.int64)
    for p in range(N_USERS):
        out = out * n + sym_diff[coords[:, p][:, None], coords[:, p][None, :]]
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class ClusterMap:
    labels: np.ndarray

    def __post_init__(self):
        arr = np.array(self.labels, dtype=np.int64)
        if arr.ndim == 1:
            side = round(arr.size ** (1 / N_USERS))
            arr = arr.reshape((side,) * N_USERS)
        if arr.ndim != N_USERS or len(set(arr.shape)) != 1:
            raise ValueError(f"labels must be an M x M x M x M array, got shape {arr.shape}")
        if arr.min() < 1:
            raise ValueError("cluster labels start at 1")
        arr.setflags(write=False)
        object.__setattr__(self, "labels", arr)

    @property
    def side(self) -> int:
        return self.labels.shape[0]

    @property
    def flat(self) -> np.ndarray:
        return self.labels.reshape(-1)

    @property
    def label_count(self) -> int:
        return len(np.unique(self.labels))

    t = label_count

    def __getitem__(self, x):
        return int(self.labels[tuple(x)])

    def __eq__(self, other):
        if not isinstance(other, ClusterMap):
            return NotImplemented
        return self.labels.shape == other.labels.shape and bool(np.array_equal(self.labels, other.labels))

    def __hash__(self):
        return hash(self.labels.tobytes())

    def clusters(self) -> dict:
        out = {}
        for i, lab in enumerate(self.flat):
            out.setdefault(int(lab), []).append(i)
        return out


def satisfies_exclusive_law(m: ClusterMap) -> bool:
    """Latin check: every one-coordinate hyperplane holds distinct labels."""
    labels = m.labels
    side = m.side
    for p in range(N_USERS):
        for v in range(side):
            plane = np.take(labels, v, axis=p).reshape(-1)
            if len(np.unique(plane)) != plane.size:
                return False
    return True


@dataclass(frozen=True)
class ConstraintPartition:
    parts: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        cells = sorted(c for part in self.parts for c in part)
        if cells != list(range(len(cells))):
            raise ValueError("parts must cover every cell exactly once")

    @property
    def size(self) -> int:
        return sum(len(p) for p in self.parts)

    def part_of(self) -> np.ndarray:
        out = np.empty(self.size, dtype=np.int64)
        for k, part in enumerate(self.parts):
            out[list(part)] = k
        return out

    @classmethod
    def singletons(cls, n: int = N_CELLS) -> "ConstraintPartition":
        return cls(tuple((i,) for i in range(n)))


def build_constraints(s: SubspaceClass | Iterable[Vector]) -> ConstraintPartition:
    """Merge every tuple pair whose difference lies in the subspace's orbit."""
    members = s.orbit if isinstance(s, SubspaceClass) else frozenset(s)
    wanted = np.array(sorted(vector_index(w) for w in members))
    diff = pair_difference_index()
    ii, kk = np.nonzero(np.isin(diff, wanted))
    ds = DisjointSet(N_CELLS)
    for i, k in zip(ii.tolist(), kk.tolist()):
        ds.union(i, k)
    return ConstraintPartition(tuple(ds.groups()))


def constraints_conflict(p: ConstraintPartition) -> bool:
    """True iff some part holds two cells sharing a coordinate value."""
    coords = cell_coords()
    for part in p.parts:
        if len(part) < 2:
            continue
        sub = coords[list(part)]
        for q in range(N_USERS):
            if len(np.unique(sub[:, q])) != len(part):
                return True
    return False


def complete_map(p: ConstraintPartition) -> ClusterMap:
    """Greedy Latin completion of a constrained array.

    Cells are visited in ascending ``(a, b, c, d)`` order. The first time a
    cell of a part is reached, the whole part takes the smallest label not
    yet used in any hyperplane through any of its cells.
    """
    if constraints_conflict(p):
        raise ConflictingConstraints("a constraint part repeats a coordinate value")
    coords = cell_coords()
    part_of = p.part_of()
    labels = np.zeros(N_CELLS, dtype=np.int64)
    # used[q][v] is a bitmask of labels present in hyperplane x_q == v
    used = [[0] * SIDE for _ in range(N_USERS)]
    for cell in range(N_CELLS):
        if labels[cell]:
            continue
        part = p.parts[part_of[cell]]
        blocked = 0
        for member in part:
            for q in range(N_USERS):
                blocked |= used[q][coords[member, q]]
        c = 1
        while blocked >> c & 1:
            c += 1
        for member in part:
            labels[member] = c
            for q in range(N_USERS):
                used[q][coords[member, q]] |= 1 << c
    return ClusterMap(labels.reshape((SIDE,) * N_USERS))


def trivial_map() -> ClusterMap:
    """One cluster per tuple: every pair is cross-cluster."""
    return ClusterMap(np.arange(1, N_CELLS + 1).reshape((SIDE,) * N_USERS))


def table2_map() -> ClusterMap:
    """The fixed XOR relay map used by the non-adaptive two-use scheme."""
    return ClusterMap(fixtures.table2_labels(corrected=True))


def table1_map() -> ClusterMap:
    return ClusterMap(fixtures.table1_labels(corrected=True))


# -- codebook ---------------------------------------------------------------

@dataclass(frozen=True)
class CodebookEntry:
    vector: Vector
    map: ClusterMap


@dataclass(frozen=True)
class Codebook:
    entries: Tuple[CodebookEntry, ...]
    side: int = SIDE

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, k: int) -> CodebookEntry:
        return self.entries[k]

    def maps(self) -> List[ClusterMap]:
        return [e.map for e in self.entries]

    def label_counts(self) -> np.ndarray:
        return np.array([e.map.label_count for e in self.entries])


def _entry_for(vector: Vector) -> CodebookEntry:
    from .fadespace import subspace_class

    part = build_constraints(subspace_class(vector))
    return CodebookEntry(vector, complete_map(part))


def default_workers() -> int:
    env = os.environ.get("PNC4_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def build_codebook(workers: Optional[int] = None) -> Codebook:
    """One relay map per removable subspace, in census order."""
    vectors = [s.canonical for s in removable_subspaces()]
    workers = default_workers() if workers is None else workers
    if workers <= 1:
        entries = [_entry_for(v) for v in vectors]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            entries = list(pool.map(_entry_for, vectors, chunksize=32))
    return Codebook(tuple(entries))


def _half_units(v: Vector) -> List[int]:
    return [2 * x for e in v for x in e]


def store_codebook(cb: Codebook, path) -> None:
    lines = [f"{CODEBOOK_MAGIC} {CODEBOOK_VERSION}", f"M {cb.side}", f"count {len(cb)}"]
    for e in cb.entries:
        lines.append("v " + " ".join(map(str, _half_units(e.vector))))
        lines.append("m " + " ".join(map(str, e.map.flat.tolist())))
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def _ints(line: str, tag: str, n: int, lineno: int) -> List[int]:
    fields = line.split()
    if not fields or fields[0] != tag:
        raise FormatError(f"line {lineno}: expected '{tag}' record")
    try:
        vals = [int(f) for f in fields[1:]]
    except ValueError:
        raise FormatError(f"line {lineno}: non-integer field") from None
    if len(vals) != n:
        raise FormatError(f"line {lineno}: expected {n} values, got {len(vals)}")
    return vals


def load_codebook(path) -> Codebook:
    with open(path, encoding="ascii") as fh:
        lines = fh.read().splitlines()
    if len(lines) < 3:
        raise FormatError("truncated header")
    head = lines[0].split()
    if head != [CODEBOOK_MAGIC, str(CODEBOOK_VERSION)]:
        raise FormatError(f"unrecognised header {lines[0]!r}")
    (side,) = _ints(lines[1], "M", 1, 2)
    (count,) = _ints(lines[2], "count", 1, 3)
    if side != SIDE:
        raise FormatError(f"unsupported side M={side}")
    body = lines[3:]
    if len(body) != 2 * count:
        raise FormatError(f"expected {count} entries, found {len(body) / 2:g}")
    entries = []
    n_cells = side ** N_USERS
    for k in range(count):
        lineno = 4 + 2 * k
        half = _ints(body[2 * k], "v", 2 * N_USERS, lineno)
        if any(h % 2 for h in half):
            raise FormatError(f"line {lineno}: vector entries must be whole numbers")
        vec: Vector = tuple((half[2 * i] // 2, half[2 * i + 1] // 2) for i in range(N_USERS))
        labels = _ints(body[2 * k + 1], "m", n_cells, lineno + 1)
        try:
            m = ClusterMap(np.array(labels).reshape((side,) * N_USERS))
        except ValueError as exc:
            raise FormatError(f"line {lineno + 1}: {exc}") from None
        entries.append(CodebookEntry(vec, m))
    return Codebook(tuple(entries), side)
