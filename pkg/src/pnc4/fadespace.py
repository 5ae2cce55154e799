"""Singular fade subspaces of the four-user multiple-access channel.

A pair of transmit tuples ``x != x'`` collides at the relay exactly when the
fade vector ``h`` satisfies ``sum_i h_i (x_i - x'_i) = 0``. The difference
vector therefore pins down a 3-dimensional subspace of fade states, and two
difference vectors give the same subspace iff one is a complex multiple of
the other. Everything here works on the exact Gaussian-integer difference
set, so the census is free of floating-point tolerance.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .constellation import EPS, DifferenceSet, Gaussian, difference_set, psk_constellation

N_USERS = 4

Vector = Tuple[Gaussian, ...]

# Candidate scalars as (p, q) meaning (p + q j) / 2. Any scalar mapping a
# D1/D2 entry back into D1 u D2 must have modulus 1, sqrt 2 or 1/sqrt 2 and a
# multiple-of-pi/4 phase, i.e. one of these twelve.
_HALF_SCALARS = (
    (2, 0), (-2, 0), (0, 2), (0, -2),          # +-1, +-j
    (2, 2), (2, -2), (-2, 2), (-2, -2),        # +-1 +-j
    (1, 1), (1, -1), (-1, 1), (-1, -1),        # (+-1 +-j) / 2
)


class ZeroVector(ValueError):
    pass


class DegenerateSample(RuntimeError):
    pass


def _scale(d: Gaussian, z: Tuple[int, int]) -> Optional[Gaussian]:
    re = d[0] * z[0] - d[1] * z[1]
    im = d[0] * z[1] + d[1] * z[0]
    if re % 2 or im % 2:
        return None
    return (re // 2, im // 2)


@lru_cache(maxsize=None)
def _dset() -> DifferenceSet:
    return difference_set(psk_constellation(4))


def orbit(v: Sequence[Gaussian], dset: Optional[DifferenceSet] = None) -> FrozenSet[Vector]:
    """All difference vectors spanning the same complex line as ``v``."""
    v = tuple(tuple(e) for e in v)
    if all(e == (0, 0) for e in v):
        raise ZeroVector("the zero vector spans no subspace")
    nonzero = set((dset or _dset()).nonzero)
    members = set()
    for z in _HALF_SCALARS:
        w = []
        for e in v:
            if e == (0, 0):
                w.append(e)
                continue
            s = _scale(e, z)
            if s not in nonzero:
                break
            w.append(s)
        else:
            members.add(tuple(w))
    return frozenset(members)


def canonical_representative(members: Iterable[Vector]) -> Vector:
    members = list(members)
    if not members:
        raise ValueError("empty orbit")
    return min(members)


def support(v: Vector) -> Tuple[int, ...]:
    return tuple(i for i, e in enumerate(v) if e != (0, 0))


def enumerate_difference_vectors(case_id: int, dset: Optional[DifferenceSet] = None) -> List[Vector]:
    """Every difference vector with exactly ``case_id`` nonzero coordinates."""
    if not 1 <= case_id <= N_USERS:
        raise ValueError(f"case_id must be in 1..{N_USERS}, got {case_id}")
    dset = dset or _dset()
    out = []
    for v in itertools.product(dset.all, repeat=N_USERS):
        if sum(e != (0, 0) for e in v) == case_id:
            out.append(v)
    return out


# Ordering of the two-nonzero supports, following the enumeration of the
# six equality patterns (C,D), (B,D), (B,C), (A,D), (A,C), (A,B).
_CASE2_SUPPORTS = ((2, 3), (1, 3), (1, 2), (0, 3), (0, 2), (0, 1))


@dataclass(frozen=True)
class SubspaceClass:
    """One singular fade subspace, i.e. the orthogonal complement of a line.

    ``subcase_id`` follows the case analysis: for cases 1 and 2 it names the
    coordinate arrangement; for cases 3 and 4 it counts D1 entries, with the
    top value reserved for the all-D1/all-D2 orbits (which mix both).
    """

    canonical: Vector
    orbit: FrozenSet[Vector]
    case_id: int
    subcase_id: int
    removable: bool

    @property
    def support(self) -> Tuple[int, ...]:
        return support(self.canonical)

    def as_complex(self) -> np.ndarray:
        return np.array([complex(*e) for e in self.canonical])


def _subcase(v: Vector, dset: DifferenceSet) -> int:
    sup = support(v)
    k = len(sup)
    if k == 1:
        return sup[0] + 1
    if k == 2:
        return _CASE2_SUPPORTS.index(sup) + 1
    d1 = set(dset.d1)
    n1 = sum(v[i] in d1 for i in sup)
    return n1 if 0 < n1 < k else k


def classify_removable(s: SubspaceClass) -> bool:
    return s.case_id == N_USERS


def _make_class(members: FrozenSet[Vector], dset: DifferenceSet) -> SubspaceClass:
    canon = canonical_representative(members)
    case_id = len(support(canon))
    return SubspaceClass(
        canonical=canon,
        orbit=members,
        case_id=case_id,
        subcase_id=_subcase(canon, dset),
        removable=case_id == N_USERS,
    )


def subspace_class(v: Sequence[Gaussian]) -> SubspaceClass:
    """The class whose orbit contains ``v``."""
    dset = _dset()
    return _make_class(orbit(v, dset), dset)


@lru_cache(maxsize=None)
def _census() -> Tuple[SubspaceClass, ...]:
    dset = _dset()
    seen: Dict[Vector, SubspaceClass] = {}
    classes = []
    for case_id in range(1, N_USERS + 1):
        for v in enumerate_difference_vectors(case_id, dset):
            if v in seen:
                continue
            cls = _make_class(orbit(v, dset), dset)
            for w in cls.orbit:
                seen[w] = cls
            classes.append(cls)
    classes.sort(key=lambda c: (c.case_id, c.subcase_id, c.support, c.canonical))
    return tuple(classes)


def enumerate_singular_subspaces(case_id: Optional[int] = None) -> List[SubspaceClass]:
    """Partition all nonzero difference vectors into subspace classes.

    Classes come back sorted by (case, subcase, support, canonical vector),
    which fixes the codebook index of every removable class.
    """
    classes = _census()
    if case_id is None:
        return list(classes)
    return [c for c in classes if c.case_id == case_id]


def removable_subspaces() -> List[SubspaceClass]:
    return [c for c in _census() if c.removable]


# -- difference-vector lookup table -----------------------------------------

@lru_cache(maxsize=None)
def difference_vectors() -> np.ndarray:
    """All ``9**4`` difference vectors as a complex ``(6561, 4)`` array.

    Row ``r`` is the vector whose coordinates have D-indices given by the
    base-9 digits of ``r`` (most significant first); row 0 is zero.
    """
    dc = _dset().as_complex()
    n = len(dc)
    idx = np.array(list(itertools.product(range(n), repeat=N_USERS)))
    out = dc[idx]
    out.setflags(write=False)
    return out


def vector_index(v: Vector) -> int:
    dset = _dset()
    r = 0
    for e in v:
        r = r * len(dset.all) + dset.index(tuple(e))
    return r


def sample_subspace_point(s: SubspaceClass, seed=None, max_tries: int = 100) -> np.ndarray:
    """A random unit-norm fade state on ``s`` that lies on no other subspace.

    The bilinear form ``h . v`` is used without conjugation. Genericity is
    checked against every nonzero difference vector outside the orbit.
    """
    rng = np.random.default_rng(seed)
    v = s.as_complex()
    # complex null space of the 1x4 row v^T
    _, _, vh = np.linalg.svd(v[None, :])
    basis = vh[1:].T
    basis = basis.conj()  # rows of vh are conjugated right-singular vectors
    allv = difference_vectors()[1:]
    own = np.zeros(len(allv) + 1, dtype=bool)
    for w in s.orbit:
        own[vector_index(w)] = True
    own = own[1:]
    for _ in range(max_tries):
        coef = rng.standard_normal(3) + 1j * rng.standard_normal(3)
        h = basis @ coef
        h /= np.linalg.norm(h)
        proj = np.abs(allv @ h)
        if np.all(proj[own] < EPS) and np.all(proj[~own] > EPS):
            return h
    raise DegenerateSample(f"no generic point found on {s.canonical} after {max_tries} tries")


def effective_cardinality(h: Sequence[complex], decimals: int = 9) -> int:
    """Number of distinct superposition points (rounded to ``decimals``)."""
    from .selection import effective_constellation

    pts = effective_constellation(h)
    return len(set(zip(np.round(pts.real, decimals), np.round(pts.imag, decimals))))
