"""M-PSK signal-set algebra for the end nodes.

Constellation points for the supported orders are Gaussian integers, so the
difference set is kept in exact integer form: every element is a pair
``(re, im)`` of small ints. Floating views are produced on demand.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, Sequence, Tuple

import numpy as np

EPS = 1e-9

Gaussian = Tuple[int, int]

# Gray labelling: adjacent points differ in exactly one bit.
_GRAY = {2: ((0,), (1,)), 4: ((0, 0), (0, 1), (1, 1), (1, 0))}


class UnsupportedOrder(ValueError):
    pass


class LengthMismatch(ValueError):
    pass


def _unit_point(k: int, order: int) -> Gaussian:
    # e^{j 2 pi k / M} for M in {2, 4}; both are Gaussian integers.
    quarter = (k * 4 // order) % 4
    return ((1, 0), (0, 1), (-1, 0), (0, -1))[quarter]


@dataclass(frozen=True)
class Constellation:
    """Ordered M-PSK point set with a fixed bit labelling.

    Index ``k`` carries the point ``exp(2j*pi*k/M)``; for M=4 the order is
    ``(1, j, -1, -j)``, which is also the ``0, 1, 2, 3`` symbol numbering
    used for relay-map cells.
    """

    order: int
    exact: Tuple[Gaussian, ...]
    labels: Tuple[Tuple[int, ...], ...]

    @property
    def bit_width(self) -> int:
        return int(math.log2(self.order))

    @property
    def points(self) -> np.ndarray:
        pts = np.array([complex(re, im) for re, im in self.exact])
        pts.setflags(write=False)
        return pts

    def __len__(self) -> int:
        return self.order

    def bits_to_index(self, bits: Sequence[int]) -> int:
        bits = tuple(int(b) for b in bits)
        if len(bits) != self.bit_width:
            raise LengthMismatch(f"expected {self.bit_width} bits, got {len(bits)}")
        try:
            return self.labels.index(bits)
        except ValueError:
            raise ValueError(f"not a bit tuple: {bits}") from None

    def bits_to_symbol(self, bits: Sequence[int]) -> complex:
        return complex(*self.exact[self.bits_to_index(bits)])

    def symbol_to_bits(self, symbol: complex) -> Tuple[int, ...]:
        for k, (re, im) in enumerate(self.exact):
            if abs(symbol - complex(re, im)) < EPS:
                return self.labels[k]
        raise ValueError(f"{symbol!r} is not a constellation point")

    def bit_table(self) -> np.ndarray:
        """``(M, bit_width)`` array; row ``k`` holds the bits of point ``k``."""
        return np.array(self.labels, dtype=np.int8)


def psk_constellation(order: int = 4) -> Constellation:
    if order not in _GRAY:
        raise UnsupportedOrder(f"M={order} is not supported (only M in {{2, 4}})")
    exact = tuple(_unit_point(k, order) for k in range(order))
    return Constellation(order, exact, _GRAY[order])


def bits_to_symbol(c: Constellation, bits: Sequence[int]) -> complex:
    return c.bits_to_symbol(bits)


def symbol_to_bits(c: Constellation, symbol: complex) -> Tuple[int, ...]:
    return c.symbol_to_bits(symbol)


@dataclass(frozen=True)
class DifferenceSet:
    """``{s - s'}`` over the constellation, split into ``{0}``, D1 and D2.

    ``polar`` maps every nonzero element to ``(n, phase_index)`` such that
    ``d = 2 sin(pi n / M) * exp(j * phase)``; for M=4, D1 (n=1) sits on the
    diagonals ``pi/4 + k pi/2`` and D2 (n=2) on the axes ``k pi/2``.
    """

    order: int
    all: Tuple[Gaussian, ...]
    d1: Tuple[Gaussian, ...]
    d2: Tuple[Gaussian, ...]
    polar: Dict[Gaussian, Tuple[int, float]] = field(repr=False)

    @property
    def nonzero(self) -> Tuple[Gaussian, ...]:
        return tuple(d for d in self.all if d != (0, 0))

    def index(self, d: Gaussian) -> int:
        return self.all.index(d)

    def as_complex(self) -> np.ndarray:
        return np.array([complex(re, im) for re, im in self.all])


def difference_set(c: Constellation) -> DifferenceSet:
    diffs = {(a[0] - b[0], a[1] - b[1]) for a in c.exact for b in c.exact}
    # zero first, then by modulus class, then by angle for a stable order
    def key(d):
        return (d[0] ** 2 + d[1] ** 2, math.atan2(d[1], d[0]) % (2 * math.pi))

    ordered = tuple(sorted(diffs, key=key))
    polar = {}
    d1, d2 = [], []
    for d in ordered:
        if d == (0, 0):
            continue
        r = math.hypot(*d)
        n = round(math.asin(min(1.0, r / 2)) * c.order / math.pi)
        if abs(2 * math.sin(math.pi * n / c.order) - r) > EPS:
            raise AssertionError(f"difference {d} has no polar form")
        polar[d] = (n, math.atan2(d[1], d[0]) % (2 * math.pi))
        (d1 if n == 1 else d2).append(d)
    return DifferenceSet(c.order, ordered, tuple(d1), tuple(d2), polar)
