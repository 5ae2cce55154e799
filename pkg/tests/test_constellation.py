import itertools
import math

import numpy as np
import pytest

from pnc4.constellation import (
    EPS,
    LengthMismatch,
    UnsupportedOrder,
    bits_to_symbol,
    difference_set,
    psk_constellation,
    symbol_to_bits,
)


@pytest.fixture
def qpsk():
    return psk_constellation(4)


def test_qpsk_point_order(qpsk):
    np.testing.assert_allclose(qpsk.points, [1, 1j, -1, -1j], atol=EPS)
    assert qpsk.bit_width == 2 and len(qpsk) == 4


def test_bpsk_points():
    np.testing.assert_allclose(psk_constellation(2).points, [1, -1], atol=EPS)


@pytest.mark.parametrize("order", [1, 3, 8, 16])
def test_unsupported_orders(order):
    with pytest.raises(UnsupportedOrder):
        psk_constellation(order)


def test_points_unit_modulus_and_distinct(qpsk):
    pts = qpsk.points
    assert np.allclose(np.abs(pts), 1, atol=EPS)
    assert len({(round(p.real, 9), round(p.imag, 9)) for p in pts}) == 4


def test_points_are_read_only(qpsk):
    with pytest.raises(ValueError):
        qpsk.points[0] = 5


@pytest.mark.parametrize("bits, symbol", [((0, 0), 1), ((0, 1), 1j), ((1, 1), -1), ((1, 0), -1j)])
def test_gray_labelling(qpsk, bits, symbol):
    assert abs(bits_to_symbol(qpsk, bits) - symbol) < EPS
    assert symbol_to_bits(qpsk, symbol) == bits


def test_adjacent_points_differ_in_one_bit(qpsk):
    for k in range(4):
        a, b = qpsk.labels[k], qpsk.labels[(k + 1) % 4]
        assert sum(x != y for x, y in zip(a, b)) == 1


@pytest.mark.parametrize("order", [2, 4])
def test_bit_mapping_is_bijective(order):
    c = psk_constellation(order)
    seen = set()
    for bits in itertools.product((0, 1), repeat=c.bit_width):
        s = c.bits_to_symbol(bits)
        assert c.symbol_to_bits(s) == bits
        seen.add((round(s.real, 9), round(s.imag, 9)))
    assert len(seen) == order


@pytest.mark.parametrize("bits", [(0,), (0, 1, 1), ()])
def test_wrong_bit_length(qpsk, bits):
    with pytest.raises(LengthMismatch):
        qpsk.bits_to_symbol(bits)


def test_symbol_not_in_constellation(qpsk):
    with pytest.raises(ValueError):
        qpsk.symbol_to_bits(0.5 + 0.5j)


def test_bit_table_rows(qpsk):
    tab = qpsk.bit_table()
    assert tab.shape == (4, 2)
    assert [tuple(r) for r in tab] == [(0, 0), (0, 1), (1, 1), (1, 0)]


class TestDifferenceSet:
    @pytest.fixture
    def dset(self, qpsk):
        return difference_set(qpsk)

    def test_members(self, dset):
        want = {(0, 0), (1, 1), (1, -1), (-1, 1), (-1, -1), (2, 0), (-2, 0), (0, 2), (0, -2)}
        assert set(dset.all) == want and len(dset.all) == 9

    def test_partition(self, dset):
        assert set(dset.d1) == {(1, 1), (1, -1), (-1, 1), (-1, -1)}
        assert set(dset.d2) == {(2, 0), (-2, 0), (0, 2), (0, -2)}
        assert set(dset.all) == {(0, 0)} | set(dset.d1) | set(dset.d2)
        assert not set(dset.d1) & set(dset.d2)

    def test_closed_under_negation(self, dset):
        assert all((-a, -b) in dset.all for a, b in dset.all)

    def test_every_pair_difference_is_a_member(self, qpsk, dset):
        for s, t in itertools.product(qpsk.exact, repeat=2):
            assert (s[0] - t[0], s[1] - t[1]) in dset.all

    def test_moduli(self, dset):
        assert all(math.isclose(abs(complex(*d)), math.sqrt(2)) for d in dset.d1)
        assert all(math.isclose(abs(complex(*d)), 2) for d in dset.d2)

    def test_polar_form(self, dset):
        for d, (n, phase) in dset.polar.items():
            z = 2 * math.sin(math.pi * n / 4) * complex(math.cos(phase), math.sin(phase))
            assert abs(z - complex(*d)) < EPS
        assert {dset.polar[d][0] for d in dset.d1} == {1}
        assert {dset.polar[d][0] for d in dset.d2} == {2}

    def test_index_round_trip(self, dset):
        assert dset.index((0, 0)) == 0
        assert [dset.index(d) for d in dset.all] == list(range(9))

    def test_as_complex(self, dset):
        np.testing.assert_allclose(dset.as_complex(), [complex(*d) for d in dset.all])
