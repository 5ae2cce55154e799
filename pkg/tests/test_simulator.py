import itertools
import math

import numpy as np
import pytest

from pnc4.hypercube import cell_coords, table2_map, trivial_map
from pnc4.selection import UnknownLabel, effective_constellation
from pnc4.simulator import (
    CSV_HEADER,
    BCMode,
    ConfigError,
    Scheme,
    SimConfig,
    SNRPoint,
    bc_phase,
    complex_noise,
    decode_at_node,
    label_ring,
    ma_phase,
    ml_detect,
    ml_detect_cells,
    rician_sample,
    run_ber,
    run_throughput,
    simulate,
    snr_range,
)

from conftest import GENERIC_H

ALL_TUPLES = cell_coords()


def ml_oracle(y, h):
    pts = np.array([1, 1j, -1, -1j])
    best, arg = np.inf, None
    for x in itertools.product(range(4), repeat=4):  # lexicographic order
        d = abs(y - sum(h[i] * pts[x[i]] for i in range(4)))
        if d < best:
            best, arg = d, x
    return arg


# -- fading and noise --------------------------------------------------------------

@pytest.mark.parametrize("k_db", [-math.inf, 0.0, 10.0, 20.0])
def test_rician_unit_power(k_db, rng):
    h = rician_sample(k_db, rng, 100_000)
    assert abs(np.mean(np.abs(h) ** 2) - 1) < 0.02


def test_rician_pure_los(rng):
    np.testing.assert_allclose(np.abs(rician_sample(math.inf, rng, 1000)), 1)
    assert np.abs(rician_sample(80.0, rng, 1000)).std() < 1e-3


def test_rayleigh_limit(rng):
    h = rician_sample(-math.inf, rng, 100_000)
    assert abs(h.mean()) < 0.02
    # |H|^2 is exponential with unit mean: variance 1
    assert abs(np.var(np.abs(h) ** 2) - 1) < 0.05


def test_los_dominates_at_high_k(rng):
    h = rician_sample(20.0, rng, 50_000)
    k = 100.0
    assert abs(np.var(np.abs(h)) - 1 / (2 * (k + 1))) < 2e-3


def test_ma_phase_noiseless(rng):
    assert ma_phase((0, 0, 0, 0), [1, 1, 1, 1], 0.0, rng) == 4
    h = np.array([0.3 + 0.2j, -1, 0.5j, 2])
    np.testing.assert_allclose(ma_phase(ALL_TUPLES, h, 0.0, rng), effective_constellation(h))


@pytest.mark.parametrize("snr_db", [0.0, 10.0, 25.0])
def test_noise_calibration(snr_db, rng):
    sigma = 10 ** (-snr_db / 20)
    x = np.zeros((100_000, 4), dtype=int)
    y = ma_phase(x, [1, 0, 0, 0], sigma, rng)
    measured = 10 * np.log10(1 / np.mean(np.abs(y - 1) ** 2))
    assert abs(measured - snr_db) < 0.1


def test_noise_is_circular(rng):
    z = complex_noise(1.0, rng, 100_000)
    assert abs(np.var(z.real) - 0.5) < 0.01 and abs(np.var(z.imag) - 0.5) < 0.01
    assert abs(np.mean(z.real * z.imag)) < 0.01


# -- detection ---------------------------------------------------------------------

def test_ml_detect_recovers_every_tuple_without_noise():
    y = effective_constellation(GENERIC_H)
    np.testing.assert_array_equal(ml_detect_cells(y, GENERIC_H), np.arange(256))
    assert ml_detect(y[77], GENERIC_H) == tuple(ALL_TUPLES[77])


def test_ml_detect_tie_goes_to_smaller_tuple():
    h = [1, 0, 0, 0]
    # midway between 1 and j: tuples (0, ...) and (1, ...) tie, and every
    # continuation ties too, so the smallest tuple overall wins
    assert ml_detect((1 + 1j) / 2, h) == (0, 0, 0, 0)
    assert ml_detect((-1 - 1j) / 2, h) == (2, 0, 0, 0)


def test_ml_detect_matches_oracle(rng):
    for _ in range(30):
        h = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        y = complex(rng.standard_normal() * 3, rng.standard_normal() * 3)
        assert ml_detect(y, h) == ml_oracle(y, h)


# -- broadcast and decoding ------------------------------------------------------------

def test_label_ring():
    for t in (64, 71, 90):
        ring = label_ring(t)
        assert len(ring) == t
        np.testing.assert_allclose(np.abs(ring), 1)
        np.testing.assert_allclose(np.abs(np.diff(np.angle(ring) % (2 * np.pi))), 2 * np.pi / t, atol=1e-12)


@pytest.fixture(params=["table2", "codebook0", "codebook500"])
def relay_map(request, codebook):
    if request.param == "table2":
        return table2_map()
    return codebook[int(request.param[8:])].map


@pytest.mark.parametrize("mode", list(BCMode))
def test_decode_inverts_without_noise(relay_map, mode, rng):
    labels = relay_map.flat
    for node in range(4):
        rx = bc_phase(labels, relay_map, 1.0, 0.0, rng, mode)
        dec = decode_at_node(rx, node, ALL_TUPLES[:, node], relay_map, mode)
        np.testing.assert_array_equal(dec, ALL_TUPLES)


def test_decode_with_bc_fade(relay_map, rng):
    hp = 0.4 - 0.9j
    rx = bc_phase(relay_map.flat, relay_map, hp, 0.0, rng, BCMode.MODULATED)
    dec = decode_at_node(rx, 2, ALL_TUPLES[:, 2], relay_map, BCMode.MODULATED, hp)
    np.testing.assert_array_equal(dec, ALL_TUPLES)


def test_ideal_fallback_on_inconsistent_label(codebook):
    m = max(codebook.maps(), key=lambda m: m.t)
    flat = m.flat
    own_plane = set(flat[ALL_TUPLES[:, 0] == 0])
    missing = [lab for lab in range(1, m.t + 1) if lab not in own_plane]
    assert missing
    dec = decode_at_node(np.array(missing), 0, 0, m, BCMode.IDEAL)
    assert np.all(dec[:, 0] == 0)
    ring = label_ring(m.t)
    for lab, row in zip(missing, dec):
        got = flat[row @ np.array([64, 16, 4, 1])]
        best = min(abs(ring[lab - 1] - ring[c - 1]) for c in own_plane)
        assert abs(abs(ring[lab - 1] - ring[got - 1]) - best) < 1e-12


def test_unknown_label(rng):
    m = table2_map()
    with pytest.raises(UnknownLabel):
        bc_phase([65], m, 1.0, 0.0, rng, BCMode.IDEAL)
    with pytest.raises(UnknownLabel):
        decode_at_node(np.array([0]), 0, 0, m, BCMode.IDEAL)


# -- configuration ------------------------------------------------------------------

@pytest.mark.parametrize("kw", [
    {"snr_db_list": ()},
    {"frame_bits": 255},
    {"frame_bits": 0},
    {"frames_per_snr": 0},
    {"seed": -1},
    {"seed": 2**64},
    {"workers": 0},
])
def test_config_validation(kw):
    base = {"snr_db_list": (10.0,)}
    base.update(kw)
    with pytest.raises(ConfigError):
        SimConfig(**base)


def test_config_coerces_enums():
    cfg = SimConfig((5,), scheme="nonadaptive3", bc_mode="modulated")
    assert cfg.scheme is Scheme.NONADAPTIVE3 and cfg.bc_mode is BCMode.MODULATED
    assert cfg.symbols_per_frame == 128


def test_adaptive_needs_codebook():
    with pytest.raises(ConfigError):
        simulate(SimConfig((10,), scheme=Scheme.ADAPTIVE))


def test_snr_range():
    assert snr_range(0, 40, 10) == (0.0, 10.0, 20.0, 30.0, 40.0)
    assert snr_range(0, 1, 0.25) == (0.0, 0.25, 0.5, 0.75, 1.0)
    with pytest.raises(ConfigError):
        snr_range(0, 10, 0)
    with pytest.raises(ConfigError):
        snr_range(10, 0, 1)


def test_snr_point_statistics():
    p = SNRPoint(10.0, 1000, 100, 400)
    assert p.ber == 0.1
    assert abs(p.ci95 - 1.959963984540054 * math.sqrt(0.09 / 1000)) < 1e-15
    assert p.throughput == 900 / 400


# -- end to end ----------------------------------------------------------------------

@pytest.mark.parametrize("scheme", list(Scheme))
@pytest.mark.parametrize("mode", list(BCMode))
def test_noiseless_runs_are_error_free(codebook, scheme, mode):
    cfg = SimConfig((300.0,), scheme=scheme, frames_per_snr=4, frame_bits=64, bc_mode=mode)
    res = simulate(cfg, codebook)
    assert res.points[0].bit_errors == 0


def test_error_free_throughput_ratio(codebook):
    cfg = dict(snr_db_list=(300.0,), frames_per_snr=2, frame_bits=64)
    two = simulate(SimConfig(scheme=Scheme.NONADAPTIVE2, **cfg)).points[0].throughput
    three = simulate(SimConfig(scheme=Scheme.NONADAPTIVE3, **cfg)).points[0].throughput
    assert two == 12.0 and three == 8.0
    assert two / three == 1.5


def test_zero_noise_every_tuple_every_node():
    h = GENERIC_H / np.linalg.norm(GENERIC_H)
    detected = ALL_TUPLES[ml_detect_cells(effective_constellation(h), h)]
    m = table2_map()
    labels = m.flat[detected @ np.array([64, 16, 4, 1])]
    for node in range(4):
        dec = decode_at_node(labels, node, ALL_TUPLES[:, node], m, BCMode.IDEAL)
        np.testing.assert_array_equal(dec, ALL_TUPLES)


def test_ber_falls_with_snr(codebook):
    res = run_ber(SimConfig((0.0, 30.0), scheme=Scheme.ADAPTIVE, frames_per_snr=10, seed=3), codebook)
    assert 0 <= res.points[1].ber < res.points[0].ber <= 1


@pytest.mark.parametrize("scheme", list(Scheme))
def test_same_seed_same_result(codebook, scheme):
    cfg = SimConfig((10.0, 20.0), scheme=scheme, frames_per_snr=6, seed=11, bc_mode=BCMode.MODULATED)
    assert simulate(cfg, codebook) == simulate(cfg, codebook)


def test_worker_count_does_not_change_results(codebook):
    cfg = SimConfig((15.0, 25.0), scheme=Scheme.ADAPTIVE, frames_per_snr=8, seed=5)
    one = simulate(cfg, codebook)
    two = simulate(SimConfig(**{**cfg.__dict__, "workers": 2}), codebook)
    assert one == two


def test_different_seeds_differ(codebook):
    a = simulate(SimConfig((5.0,), scheme=Scheme.NONADAPTIVE2, frames_per_snr=5, seed=1))
    b = simulate(SimConfig((5.0,), scheme=Scheme.NONADAPTIVE2, frames_per_snr=5, seed=2))
    assert a != b


@pytest.mark.parametrize("mode", list(BCMode))
def test_forcing_the_fixed_map_reproduces_the_nonadaptive_scheme(mode):
    kw = dict(snr_db_list=(5.0, 15.0, 25.0), frames_per_snr=8, seed=9, bc_mode=mode)
    forced = simulate(SimConfig(scheme=Scheme.ADAPTIVE, **kw), choose=lambda h: table2_map())
    fixed = simulate(SimConfig(scheme=Scheme.NONADAPTIVE2, **kw))
    assert forced.points == fixed.points


def test_chooser_sees_each_frame_fade(codebook):
    seen = []

    def choose(h):
        seen.append(np.array(h))
        return trivial_map()

    simulate(SimConfig((10.0,), scheme=Scheme.ADAPTIVE, frames_per_snr=3, frame_bits=8), choose=choose)
    assert len(seen) == 3 and all(h.shape == (4,) for h in seen)
    assert not np.allclose(seen[0], seen[1])


def test_throughput_and_ber_share_the_run(codebook):
    cfg = SimConfig((20.0,), scheme=Scheme.NONADAPTIVE3, frames_per_snr=4)
    assert run_ber(cfg) == run_throughput(cfg)


def test_low_error_warning(caplog):
    with caplog.at_level("WARNING"):
        simulate(SimConfig((300.0,), scheme=Scheme.NONADAPTIVE2, frames_per_snr=1, frame_bits=8))
    assert "bit errors" in caplog.text


def test_csv_rows():
    res = simulate(SimConfig((20.0,), scheme=Scheme.NONADAPTIVE2, frames_per_snr=2))
    (row,) = res.csv_rows()
    assert len(row) == len(CSV_HEADER)
    assert row[0] == "20" and row[1] == "nonadaptive2"
    assert int(row[2]) == 2 * 12 * 256
