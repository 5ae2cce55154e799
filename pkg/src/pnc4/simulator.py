"""Monte Carlo link simulation of four-way relaying.

SNR convention: every node and the relay transmit unit-energy symbols and
all receivers see CN(0, sigma^2) noise, so ``SNR = 1 / sigma^2``. Fades are
block-constant over a frame and redrawn per frame for all eight links.

Random streams are keyed by ``(seed, snr index, frame index)`` only, so the
three schemes see the same bits, fades and noise draws, and any split of
frames across workers reproduces the single-worker result.
"""

from __future__ import annotations

import enum
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

import numpy as np

from .constellation import psk_constellation
from .hypercube import ClusterMap, Codebook, cell_coords, table2_map
from .selection import MapSelector, UnknownLabel, tuple_points

log = logging.getLogger(__name__)

N_NODES = 4
Z95 = 1.959963984540054


class ConfigError(ValueError):
    pass


class Scheme(str, enum.Enum):
    ADAPTIVE = "adaptive"
    NONADAPTIVE2 = "nonadaptive2"
    NONADAPTIVE3 = "nonadaptive3"

    @property
    def channel_uses(self) -> int:
        return 3 if self is Scheme.NONADAPTIVE3 else 2


class BCMode(str, enum.Enum):
    IDEAL = "ideal"
    MODULATED = "modulated"


@dataclass(frozen=True)
class SimConfig:
    snr_db_list: Tuple[float, ...]
    scheme: Scheme = Scheme.ADAPTIVE
    rician_k_db: float = 20.0
    frame_bits: int = 256
    frames_per_snr: int = 200
    seed: int = 0
    bc_mode: BCMode = BCMode.IDEAL
    workers: int = 1

    def __post_init__(self):
        object.__setattr__(self, "snr_db_list", tuple(float(s) for s in self.snr_db_list))
        object.__setattr__(self, "scheme", Scheme(self.scheme))
        object.__setattr__(self, "bc_mode", BCMode(self.bc_mode))
        if not self.snr_db_list:
            raise ConfigError("at least one SNR point is required")
        if self.frame_bits <= 0 or self.frame_bits % 2:
            raise ConfigError("frame_bits must be a positive multiple of 2")
        if self.frames_per_snr < 1:
            raise ConfigError("frames_per_snr must be >= 1")
        if not 0 <= self.seed < 2 ** 64:
            raise ConfigError("seed must fit in 64 bits")
        if self.workers < 1:
            raise ConfigError("workers must be >= 1")

    @property
    def symbols_per_frame(self) -> int:
        return self.frame_bits // 2


@dataclass(frozen=True)
class SNRPoint:
    snr_db: float
    bits: int
    bit_errors: int
    channel_uses: int

    @property
    def ber(self) -> float:
        return self.bit_errors / self.bits

    @property
    def ci95(self) -> float:
        p = self.ber
        return Z95 * math.sqrt(p * (1 - p) / self.bits)

    @property
    def throughput(self) -> float:
        """Correctly delivered information bits per channel use."""
        return (self.bits - self.bit_errors) / self.channel_uses


@dataclass(frozen=True)
class SimResult:
    scheme: Scheme
    points: Tuple[SNRPoint, ...]

    def csv_rows(self) -> List[List[str]]:
        rows = []
        for p in self.points:
            rows.append([
                f"{p.snr_db:g}", self.scheme.value, str(p.bits), str(p.bit_errors),
                f"{p.ber:.6e}", f"{p.ci95:.6e}", f"{p.throughput:.6f}",
            ])
        return rows


CSV_HEADER = ["snr_db", "scheme", "bits", "bit_errors", "ber", "ci95", "throughput"]


# -- channel primitives ------------------------------------------------------

def rician_sample(k_db: float, rng: np.random.Generator, size=None):
    """Unit-power Rician fade: random-phase LOS plus CN(0, 1/(K+1)) scatter."""
    if k_db == math.inf:
        los, nlos = 1.0, 0.0
    else:
        k = 0.0 if k_db == -math.inf else 10.0 ** (k_db / 10.0)
        los, nlos = math.sqrt(k / (k + 1.0)), math.sqrt(1.0 / (k + 1.0))
    theta = rng.uniform(0.0, 2 * math.pi, size)
    scatter = (rng.standard_normal(size) + 1j * rng.standard_normal(size)) / math.sqrt(2.0)
    return los * np.exp(1j * theta) + nlos * scatter


def complex_noise(sigma: float, rng: np.random.Generator, size=None):
    return sigma * (rng.standard_normal(size) + 1j * rng.standard_normal(size)) / math.sqrt(2.0)


def ma_phase(x, h, sigma: float, rng: np.random.Generator):
    """Relay observation(s) for symbol tuple(s) ``x`` (index form, last axis 4)."""
    x = np.asarray(x)
    pts = psk_constellation(4).points[x]
    y = pts @ np.asarray(h, dtype=complex)
    return y + complex_noise(sigma, rng, np.shape(y))


def ml_detect_cells(y, h) -> np.ndarray:
    """Flat cell index of the nearest superposition point; lowest index on ties."""
    pts = tuple_points() @ np.asarray(h, dtype=complex)
    y = np.atleast_1d(np.asarray(y, dtype=complex))
    return np.abs(y[:, None] - pts[None, :]).argmin(axis=1)


def ml_detect(y, h) -> Tuple[int, ...]:
    cell = int(ml_detect_cells([y], h)[0])
    return tuple(int(v) for v in cell_coords()[cell])


def label_ring(t: int) -> np.ndarray:
    """Equal-energy t-PSK used to broadcast labels ``1..t``."""
    return np.exp(2j * math.pi * np.arange(t) / t)


def bc_phase(labels, m: ClusterMap, h_prime: complex, sigma: float, rng, mode: BCMode):
    """Relay transmission of ``labels`` as seen by one receiver."""
    labels = np.asarray(labels)
    if np.any((labels < 1) | (labels > m.flat.max())):
        raise UnknownLabel("label not present in the relay map")
    if BCMode(mode) is BCMode.IDEAL:
        return labels.copy()
    x_r = label_ring(int(m.flat.max()))[labels - 1]
    return h_prime * x_r + complex_noise(sigma, rng, np.shape(x_r))


def decode_at_node(received, node: int, own, m: ClusterMap, mode: BCMode, h_prime: complex = 1.0):
    """Recover the other users' symbols at ``node`` from the relay signal.

    Only the 64 cells with ``x_node == own`` are candidates; the exclusive
    law makes their labels distinct. Ideal mode matches the label exactly,
    modulated mode picks the candidate nearest in the received plane.
    Returns ``(n, 4)`` symbol tuples (the own coordinate is echoed back).
    """
    coords = cell_coords()
    flat = m.flat
    received = np.atleast_1d(received)
    own = np.broadcast_to(np.asarray(own), received.shape)
    out = np.empty(received.shape + (4,), dtype=np.int64)
    ring = label_ring(int(flat.max())) if BCMode(mode) is BCMode.MODULATED else None
    for s in np.unique(own):
        sel = own == s
        cand = np.flatnonzero(coords[:, node] == s)
        cand_labels = flat[cand]
        if ring is None:
            lookup = np.full(flat.max() + 1, -1, dtype=np.int64)
            lookup[cand_labels] = cand
            rx = received[sel].astype(np.int64)
            if np.any((rx < 1) | (rx > flat.max())):
                raise UnknownLabel("label not present in the relay map")
            cells = lookup[rx]
            bad = cells < 0
            if bad.any():
                # a relay detection error can leave this hyperplane; fall
                # back to the consistent label nearest on the label ring
                ring_t = label_ring(int(flat.max()))
                near = np.abs(ring_t[rx[bad] - 1][:, None] - ring_t[cand_labels - 1][None, :]).argmin(axis=1)
                cells[bad] = cand[near]
        else:
            ref = h_prime * ring[cand_labels - 1]
            cells = cand[np.abs(received[sel][:, None] - ref[None, :]).argmin(axis=1)]
        out[sel] = coords[cells]
    return out


# -- frame loop --------------------------------------------------------------

MapChooser = Callable[[np.ndarray], ClusterMap]


@dataclass
class _Context:
    cfg: SimConfig
    choose: Optional[MapChooser]
    fixed: ClusterMap


_CTX: Optional[_Context] = None


def _frame_rng(seed: int, snr_idx: int, frame: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(snr_idx, frame))))


def _index_of_bits() -> np.ndarray:
    c = psk_constellation(4)
    return np.array([c.bits_to_index(((v >> 1) & 1, v & 1)) for v in range(4)])


def _bits_of(cells_sym: np.ndarray) -> np.ndarray:
    return psk_constellation(4).bit_table()[cells_sym]


def _run_frame(ctx: _Context, snr_idx: int, frame: int) -> int:
    """Bit errors over all (node, other user) pairs in one frame."""
    cfg = ctx.cfg
    rng = _frame_rng(cfg.seed, snr_idx, frame)
    sigma = 10.0 ** (-cfg.snr_db_list[snr_idx] / 20.0)
    n = cfg.symbols_per_frame
    bits = rng.integers(0, 2, size=(n, N_NODES, 2))
    h = rician_sample(cfg.rician_k_db, rng, N_NODES)
    h_bc = rician_sample(cfg.rician_k_db, rng, N_NODES)
    sym = _index_of_bits()[bits[..., 0] * 2 + bits[..., 1]]
    ma_noise = complex_noise(sigma, rng, (2, n))
    bc_noise = complex_noise(sigma, rng, (N_NODES, n))

    pts = psk_constellation(4).points
    if cfg.scheme is Scheme.NONADAPTIVE3:
        # A+B in one use, C+D in the next, each detected over 16 points
        m = ctx.fixed
        pair_pts = pts[cell_coords()[:16, 2:]]  # (x, y) pairs in index order
        detected = np.empty((n, 4), dtype=np.int64)
        for k, (u, v) in enumerate(((0, 1), (2, 3))):
            y = pts[sym[:, u]] * h[u] + pts[sym[:, v]] * h[v] + ma_noise[k]
            ref = pair_pts @ h[[u, v]]
            pair = np.abs(y[:, None] - ref[None, :]).argmin(axis=1)
            detected[:, u], detected[:, v] = pair // 4, pair % 4
        mode = BCMode.IDEAL
    else:
        m = ctx.fixed if ctx.choose is None else ctx.choose(h)
        y = pts[sym] @ h + ma_noise[0]
        detected = cell_coords()[ml_detect_cells(y, h)]
        mode = cfg.bc_mode

    flat = m.flat
    tx_labels = flat[(detected * np.array([64, 16, 4, 1])).sum(axis=1)]
    errors = 0
    for node in range(N_NODES):
        if mode is BCMode.IDEAL:
            rx = tx_labels
        else:
            rx = h_bc[node] * label_ring(int(flat.max()))[tx_labels - 1] + bc_noise[node]
        dec = decode_at_node(rx, node, sym[:, node], m, mode, h_bc[node])
        others = [u for u in range(N_NODES) if u != node]
        errors += int((_bits_of(dec[:, others]) != bits[:, others]).sum())
    return errors


def _init_worker(ctx: _Context) -> None:
    global _CTX
    _CTX = ctx


def _run_chunk(args) -> int:
    snr_idx, frames = args
    return sum(_run_frame(_CTX, snr_idx, f) for f in frames)


def _make_context(cfg: SimConfig, codebook: Optional[Codebook], choose: Optional[MapChooser]) -> _Context:
    if cfg.scheme is Scheme.ADAPTIVE and choose is None:
        if codebook is None or len(codebook) == 0:
            raise ConfigError("the adaptive scheme needs a non-empty codebook")
        selector = MapSelector(codebook)
        choose = _SelectorChooser(selector)
    if cfg.scheme is not Scheme.ADAPTIVE:
        choose = None
    return _Context(cfg, choose, table2_map())


@dataclass
class _SelectorChooser:
    selector: MapSelector

    def __call__(self, h):
        k, _ = self.selector.select(h)
        return self.selector.codebook[k].map


def simulate(cfg: SimConfig, codebook: Optional[Codebook] = None, choose: Optional[MapChooser] = None) -> SimResult:
    """Run every SNR point of ``cfg``.

    ``choose`` overrides adaptive map selection (fade state -> map); it is
    ignored by the non-adaptive schemes.
    """
    ctx = _make_context(cfg, codebook, choose)
    n_frames = cfg.frames_per_snr
    bits_per_frame = N_NODES * (N_NODES - 1) * cfg.frame_bits
    uses_per_frame = cfg.scheme.channel_uses * cfg.symbols_per_frame
    errors = []
    if cfg.workers <= 1:
        for i in range(len(cfg.snr_db_list)):
            errors.append(sum(_run_frame(ctx, i, f) for f in range(n_frames)))
    else:
        chunks = []
        step = max(1, n_frames // (4 * cfg.workers))
        for i in range(len(cfg.snr_db_list)):
            for lo in range(0, n_frames, step):
                chunks.append((i, range(lo, min(lo + step, n_frames))))
        with ProcessPoolExecutor(cfg.workers, initializer=_init_worker, initargs=(ctx,)) as pool:
            partial = list(pool.map(_run_chunk, chunks))
        errors = [0] * len(cfg.snr_db_list)
        for (i, _), e in zip(chunks, partial):
            errors[i] += e
    points = []
    for snr, e in zip(cfg.snr_db_list, errors):
        pt = SNRPoint(snr, bits_per_frame * n_frames, e, uses_per_frame * n_frames)
        if e < 100:
            log.warning("%s at %g dB: only %d bit errors observed; BER estimate is loose", cfg.scheme.value, snr, e)
        points.append(pt)
    return SimResult(cfg.scheme, tuple(points))


def run_ber(cfg: SimConfig, codebook: Optional[Codebook] = None, **kw) -> SimResult:
    return simulate(cfg, codebook, **kw)


def run_throughput(cfg: SimConfig, codebook: Optional[Codebook] = None, **kw) -> SimResult:
    return simulate(cfg, codebook, **kw)


def snr_range(start: float, stop: float, step: float) -> Tuple[float, ...]:
    if step <= 0:
        raise ConfigError("snr step must be positive")
    n = int(math.floor((stop - start) / step + 1e-9)) + 1
    if n < 1:
        raise ConfigError("empty SNR range")
    return tuple(round(start + k * step, 10) for k in range(n))
