"""Radar constants, virtual-array geometry, and the fast-time -> range transform.

The 79 GHz FMCW MIMO radar modeled here has 3 TX x 4 RX elements forming a
12-element virtual uniform linear array at half-wavelength (1.9 mm) spacing,
43 mm range resolution, and a 10 Hz slow-time (chirp-to-chirp) rate. The
range transform is an unnormalized forward DFT along fast time; range bin b
maps to range b * range_resolution, with bin 0 at zero beat frequency.
"""

from dataclasses import dataclass, field

import numpy as np
from scipy.signal import windows

from .errors import SchemaError


@dataclass
class RadarConfig:
    """Radar front-end parameters; defaults match the 79 GHz unit."""

    center_frequency: float = 79e9       # Hz
    wavelength_lambda: float = 3.8e-3    # m
    range_resolution: float = 43e-3      # m per range bin
    slow_time_rate: float = 10.0         # Hz
    n_tx: int = 3
    n_rx: int = 4
    n_range_bins: int = 64
    n_fast_samples: int = 64

    def __post_init__(self):
        if self.wavelength_lambda <= 0:
            raise ValueError("wavelength_lambda must be > 0")
        if self.slow_time_rate <= 0:
            raise ValueError("slow_time_rate must be > 0")
        if self.n_tx < 1 or self.n_rx < 1:
            raise ValueError("n_tx and n_rx must be >= 1")
        if self.n_range_bins < 1 or self.n_fast_samples < 1:
            raise ValueError("n_range_bins and n_fast_samples must be >= 1")

    @property
    def n_virtual(self) -> int:
        """Virtual element count K = n_tx * n_rx (12 under defaults)."""
        return self.n_tx * self.n_rx


@dataclass
class VirtualArray:
    """Positions of the K virtual elements on the x axis, meters."""

    element_positions_x: np.ndarray

    def __post_init__(self):
        self.element_positions_x = np.asarray(self.element_positions_x, dtype=float)
        if self.element_positions_x.ndim != 1 or self.element_positions_x.size < 1:
            raise ValueError("element_positions_x must be a nonempty 1-D array")


@dataclass
class DataCube:
    """Post-range-transform slow-time x virtual-element x range-bin samples.

    ``samples[i, k, b]`` is the complex value at slow-time index i (time
    t0 + i / slow_time_rate), virtual element k, range bin b (range
    b * range_bin_size). ``wavelength`` is carried along because phase ->
    displacement conversion needs it and the .rdc interchange format
    records it.
    """

    samples: np.ndarray
    t0: float = 0.0
    slow_time_rate: float = 10.0
    range_bin_size: float = 43e-3
    wavelength: float = 3.8e-3

    def __post_init__(self):
        s = np.asarray(self.samples)
        if not np.iscomplexobj(s):
            s = s.astype(np.complex128)
        if s.ndim != 3 or min(s.shape) < 1:
            raise ValueError("samples must be [slow_time][element][range], all dims >= 1")
        if not np.all(np.isfinite(s.view(s.real.dtype))):
            raise ValueError("samples must be finite")
        if self.slow_time_rate <= 0 or self.range_bin_size <= 0 or self.wavelength <= 0:
            raise ValueError("rates and sizes must be > 0")
        self.samples = s

    @property
    def n_slow(self) -> int:
        return self.samples.shape[0]

    @property
    def n_elem(self) -> int:
        return self.samples.shape[1]

    @property
    def n_range(self) -> int:
        return self.samples.shape[2]

    @property
    def duration(self) -> float:
        return self.n_slow / self.slow_time_rate

    def times(self) -> np.ndarray:
        return self.t0 + np.arange(self.n_slow) / self.slow_time_rate


def virtual_positions(cfg: RadarConfig) -> VirtualArray:
    """Virtual element positions x_k = k * lambda / 2, k = 0..K-1, ascending."""
    k = np.arange(cfg.n_virtual, dtype=float)
    return VirtualArray(element_positions_x=k * cfg.wavelength_lambda / 2.0)


def range_transform(fast_time_frames: np.ndarray, cfg: RadarConfig) -> DataCube:
    """Transform fast-time frames into a range-resolved DataCube.

    Applies the unnormalized forward DFT along the fast-time axis of
    ``fast_time_frames`` (shape [slow_time][element][fast_sample]) and keeps
    the first ``cfg.n_range_bins`` bins; bin b corresponds to range
    b * cfg.range_resolution.
    """
    frames = np.asarray(fast_time_frames)
    if frames.ndim != 3:
        raise SchemaError("fast_time_frames must be [slow_time][element][fast_sample]")
    if frames.shape[1] != cfg.n_virtual:
        raise SchemaError(
            f"element dimension {frames.shape[1]} != n_tx*n_rx = {cfg.n_virtual}"
        )
    if frames.shape[2] != cfg.n_fast_samples:
        raise SchemaError(
            f"fast-sample dimension {frames.shape[2]} != n_fast_samples = {cfg.n_fast_samples}"
        )
    if cfg.n_range_bins > cfg.n_fast_samples:
        raise SchemaError("n_range_bins cannot exceed n_fast_samples")
    spectrum = np.fft.fft(frames.astype(np.complex128), axis=2)
    return DataCube(
        samples=spectrum[:, :, : cfg.n_range_bins],
        t0=0.0,
        slow_time_rate=cfg.slow_time_rate,
        range_bin_size=cfg.range_resolution,
        wavelength=cfg.wavelength_lambda,
    )


def taylor_window(K: int, sidelobe_db: float = 25.0, nbar: int = 4) -> np.ndarray:
    """Taylor window of length K, normalized so the maximum equals 1.

    ``sidelobe_db`` is the sidelobe suppression level in positive dB
    (default 25 dB with nbar = 4 nearly-constant sidelobes).
    """
    if K < 1:
        raise ValueError("K must be >= 1")
    if K == 1:
        return np.ones(1)
    w = windows.taylor(K, nbar=nbar, sll=sidelobe_db, norm=False, sym=True)
    return w / w.max()
