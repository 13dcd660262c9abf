"""Spectroscopic response of the hybridised qubit / spin-wave system.

The driven two-level loop hybridised with one spin-wave mode responds as

    s(w) = 1 / [ w - f_q + i*G_fq - |g_d|^2 / (w - f_sw + i*G_sw) ]

with f_q = sqrt(Delta^2 + eps^2) the qubit frequency and the coupling
dressed by the tunneling matrix element, g_d = |g| * Delta / f_q.  All
quantities are ordinary frequencies in Hz; the linewidths G enter
literally as the imaginary parts above.  The overall drive amplitude
only scales the response and is fixed to 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConfigurationError

#: peaks closer than this many drive-axis steps are treated as unresolved
MIN_PEAK_SEPARATION_STEPS = 4


@dataclass(frozen=True)
class QubitParams:
    """Two-level parameters of the persistent-current loop (all Hz, A)."""

    Delta: float
    epsilon: float = 0.0
    Gamma_fq: float = 0.0
    Ip: float = 500.0e-9

    def __post_init__(self):
        if not self.Delta > 0.0:
            raise ConfigurationError("tunneling splitting Delta must be positive")
        if self.Gamma_fq < 0.0:
            raise ConfigurationError("qubit decay must be >= 0")


@dataclass(frozen=True)
class SpinWaveOscillator:
    """Mode frequency and linewidth of the coupled spin-wave resonance (Hz)."""

    omega_sw: float
    Gamma_sw: float = 0.0

    def __post_init__(self):
        if not self.omega_sw > 0.0:
            raise ConfigurationError("spin-wave frequency must be positive")
        if self.Gamma_sw < 0.0:
            raise ConfigurationError("spin-wave decay must be >= 0")


@dataclass(frozen=True)
class SpectrumMap:
    """|response| over (bias, drive); bias axis is the qubit frequency."""

    bias_axis: np.ndarray
    drive_axis: np.ndarray
    magnitude: np.ndarray
    coupling: complex
    drive_amplitude: float = 1.0

    def __post_init__(self):
        bias = np.asarray(self.bias_axis, dtype=np.float64)
        drive = np.asarray(self.drive_axis, dtype=np.float64)
        mag = np.asarray(self.magnitude, dtype=np.float64)
        for name, ax in (("bias", bias), ("drive", drive)):
            if ax.ndim != 1 or ax.size == 0:
                raise ConfigurationError(f"{name} axis must be a non-empty 1-d array")
            if ax.size > 1 and not np.all(np.diff(ax) > 0.0):
                raise ConfigurationError(f"{name} axis must be strictly increasing")
        if mag.shape != (bias.size, drive.size):
            raise ConfigurationError("magnitude shape must be (n_bias, n_drive)")
        object.__setattr__(self, "bias_axis", bias)
        object.__setattr__(self, "drive_axis", drive)
        object.__setattr__(self, "magnitude", mag)


def qubit_frequency(q: QubitParams) -> float:
    """sqrt(Delta^2 + epsilon^2) (Hz)."""
    return math.hypot(q.Delta, q.epsilon)


def dressed_coupling(q: QubitParams, g) -> float:
    """|g| scaled by the tunneling matrix element Delta / qubit frequency."""
    return abs(g) * q.Delta / qubit_frequency(q)


def response(omega, q: QubitParams, sw: SpinWaveOscillator, g) -> np.ndarray:
    """Complex response amplitude at drive frequency ``omega`` (Hz)."""
    w = np.asarray(omega, dtype=np.float64)
    fq = qubit_frequency(q)
    gd = dressed_coupling(q, g)
    denom = w - fq + 1j * q.Gamma_fq - gd**2 / (w - sw.omega_sw + 1j * sw.Gamma_sw)
    return 1.0 / denom


def response_poles(q: QubitParams, sw: SpinWaveOscillator, g) -> tuple[complex, complex]:
    """The two complex poles of the response denominator.

    Solutions of (w - z_q)(w - z_s) = g_d^2 with z_q = f_q - i*G_fq and
    z_s = f_sw - i*G_sw; these equal the eigenvalues of the non-Hermitian
    2x2 coupling matrix [[z_q, g_d], [g_d, z_s]].
    """
    zq = qubit_frequency(q) - 1j * q.Gamma_fq
    zs = sw.omega_sw - 1j * sw.Gamma_sw
    gd = dressed_coupling(q, g)
    mid = 0.5 * (zq + zs)
    rad = np.sqrt((0.5 * (zq - zs)) ** 2 + gd**2 + 0j)
    return complex(mid - rad), complex(mid + rad)


def _bias_to_qubit(q_template: QubitParams, f_qubit: float) -> QubitParams:
    if f_qubit < q_template.Delta * (1.0 - 1.0e-12):
        raise ConfigurationError(
            f"qubit frequency {f_qubit:.6g} Hz below the tunneling splitting "
            f"{q_template.Delta:.6g} Hz is unreachable by any energy bias"
        )
    eps2 = max(f_qubit * f_qubit - q_template.Delta**2, 0.0)
    return QubitParams(
        Delta=q_template.Delta,
        epsilon=math.sqrt(eps2),
        Gamma_fq=q_template.Gamma_fq,
        Ip=q_template.Ip,
    )


def spectrum_map(
    q_template: QubitParams,
    qubit_frequencies,
    drive_frequencies,
    sw: SpinWaveOscillator,
    g,
) -> SpectrumMap:
    """|response| on a (bias, drive) grid.

    The bias axis is given as target qubit frequencies (>= Delta); each
    is mapped to the energy bias eps = sqrt(f^2 - Delta^2) of the
    template qubit.
    """
    bias = np.asarray(qubit_frequencies, dtype=np.float64)
    drive = np.asarray(drive_frequencies, dtype=np.float64)
    mag = np.empty((bias.size, drive.size))
    for i, fq in enumerate(bias):
        qi = _bias_to_qubit(q_template, float(fq))
        mag[i] = np.abs(response(drive, qi, sw, g))
    return SpectrumMap(bias_axis=bias, drive_axis=drive, magnitude=mag, coupling=complex(g))


def _refined_peaks(row: np.ndarray, axis: np.ndarray):
    """Interior local maxima refined by a 3-point parabola: (position, height)."""
    idx = np.nonzero((row[1:-1] > row[:-2]) & (row[1:-1] > row[2:]))[0] + 1
    peaks = []
    for i in idx:
        denom = row[i - 1] - 2.0 * row[i] + row[i + 1]
        shift = 0.5 * (row[i - 1] - row[i + 1]) / denom if denom != 0.0 else 0.0
        shift = float(np.clip(shift, -0.5, 0.5))
        step = axis[min(i + 1, axis.size - 1)] - axis[i] if shift >= 0 else axis[i] - axis[i - 1]
        peaks.append((float(axis[i] + shift * step), float(row[i]), int(i)))
    return peaks


def extract_splitting(spectrum: SpectrumMap) -> float | None:
    """Minimum separation (Hz) of the two dominant peaks over the bias sweep.

    For each bias column the two largest resolved local maxima are
    paired; the smallest separation over all columns is the avoided
    crossing gap.  Returns None when no column shows two maxima at
    least :data:`MIN_PEAK_SEPARATION_STEPS` drive steps apart.
    """
    best = None
    for row in spectrum.magnitude:
        peaks = _refined_peaks(row, spectrum.drive_axis)
        if len(peaks) < 2:
            continue
        peaks.sort(key=lambda p: p[1], reverse=True)
        (pa, _, ia), (pb, _, ib) = peaks[0], peaks[1]
        if abs(ia - ib) < MIN_PEAK_SEPARATION_STEPS:
            continue
        sep = abs(pa - pb)
        if best is None or sep < best:
            best = sep
    return best
