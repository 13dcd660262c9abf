"""Thickness-quantised standing spin-wave modes of a thin magnetic film.

Covers the mode frequencies of a film with exchange stiffening, the
across-thickness mode profiles for the supported boundary conditions,
the magnetostatic stray field of the (saturated) film treated as
uniformly magnetised prisms, and the small-decay bookkeeping used by the
two-qubit switch estimates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Union

import numpy as np

from .errors import ConfigurationError, DispersiveRegimeError, DomainError
from .geometry import perpendicular_frame, unit_vector
from .quantities import GAMMA_OVER_2PI, MU0, MaterialParams

PINNING_CHOICES = ("bottom_pinned", "top_pinned", "both_free", "both_pinned")
CONVENTION_CHOICES = ("integer_n", "half_integer_k")


# ---------------------------------------------------------------------------
# film geometry
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RectangleOutline:
    """Axis-aligned rectangular lateral outline, width along u, length along v."""

    width: float
    length: float

    def __post_init__(self):
        if not (self.width > 0.0 and self.length > 0.0):
            raise ConfigurationError("rectangle outline needs positive width and length")

    @property
    def bounds(self):
        return (-0.5 * self.width, 0.5 * self.width, -0.5 * self.length, 0.5 * self.length)

    @property
    def area(self) -> float:
        return self.width * self.length

    def inside(self, u, v):
        u = np.asarray(u)
        v = np.asarray(v)
        return (np.abs(u) <= 0.5 * self.width) & (np.abs(v) <= 0.5 * self.length)


@dataclass(frozen=True)
class RoundedRectOutline:
    """Square outline with circular bulges replacing the two u-facing sides.

    Straight sides of length ``side`` along v; the left/right sides are
    circular arcs of ``bulge_radius`` whose chord equals ``side``.
    """

    side: float
    bulge_radius: float

    def __post_init__(self):
        if not (self.side > 0.0 and self.bulge_radius > 0.0):
            raise ConfigurationError("rounded outline needs positive side and radius")
        if self.side > 2.0 * self.bulge_radius:
            raise ConfigurationError("bulge radius too small to span the side as a chord")

    @property
    def _sagitta(self) -> float:
        r = self.bulge_radius
        return r - math.sqrt(r * r - 0.25 * self.side * self.side)

    @property
    def bounds(self):
        h = 0.5 * self.side
        return (-(h + self._sagitta), h + self._sagitta, -h, h)

    @property
    def area(self) -> float:
        r = self.bulge_radius
        theta = 2.0 * math.asin(0.5 * self.side / r)
        segment = 0.5 * r * r * (theta - math.sin(theta))
        return self.side * self.side + 2.0 * segment

    def inside(self, u, v):
        u = np.asarray(u)
        v = np.asarray(v)
        h = 0.5 * self.side
        xc = h - math.sqrt(self.bulge_radius**2 - h * h)
        core = (np.abs(u) <= h) & (np.abs(v) <= h)
        right = ((u - xc) ** 2 + v**2 <= self.bulge_radius**2) & (u > h) & (np.abs(v) <= h)
        left = ((u + xc) ** 2 + v**2 <= self.bulge_radius**2) & (u < -h) & (np.abs(v) <= h)
        return core | right | left


Outline = Union[RectangleOutline, RoundedRectOutline]


@dataclass(frozen=True)
class CappingLayer:
    """Thin pinning layer deposited on one film face."""

    material: MaterialParams
    thickness: float

    def __post_init__(self):
        if not self.thickness > 0.0:
            raise ConfigurationError("capping thickness must be positive")


@dataclass(frozen=True)
class FilmSpec:
    """Thin-film geometry, material and surface pinning.

    ``center`` is the film mid-plane centre; ``normal`` the thickness
    direction.  The "top" face is at ``center + thickness/2 * normal``.
    A capping layer sits on the pinned face.
    """

    material: MaterialParams
    outline: Outline
    thickness: float
    center: np.ndarray
    normal: np.ndarray
    pinning: str = "top_pinned"
    capping: CappingLayer | None = None

    def __post_init__(self):
        if not self.thickness > 0.0:
            raise ConfigurationError("film thickness must be positive")
        if self.pinning not in PINNING_CHOICES:
            raise ConfigurationError(
                f"unknown pinning {self.pinning!r}; expected one of {PINNING_CHOICES}"
            )
        if self.capping is not None and self.pinning not in ("top_pinned", "bottom_pinned"):
            raise ConfigurationError("a capping layer requires a single pinned face")
        object.__setattr__(self, "center", np.asarray(self.center, dtype=np.float64).reshape(3))
        object.__setattr__(self, "normal", unit_vector(self.normal))

    @property
    def frame(self):
        """In-plane axes (u, v) completing a right-handed frame with normal."""
        return perpendicular_frame(self.normal)

    def at_center(self, center) -> "FilmSpec":
        return replace(self, center=np.asarray(center, dtype=np.float64).reshape(3))


@dataclass(frozen=True)
class PsswMode:
    """One thickness-standing mode of a film."""

    n: int
    k_z: float
    wavelength: float
    frequency: float
    decay: float = 0.0
    profile: str = "mixed"

    def __post_init__(self):
        if self.n < 0:
            raise ConfigurationError("mode index must be >= 0")
        if self.frequency < 0.0 or self.decay < 0.0:
            raise ConfigurationError("mode frequency and decay must be >= 0")


# ---------------------------------------------------------------------------
# frequencies and profiles
# ---------------------------------------------------------------------------

def pssw_frequency(n: int, film: FilmSpec, Hext: float, convention: str = "integer_n") -> float:
    """Resonance frequency (Hz) of thickness mode ``n`` at field ``Hext`` (A/m).

    f = gamma*mu0/2pi * sqrt[(H + H_ex)(H + H_ex + Ms)] with the exchange
    field H_ex = (2*Aex/(mu0*Ms)) * (n_eff*pi/thickness)^2.

    ``convention`` selects the thickness index: ``integer_n`` uses
    ``n_eff = n``; ``half_integer_k`` uses ``n_eff = n + 1/2``, matching
    the one-side-pinned profile wavevector.
    """
    if n < 0:
        raise ConfigurationError("mode index must be >= 0")
    if Hext < 0.0:
        raise ConfigurationError("external field must be >= 0")
    if convention not in CONVENTION_CHOICES:
        raise ConfigurationError(
            f"unknown mode-index convention {convention!r}; expected {CONVENTION_CHOICES}"
        )
    n_eff = float(n) if convention == "integer_n" else n + 0.5
    mat = film.material
    h_ex = (2.0 * mat.Aex / (MU0 * mat.Ms)) * (n_eff * math.pi / film.thickness) ** 2
    return GAMMA_OVER_2PI * MU0 * math.sqrt((Hext + h_ex) * (Hext + h_ex + mat.Ms))


def profile_wavevector(n: int, film: FilmSpec) -> float:
    """Across-thickness wavevector of mode ``n`` for the film's pinning (rad/m)."""
    if film.pinning in ("top_pinned", "bottom_pinned"):
        return (n + 0.5) * math.pi / film.thickness
    return n * math.pi / film.thickness


def make_pssw_mode(
    film: FilmSpec,
    n: int,
    Hext: float,
    *,
    convention: str = "integer_n",
    frequency_override: float | None = None,
    decay: float = 0.0,
) -> PsswMode:
    """Assemble mode ``n`` of ``film``: wavevector from the pinning, frequency
    from :func:`pssw_frequency` unless ``frequency_override`` (Hz) is given."""
    k_z = profile_wavevector(n, film)
    freq = pssw_frequency(n, film, Hext, convention) if frequency_override is None \
        else float(frequency_override)
    profile = "mixed" if film.pinning in ("top_pinned", "bottom_pinned") else film.pinning
    wavelength = 2.0 * math.pi / k_z if k_z > 0.0 else math.inf
    return PsswMode(n=n, k_z=k_z, wavelength=wavelength, frequency=freq,
                    decay=decay, profile=profile)


def mode_profile(mode: PsswMode, film: FilmSpec, z):
    """Dimensionless mode amplitude at height ``z`` inside the film.

    ``z`` is measured from the unpinned face for one-side-pinned films
    (so the pinned face sits at z = thickness), and from the bottom face
    otherwise.  Profiles: sin(k_z * zeta) with zeta the distance from
    the pinned face (mixed); cos(k_z z) (both free); sin(k_z z) (both
    pinned).
    """
    z = np.asarray(z, dtype=np.float64)
    if np.any(z < -1e-15) or np.any(z > film.thickness * (1 + 1e-12)):
        raise DomainError("profile height outside the film thickness")
    if mode.profile == "mixed":
        zeta = film.thickness - z
        return np.sin(mode.k_z * zeta)
    if mode.profile == "both_free":
        return np.cos(mode.k_z * z)
    if mode.profile == "both_pinned":
        return np.sin(mode.k_z * z)
    raise ConfigurationError(f"unknown profile tag {mode.profile!r}")


# ---------------------------------------------------------------------------
# stray field of the saturated film
# ---------------------------------------------------------------------------

def _face_H(w0, a1, a2, b1, b2, sigma, W, A, B):
    """H of a uniformly charged rectangle at ``axis = w0`` spanning
    [a1,a2] x [b1,b2]; (W, A, B) are the field-point coordinates in the
    same permuted order.  Returns the three permuted components."""
    X = W - w0
    Hw = np.zeros_like(X)
    Ha = np.zeros_like(X)
    Hb = np.zeros_like(X)
    for i, ai in enumerate((a1, a2)):
        for k, bk in enumerate((b1, b2)):
            s = float((-1) ** (i + k))
            u = A - ai
            v = B - bk
            R = np.sqrt(X * X + u * u + v * v)
            Hw += s * np.arctan2(u * v, X * R)
            with np.errstate(divide="ignore", invalid="ignore"):
                Ha += -s * np.log(R + v)
                Hb += -s * np.log(R + u)
    scale = sigma / (4.0 * math.pi)
    return scale * Hw, scale * Ha, scale * Hb


def uniform_prism_field(bounds, magnetization, points) -> np.ndarray:
    """B (T) outside a uniformly magnetised rectangular prism.

    ``bounds``: ((x0,x1),(y0,y1),(z0,z1)); ``magnetization``: vector M
    (A/m).  Surface-charge form: each magnetization component
    contributes a +/-M charged face pair.  Points strictly inside raise
    DomainError; non-finite output (edge-line evaluation) does too.
    """
    pts = np.asarray(points, dtype=np.float64)
    single = pts.ndim == 1
    pts = pts.reshape(-1, 3)
    (x0, x1), (y0, y1), (z0, z1) = [(float(a), float(b)) for a, b in bounds]
    inside = (
        (pts[:, 0] > x0) & (pts[:, 0] < x1)
        & (pts[:, 1] > y0) & (pts[:, 1] < y1)
        & (pts[:, 2] > z0) & (pts[:, 2] < z1)
    )
    if np.any(inside):
        raise DomainError("evaluation point inside the magnetised prism")
    M = np.asarray(magnetization, dtype=np.float64).reshape(3)
    lims = ((x0, x1), (y0, y1), (z0, z1))
    H = np.zeros_like(pts)
    for axis in range(3):
        if M[axis] == 0.0:
            continue
        a, b = (axis + 1) % 3, (axis + 2) % 3
        for face, sign in ((lims[axis][1], +1.0), (lims[axis][0], -1.0)):
            hw, ha, hb = _face_H(
                face, lims[a][0], lims[a][1], lims[b][0], lims[b][1],
                sign * M[axis], pts[:, axis], pts[:, a], pts[:, b],
            )
            H[:, axis] += hw
            H[:, a] += ha
            H[:, b] += hb
    if not np.all(np.isfinite(H)):
        raise DomainError("stray field evaluated on a prism edge line")
    B = MU0 * H
    return B[0] if single else B


def _film_prisms(film: FilmSpec):
    """Film (and capping) extents in the film frame, as (bounds, material)."""
    lo_u, hi_u, lo_v, hi_v = film.outline.bounds
    half = 0.5 * film.thickness
    prisms = [(((lo_u, hi_u), (lo_v, hi_v), (-half, half)), film.material)]
    if film.capping is not None:
        t = film.capping.thickness
        if film.pinning == "top_pinned":
            wlims = (half, half + t)
        else:
            wlims = (-half - t, -half)
        prisms.append((((lo_u, hi_u), (lo_v, hi_v), wlims), film.capping.material))
    return prisms


def stray_field(film: FilmSpec, magnetization_direction, points) -> np.ndarray:
    """B (T) of the saturated film (plus capping layer) at ``points``.

    All spins are taken fully aligned along ``magnetization_direction``
    with magnitude Ms of each layer's material.  Non-rectangular
    outlines use their bounding rectangle.
    """
    m_dir = unit_vector(magnetization_direction)
    pts = np.asarray(points, dtype=np.float64)
    single = pts.ndim == 1
    pts = pts.reshape(-1, 3)
    u, v = film.frame
    rot = np.stack([u, v, film.normal])  # rows: lab -> film frame
    local = (pts - film.center) @ rot.T
    m_local = rot @ m_dir
    B_local = np.zeros_like(local)
    for bounds, material in _film_prisms(film):
        B_local += uniform_prism_field(bounds, material.Ms * m_local, local)
    B = B_local @ rot
    return B[0] if single else B


# ---------------------------------------------------------------------------
# decay bookkeeping
# ---------------------------------------------------------------------------

def damping_to_decay(alpha: float, frequency: float) -> float:
    """Linewidth (Hz) from Gilbert damping: Gamma = alpha * f."""
    if alpha < 0.0:
        raise ConfigurationError("damping must be >= 0")
    if not frequency > 0.0:
        raise ConfigurationError("frequency must be positive")
    return alpha * frequency


def converted_decay(g: float, detuning: float, gamma: float) -> float:
    """Decay leaked through an off-resonant coupling: (g/detuning)^2 * gamma.

    Valid in the dispersive regime |detuning| > g; outside it raises
    DispersiveRegimeError.  g = 0 short-circuits to 0.
    """
    if g < 0.0 or gamma < 0.0:
        raise ConfigurationError("coupling and bath decay must be >= 0")
    if g == 0.0:
        return 0.0
    if abs(detuning) <= g:
        raise DispersiveRegimeError(
            f"|detuning| = {abs(detuning):.4g} Hz must exceed g = {g:.4g} Hz"
        )
    return (g / detuning) ** 2 * gamma
