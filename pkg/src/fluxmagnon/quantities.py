"""Physical constants, field-unit conversion and magnetic material records.

Everything internal is SI: lengths in metres, B-fields in tesla, H-fields
in A/m, energies in joules and frequencies as ordinary frequencies in Hz
(angular frequencies never cross module boundaries).  Gauss, GHz, nA and
micrometres appear only at I/O boundaries (CLI, scenario files).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import ConfigurationError


@dataclass(frozen=True)
class PhysicalConstants:
    """Fixed constants used throughout (values the rest of the code assumes)."""

    mu0: float = 1.256e-6            # vacuum permeability (N/A^2)
    muB: float = 9.2740100783e-24    # Bohr magneton (J/T)
    h: float = 6.62607015e-34        # Planck constant (J s)
    gamma_over_2pi: float = 28.0e9   # electron gyromagnetic ratio (Hz/T)

    @property
    def hbar(self) -> float:
        return self.h / (2.0 * math.pi)


CONSTANTS = PhysicalConstants()

MU0 = CONSTANTS.mu0
MU_B = CONSTANTS.muB
PLANCK = CONSTANTS.h
HBAR = CONSTANTS.hbar
GAMMA_OVER_2PI = CONSTANTS.gamma_over_2pi

#: factor that converts one unit of field magnitude to tesla
_TO_TESLA = {
    "tesla": 1.0,
    "gauss": 1.0e-4,
    "A/m": MU0,
}


def field_unit_convert(value: float, from_unit: str, to_unit: str) -> float:
    """Convert a field magnitude between gauss, tesla and A/m.

    A/m <-> tesla uses B = mu0 * H.  Conversion is exactly linear, so
    round trips are identities up to floating-point rounding.

    Raises:
        ConfigurationError: unknown unit tag.
        ValueError: non-finite or negative magnitude.
    """
    try:
        scale_in = _TO_TESLA[from_unit]
        scale_out = _TO_TESLA[to_unit]
    except KeyError as exc:
        raise ConfigurationError(
            f"unknown field unit {exc.args[0]!r}; expected one of {sorted(_TO_TESLA)}"
        ) from None
    if not math.isfinite(value) or value < 0.0:
        raise ValueError(f"field magnitude must be finite and non-negative, got {value!r}")
    return value * (scale_in / scale_out)


@dataclass(frozen=True)
class MaterialParams:
    """Magnetic material record.

    Attributes:
        name: label used in scenario files.
        Ms: saturation magnetization (A/m).
        Aex: exchange constant (J/m).
        spin_density: net spins per unit volume (1/m^3), counting one
            Bohr-magneton-scale moment per spin.
        damping_alpha: dimensionless Gilbert damping.
        intrinsic_decay: optional fixed mode decay rate (Hz) used when a
            scenario does not derive the linewidth from damping_alpha.
        site_spin: effective on-site spin S entering the sqrt(2S)
            coupling normalization (5/2 for the Fe sites of iron garnet).
    """

    name: str
    Ms: float
    Aex: float
    spin_density: float
    damping_alpha: float = 0.0
    intrinsic_decay: float | None = None
    site_spin: float = 0.5

    def __post_init__(self) -> None:
        if not self.Ms > 0.0:
            raise ConfigurationError(f"{self.name}: Ms must be positive")
        if not self.Aex > 0.0:
            raise ConfigurationError(f"{self.name}: Aex must be positive")
        if not self.spin_density > 0.0:
            raise ConfigurationError(f"{self.name}: spin_density must be positive")
        if self.damping_alpha < 0.0:
            raise ConfigurationError(f"{self.name}: damping_alpha must be >= 0")
        if self.intrinsic_decay is not None and self.intrinsic_decay < 0.0:
            raise ConfigurationError(f"{self.name}: intrinsic_decay must be >= 0")
        if not self.site_spin > 0.0:
            raise ConfigurationError(f"{self.name}: site_spin must be positive")


def moment_per_spin(material: MaterialParams) -> float:
    """Magnetic moment per counted spin, Ms / spin_density (J/T).

    For the bundled garnet record this is within 5% of one Bohr magneton,
    which is what grounds counting spin_density in muB-sized moments.
    """
    return material.Ms / material.spin_density


# Bundled records.  The garnet damping is the optimistic end of the
# reported 1e-5..1e-4 range; the 10 MHz intrinsic linewidth of the n=1
# thickness mode is carried separately because the two numbers do not
# reconcile through alpha*f alone.
YIG = MaterialParams(
    name="YIG",
    Ms=1.92e5,
    Aex=3.1e-12,
    spin_density=2.14e28,
    damping_alpha=1.0e-4,
    intrinsic_decay=10.0e6,
    site_spin=2.5,
)

# No measured Ms accompanies the CoFeB spin density; one muB per counted
# spin puts Ms in the accepted range for the alloy.
COFEB = MaterialParams(
    name="CoFeB",
    Ms=1.61e29 * MU_B,
    Aex=1.5e-11,
    spin_density=1.61e29,
    damping_alpha=0.222,
    intrinsic_decay=300.0e6,
    site_spin=0.5,
)

BUNDLED_MATERIALS = {m.name: m for m in (YIG, COFEB)}
