"""Design toolkit for persistent-current loops coupled to standing spin waves.

Computes thickness-mode frequencies of thin magnetic films, quasi-static
loop fields, geometry-dependent loop-mode coupling strengths, avoided
crossing spectra, mutual inductances and the operating points of a
magnon-mediated two-qubit switch.
"""

from ._backend import BACKEND
from .coupling import (
    CouplingResult,
    QuadratureSettings,
    coupling_integral,
    coupling_strength,
    coupling_vs_distance,
    lattice_coupling_oracle,
    plane_wave_weight,
)
from .errors import (
    ConfigurationError,
    ConvergenceWarning,
    DispersiveRegimeError,
    DispersiveRegimeWarning,
    DomainError,
    FluxmagnonError,
    GeometryError,
    SingularFieldError,
)
from .geometry import (
    Arc,
    CurrentLoop,
    GridField,
    Line,
    Polyline,
    discretize,
    field_at,
    field_at_points,
    field_grid,
    make_arc_loop,
    make_square_loop,
    make_squid_loop,
)
from .inductance import inductive_coupling_frequency, mutual_inductance
from .magnonics import (
    CappingLayer,
    FilmSpec,
    PsswMode,
    RectangleOutline,
    RoundedRectOutline,
    converted_decay,
    damping_to_decay,
    make_pssw_mode,
    mode_profile,
    pssw_frequency,
    stray_field,
    uniform_prism_field,
)
from .quantities import (
    BUNDLED_MATERIALS,
    COFEB,
    CONSTANTS,
    MaterialParams,
    PhysicalConstants,
    YIG,
    field_unit_convert,
    moment_per_spin,
)
from .spectra import (
    QubitParams,
    SpectrumMap,
    SpinWaveOscillator,
    dressed_coupling,
    extract_splitting,
    qubit_frequency,
    response,
    response_poles,
    spectrum_map,
)
from .switch import (
    SwitchConfig,
    broadening_budget,
    magnon_mediated_J,
    off_detuning,
    total_coupling,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BUNDLED_MATERIALS",
    "COFEB",
    "CONSTANTS",
    "CappingLayer",
    "ConfigurationError",
    "ConvergenceWarning",
    "CouplingResult",
    "CurrentLoop",
    "DispersiveRegimeError",
    "DispersiveRegimeWarning",
    "DomainError",
    "FilmSpec",
    "FluxmagnonError",
    "GeometryError",
    "GridField",
    "Arc",
    "Line",
    "MaterialParams",
    "PhysicalConstants",
    "Polyline",
    "PsswMode",
    "QuadratureSettings",
    "QubitParams",
    "RectangleOutline",
    "RoundedRectOutline",
    "SingularFieldError",
    "SpectrumMap",
    "SpinWaveOscillator",
    "SwitchConfig",
    "YIG",
    "broadening_budget",
    "converted_decay",
    "coupling_integral",
    "coupling_strength",
    "coupling_vs_distance",
    "damping_to_decay",
    "discretize",
    "dressed_coupling",
    "extract_splitting",
    "field_at",
    "field_at_points",
    "field_grid",
    "field_unit_convert",
    "inductive_coupling_frequency",
    "lattice_coupling_oracle",
    "magnon_mediated_J",
    "make_arc_loop",
    "make_pssw_mode",
    "make_square_loop",
    "make_squid_loop",
    "mode_profile",
    "moment_per_spin",
    "mutual_inductance",
    "off_detuning",
    "plane_wave_weight",
    "pssw_frequency",
    "qubit_frequency",
    "response",
    "response_poles",
    "spectrum_map",
    "stray_field",
    "total_coupling",
    "uniform_prism_field",
]
