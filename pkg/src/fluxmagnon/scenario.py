"""Declarative scenario files: strict JSON schema with unit-suffixed keys.

Lengths are given in micrometres / nanometres, fields in gauss,
frequencies in GHz / MHz, currents in nA; every key carries its unit as
a suffix and unknown keys are rejected, so a misplaced unit cannot pass
silently.  Parsing converts everything to SI once.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field as dc_field
from pathlib import Path

import numpy as np

from .errors import ConfigurationError
from .geometry import (
    Arc,
    CurrentLoop,
    Line,
    make_arc_loop,
    make_square_loop,
    make_squid_loop,
)
from .magnonics import (
    CONVENTION_CHOICES,
    CappingLayer,
    FilmSpec,
    PINNING_CHOICES,
    RectangleOutline,
    RoundedRectOutline,
)
from .quantities import BUNDLED_MATERIALS, MU0, MaterialParams

UM = 1.0e-6
NM = 1.0e-9
GHZ = 1.0e9
MHZ = 1.0e6
NA = 1.0e-9
GAUSS = 1.0e-4  # tesla


def _check_keys(section: dict, allowed, context: str) -> None:
    unknown = sorted(set(section) - set(allowed))
    if unknown:
        raise ConfigurationError(
            f"{context}: unknown key(s) {unknown}; allowed keys are {sorted(allowed)}"
        )


def _require(section: dict, key: str, context: str):
    if key not in section:
        raise ConfigurationError(f"{context}: missing required key {key!r}")
    return section[key]


def _vec3(value, context: str) -> np.ndarray:
    arr = np.asarray(value, dtype=np.float64)
    if arr.shape != (3,):
        raise ConfigurationError(f"{context}: expected a 3-vector, got {value!r}")
    return arr


def gauss_to_A_per_m(value: float) -> float:
    return value * GAUSS / MU0


# ---------------------------------------------------------------------------
# section parsers
# ---------------------------------------------------------------------------

def parse_material(cfg: dict, context: str) -> MaterialParams:
    _check_keys(
        cfg,
        (
            "name",
            "Ms_kA_per_m",
            "Aex_pJ_per_m",
            "spin_density_per_m3",
            "damping_alpha",
            "intrinsic_decay_MHz",
            "site_spin",
        ),
        context,
    )
    decay = cfg.get("intrinsic_decay_MHz")
    return MaterialParams(
        name=str(_require(cfg, "name", context)),
        Ms=float(_require(cfg, "Ms_kA_per_m", context)) * 1.0e3,
        Aex=float(_require(cfg, "Aex_pJ_per_m", context)) * 1.0e-12,
        spin_density=float(_require(cfg, "spin_density_per_m3", context)),
        damping_alpha=float(cfg.get("damping_alpha", 0.0)),
        intrinsic_decay=None if decay is None else float(decay) * MHZ,
        site_spin=float(cfg.get("site_spin", 0.5)),
    )


def _parse_segment(cfg: dict, context: str):
    kind = _require(cfg, "kind", context)
    if kind == "line":
        _check_keys(cfg, ("kind", "start_um", "end_um"), context)
        return Line(
            _vec3(_require(cfg, "start_um", context), context) * UM,
            _vec3(_require(cfg, "end_um", context), context) * UM,
        )
    if kind == "arc":
        _check_keys(
            cfg,
            ("kind", "center_um", "radius_um", "normal", "start_angle_deg",
             "sweep_deg", "u_ref"),
            context,
        )
        u_ref = cfg.get("u_ref")
        return Arc(
            center=_vec3(_require(cfg, "center_um", context), context) * UM,
            radius=float(_require(cfg, "radius_um", context)) * UM,
            normal=_vec3(_require(cfg, "normal", context), context),
            start_angle=math.radians(float(_require(cfg, "start_angle_deg", context))),
            sweep=math.radians(float(_require(cfg, "sweep_deg", context))),
            u_ref=None if u_ref is None else _vec3(u_ref, context),
        )
    raise ConfigurationError(f"{context}: unknown segment kind {kind!r}")


def parse_loop(cfg: dict, context: str) -> CurrentLoop:
    builder = _require(cfg, "builder", context)
    current = float(_require(cfg, "current_nA", context)) * NA
    center = _vec3(cfg.get("center_um", (0.0, 0.0, 0.0)), context) * UM
    normal = _vec3(cfg.get("normal", (0.0, 0.0, 1.0)), context)
    if builder == "square":
        _check_keys(cfg, ("builder", "side_um", "center_um", "normal", "current_nA"), context)
        return make_square_loop(
            float(_require(cfg, "side_um", context)) * UM, center, normal, current
        )
    if builder in ("arc", "fig4_arc"):
        _check_keys(
            cfg,
            ("builder", "left_right_radius_um", "top_bottom_radius_um", "style",
             "center_um", "normal", "current_nA"),
            context,
        )
        return make_arc_loop(
            float(_require(cfg, "left_right_radius_um", context)) * UM,
            float(_require(cfg, "top_bottom_radius_um", context)) * UM,
            center,
            current,
            normal=normal,
            style=str(cfg.get("style", "convex")),
        )
    if builder == "squid":
        _check_keys(
            cfg,
            ("builder", "left_right_radius_um", "top_bottom_radius_um", "offset_um",
             "center_um", "normal", "current_nA"),
            context,
        )
        return make_squid_loop(
            float(_require(cfg, "left_right_radius_um", context)) * UM,
            float(_require(cfg, "top_bottom_radius_um", context)) * UM,
            float(_require(cfg, "offset_um", context)) * UM,
            center,
            current,
            normal=normal,
        )
    if builder == "segments":
        _check_keys(cfg, ("builder", "segments", "current_nA"), context)
        segs = tuple(
            _parse_segment(s, f"{context}.segments[{i}]")
            for i, s in enumerate(_require(cfg, "segments", context))
        )
        return CurrentLoop(segs, current)
    raise ConfigurationError(f"{context}: unknown loop builder {builder!r}")


def parse_outline(cfg: dict, context: str):
    shape = _require(cfg, "shape", context)
    if shape == "rectangle":
        _check_keys(cfg, ("shape", "width_um", "length_um"), context)
        return RectangleOutline(
            float(_require(cfg, "width_um", context)) * UM,
            float(_require(cfg, "length_um", context)) * UM,
        )
    if shape == "rounded_rect":
        _check_keys(cfg, ("shape", "side_um", "bulge_radius_um"), context)
        return RoundedRectOutline(
            float(_require(cfg, "side_um", context)) * UM,
            float(_require(cfg, "bulge_radius_um", context)) * UM,
        )
    raise ConfigurationError(f"{context}: unknown outline shape {shape!r}")


def parse_film(cfg: dict, materials: dict, context: str) -> FilmSpec:
    _check_keys(
        cfg,
        ("material", "outline", "thickness_nm", "center_um", "normal", "pinning", "capping"),
        context,
    )
    mat_name = _require(cfg, "material", context)
    if mat_name not in materials:
        raise ConfigurationError(f"{context}: unknown material {mat_name!r}")
    capping = None
    if cfg.get("capping") is not None:
        cap = cfg["capping"]
        _check_keys(cap, ("material", "thickness_nm"), f"{context}.capping")
        cap_name = _require(cap, "material", f"{context}.capping")
        if cap_name not in materials:
            raise ConfigurationError(f"{context}.capping: unknown material {cap_name!r}")
        capping = CappingLayer(
            materials[cap_name], float(_require(cap, "thickness_nm", f"{context}.capping")) * NM
        )
    pinning = str(cfg.get("pinning", "top_pinned"))
    if pinning not in PINNING_CHOICES:
        raise ConfigurationError(f"{context}: unknown pinning {pinning!r}")
    return FilmSpec(
        material=materials[mat_name],
        outline=parse_outline(_require(cfg, "outline", context), f"{context}.outline"),
        thickness=float(_require(cfg, "thickness_nm", context)) * NM,
        center=_vec3(cfg.get("center_um", (0.0, 0.0, 0.0)), context) * UM,
        normal=_vec3(cfg.get("normal", (0.0, 0.0, 1.0)), context),
        pinning=pinning,
        capping=capping,
    )


@dataclass
class Scenario:
    """Parsed scenario: SI quantities, loops built, sections as dicts."""

    name: str
    description: str = ""
    materials: dict = dc_field(default_factory=dict)
    loops: dict = dc_field(default_factory=dict)
    film: FilmSpec | None = None
    mode: dict = dc_field(default_factory=dict)
    applied_field: dict = dc_field(default_factory=dict)
    coupling: dict = dc_field(default_factory=dict)
    spectrum: dict = dc_field(default_factory=dict)
    inductance: dict = dc_field(default_factory=dict)
    stray: dict = dc_field(default_factory=dict)
    switch: dict = dc_field(default_factory=dict)
    field_map: dict = dc_field(default_factory=dict)
    outputs: dict = dc_field(default_factory=dict)
    source_path: Path | None = None
    source_bytes: bytes = b""


_TOP_KEYS = (
    "name",
    "description",
    "materials",
    "loops",
    "film",
    "mode",
    "applied_field",
    "coupling",
    "spectrum",
    "inductance",
    "stray",
    "switch",
    "field_map",
    "outputs",
)


def _parse_mode(cfg: dict) -> dict:
    _check_keys(
        cfg, ("n", "convention", "frequency_override_GHz", "decay_MHz"), "mode"
    )
    convention = str(cfg.get("convention", "integer_n"))
    if convention not in CONVENTION_CHOICES:
        raise ConfigurationError(f"mode: unknown convention {convention!r}")
    override = cfg.get("frequency_override_GHz")
    return {
        "n": int(cfg.get("n", 1)),
        "convention": convention,
        "frequency_override": None if override is None else float(override) * GHZ,
        "decay": float(cfg.get("decay_MHz", 0.0)) * MHZ,
    }


def _parse_applied_field(cfg: dict) -> dict:
    _check_keys(cfg, ("direction", "magnitude_gauss"), "applied_field")
    direction = _vec3(cfg.get("direction", (1.0, 0.0, 0.0)), "applied_field")
    magnitude_T = float(cfg.get("magnitude_gauss", 0.0)) * GAUSS
    return {
        "direction": direction / np.linalg.norm(direction),
        "B_tesla": magnitude_T,
        "H_A_per_m": magnitude_T / MU0,
    }


def _parse_axis(cfg: dict, context: str) -> np.ndarray:
    _check_keys(cfg, ("start", "stop", "steps"), context)
    steps = int(_require(cfg, "steps", context))
    if steps < 1:
        raise ConfigurationError(f"{context}: steps must be >= 1")
    start = float(_require(cfg, "start", context))
    stop = float(_require(cfg, "stop", context))
    if steps > 1 and not stop > start:
        raise ConfigurationError(f"{context}: need stop > start for a sweep axis")
    return np.linspace(start, stop, steps)


def _parse_distances(value, context: str) -> list:
    if not isinstance(value, (list, tuple)) or not value:
        raise ConfigurationError(f"{context}: expected a non-empty list of distances")
    dists = [float(v) for v in value]
    if any(d <= 0.0 for d in dists):
        raise ConfigurationError(f"{context}: distances must be positive")
    if sorted(dists) != dists:
        raise ConfigurationError(f"{context}: distances must be increasing")
    return dists


def load_scenario(path) -> Scenario:
    """Parse and validate a scenario file; raises ConfigurationError."""
    p = Path(path)
    try:
        raw_bytes = p.read_bytes()
    except OSError as exc:
        raise ConfigurationError(f"cannot read scenario file {p}: {exc}") from exc
    try:
        raw = json.loads(raw_bytes.decode("utf-8"))
    except (ValueError, UnicodeDecodeError) as exc:
        raise ConfigurationError(f"scenario file {p} is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ConfigurationError(f"scenario file {p} must hold a JSON object")
    _check_keys(raw, _TOP_KEYS, "scenario")

    materials = dict(BUNDLED_MATERIALS)
    for i, mcfg in enumerate(raw.get("materials", [])):
        mat = parse_material(mcfg, f"materials[{i}]")
        materials[mat.name] = mat

    scn = Scenario(
        name=str(raw.get("name", p.stem)),
        description=str(raw.get("description", "")),
        materials=materials,
        source_path=p,
        source_bytes=raw_bytes,
    )
    for lname, lcfg in raw.get("loops", {}).items():
        scn.loops[lname] = parse_loop(lcfg, f"loops.{lname}")
    if "film" in raw:
        scn.film = parse_film(raw["film"], materials, "film")
    if "mode" in raw:
        scn.mode = _parse_mode(raw["mode"])
    if "applied_field" in raw:
        scn.applied_field = _parse_applied_field(raw["applied_field"])

    if "coupling" in raw:
        cfg = raw["coupling"]
        _check_keys(
            cfg,
            ("loop", "distances_um", "quadrature", "far_field_fit_min_um"),
            "coupling",
        )
        loop_name = _require(cfg, "loop", "coupling")
        if loop_name not in scn.loops:
            raise ConfigurationError(f"coupling: loop {loop_name!r} is not defined")
        quad = cfg.get("quadrature", {})
        _check_keys(
            quad, ("base_counts", "tolerance", "max_levels", "refinement_factor"), "coupling.quadrature"
        )
        scn.coupling = {
            "loop": loop_name,
            "distances": [d * UM for d in _parse_distances(
                _require(cfg, "distances_um", "coupling"), "coupling.distances_um")],
            "quadrature": quad,
            "far_field_fit_min": float(cfg.get("far_field_fit_min_um", math.inf)) * UM,
        }

    if "spectrum" in raw:
        cfg = raw["spectrum"]
        _check_keys(
            cfg,
            ("qubit", "spinwave", "couplings_MHz", "qubit_freq_GHz", "drive_GHz"),
            "spectrum",
        )
        qub = _require(cfg, "qubit", "spectrum")
        _check_keys(qub, ("Delta_GHz", "Gamma_fq_MHz", "Ip_nA"), "spectrum.qubit")
        sw = _require(cfg, "spinwave", "spectrum")
        _check_keys(sw, ("frequency_GHz", "decay_MHz"), "spectrum.spinwave")
        scn.spectrum = {
            "Delta": float(_require(qub, "Delta_GHz", "spectrum.qubit")) * GHZ,
            "Gamma_fq": float(qub.get("Gamma_fq_MHz", 0.0)) * MHZ,
            "Ip": float(qub.get("Ip_nA", 500.0)) * NA,
            "omega_sw": float(_require(sw, "frequency_GHz", "spectrum.spinwave")) * GHZ,
            "Gamma_sw": float(sw.get("decay_MHz", 0.0)) * MHZ,
            "couplings": [float(g) * MHZ for g in cfg.get("couplings_MHz", [0.0])],
            "qubit_freqs": _parse_axis(_require(cfg, "qubit_freq_GHz", "spectrum"),
                                       "spectrum.qubit_freq_GHz") * GHZ,
            "drives": _parse_axis(_require(cfg, "drive_GHz", "spectrum"),
                                  "spectrum.drive_GHz") * GHZ,
        }

    if "inductance" in raw:
        cfg = raw["inductance"]
        _check_keys(cfg, ("loops", "tolerance"), "inductance")
        names = _require(cfg, "loops", "inductance")
        for n in names:
            if n not in scn.loops:
                raise ConfigurationError(f"inductance: loop {n!r} is not defined")
        if len(names) < 2:
            raise ConfigurationError("inductance: need at least two loops")
        scn.inductance = {"loops": list(names), "tolerance": float(cfg.get("tolerance", 1e-6))}

    if "stray" in raw:
        cfg = raw["stray"]
        _check_keys(cfg, ("loop", "distances_um", "samples_per_segment"), "stray")
        loop_name = _require(cfg, "loop", "stray")
        if loop_name not in scn.loops:
            raise ConfigurationError(f"stray: loop {loop_name!r} is not defined")
        scn.stray = {
            "loop": loop_name,
            "distances": [d * UM for d in _parse_distances(
                _require(cfg, "distances_um", "stray"), "stray.distances_um")],
            "samples_per_segment": int(cfg.get("samples_per_segment", 8)),
        }

    if "switch" in raw:
        cfg = raw["switch"]
        _check_keys(
            cfg,
            ("coupling_distance_um", "g_MHz", "on_detuning_MHz", "gamma_sw_MHz",
             "cap_coupling_MHz", "cap_detuning_MHz", "gamma_cap_MHz", "inductance_pair",
             "g_ind_MHz"),
            "switch",
        )
        pair = cfg.get("inductance_pair")
        if pair is not None:
            if len(pair) != 2 or any(n not in scn.loops for n in pair):
                raise ConfigurationError("switch: inductance_pair must name two defined loops")
        if cfg.get("g_MHz") is None and cfg.get("coupling_distance_um") is None:
            raise ConfigurationError("switch: need g_MHz or coupling_distance_um")
        if cfg.get("g_ind_MHz") is None and pair is None:
            raise ConfigurationError("switch: need g_ind_MHz or inductance_pair")
        scn.switch = {
            "coupling_distance": None
            if cfg.get("coupling_distance_um") is None
            else float(cfg["coupling_distance_um"]) * UM,
            "g": None if cfg.get("g_MHz") is None else float(cfg["g_MHz"]) * MHZ,
            "on_detuning": float(cfg.get("on_detuning_MHz", 400.0)) * MHZ,
            "gamma_sw": float(cfg.get("gamma_sw_MHz", 0.0)) * MHZ,
            "cap_coupling": float(cfg.get("cap_coupling_MHz", 0.0)) * MHZ,
            "cap_detuning": float(cfg.get("cap_detuning_MHz", 0.0)) * MHZ,
            "gamma_cap": float(cfg.get("gamma_cap_MHz", 0.0)) * MHZ,
            "inductance_pair": None if pair is None else list(pair),
            "g_ind": None if cfg.get("g_ind_MHz") is None else float(cfg["g_ind_MHz"]) * MHZ,
        }

    if "field_map" in raw:
        cfg = raw["field_map"]
        _check_keys(cfg, ("loop", "lo_um", "hi_um", "resolution"), "field_map")
        loop_name = _require(cfg, "loop", "field_map")
        if loop_name not in scn.loops:
            raise ConfigurationError(f"field_map: loop {loop_name!r} is not defined")
        resolution = [int(r) for r in _require(cfg, "resolution", "field_map")]
        if len(resolution) != 3 or any(r < 1 for r in resolution):
            raise ConfigurationError("field_map: resolution must be three counts >= 1")
        scn.field_map = {
            "loop": loop_name,
            "lo": _vec3(_require(cfg, "lo_um", "field_map"), "field_map.lo_um") * UM,
            "hi": _vec3(_require(cfg, "hi_um", "field_map"), "field_map.hi_um") * UM,
            "resolution": resolution,
        }

    if "outputs" in raw:
        out = raw["outputs"]
        _check_keys(
            out,
            ("coupling_csv", "spectrum_csv_prefix", "inductance_json", "switch_json",
             "stray_csv", "pssw_csv", "field_csv"),
            "outputs",
        )
        scn.outputs = dict(out)
    return scn
