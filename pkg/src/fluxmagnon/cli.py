"""Scenario-driven command line: sweeps to CSV/JSON with a run manifest.

Every invocation writes its data files atomically (temp file + rename)
plus one JSON manifest recording the scenario hash, library versions,
backend, wall-clock timings and the sha256 of each output.  Data files
are byte-identical across repeated runs; the manifest's timing block is
the only non-deterministic output.

Exit codes: 0 success, 2 validation error, 3 numerical non-convergence,
64 usage error, 1 unexpected failure.
"""

from __future__ import annotations

import argparse
import hashlib
import io
import json
import math
import sys
import tempfile
import time
import warnings
from importlib import resources
from pathlib import Path

import numpy as np

from . import __version__
from ._backend import BACKEND
from .coupling import QuadratureSettings, coupling_strength, coupling_vs_distance
from .errors import ConvergenceWarning, FluxmagnonError
from .geometry import field_grid
from .inductance import inductive_coupling_frequency, mutual_inductance
from .magnonics import (
    CappingLayer,
    FilmSpec,
    RectangleOutline,
    make_pssw_mode,
    profile_wavevector,
    pssw_frequency,
    stray_field,
)
from .quantities import COFEB, MU0, YIG
from .scenario import GAUSS, GHZ, MHZ, Scenario, UM, load_scenario
from .spectra import QubitParams, SpinWaveOscillator, extract_splitting, spectrum_map
from .switch import SwitchConfig, broadening_budget, magnon_mediated_J, off_detuning, total_coupling

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_NONCONVERGENCE = 3
EXIT_USAGE = 64

REPRODUCE_TARGETS = ("fig2", "fig3", "fig4")


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors get their own exit code
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------------------
# output plumbing
# ---------------------------------------------------------------------------

def _atomic_write_bytes(path: Path, data: bytes) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with open(fd, "wb") as f:
            f.write(data)
        Path(tmp).replace(path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return f"{value:.11e}"
    return str(value)


class RunContext:
    """Collects outputs, extras, warnings and timings for the manifest."""

    def __init__(self, command: str, scenario: Scenario, out_dir: Path, threads: int):
        self.command = command
        self.scenario = scenario
        self.out_dir = out_dir
        self.threads = threads
        self.outputs: dict[str, str] = {}
        self.extras: dict = {}
        self.timings: dict[str, float] = {}
        self.warnings: list[str] = []
        self._t0 = time.perf_counter()

    def write_csv(self, name: str, header, rows) -> Path:
        buf = io.StringIO()
        buf.write(",".join(header) + "\n")
        for row in rows:
            buf.write(",".join(_fmt(v) for v in row) + "\n")
        return self.write_bytes(name, buf.getvalue().encode("utf-8"))

    def write_json(self, name: str, payload) -> Path:
        data = (json.dumps(payload, indent=2, sort_keys=True) + "\n").encode("utf-8")
        return self.write_bytes(name, data)

    def write_bytes(self, name: str, data: bytes) -> Path:
        path = self.out_dir / name
        _atomic_write_bytes(path, data)
        self.outputs[name] = hashlib.sha256(data).hexdigest()
        return path

    def timed(self, label: str):
        ctx = self

        class _Timer:
            def __enter__(self):
                self.start = time.perf_counter()

            def __exit__(self, *exc):
                ctx.timings[label] = ctx.timings.get(label, 0.0) + time.perf_counter() - self.start

        return _Timer()

    def record_warnings(self, caught) -> None:
        for w in caught:
            self.warnings.append(f"{w.category.__name__}: {w.message}")

    @property
    def nonconverged(self) -> bool:
        return any(w.startswith("ConvergenceWarning") for w in self.warnings)

    def finish(self) -> None:
        try:
            import numba

            numba_version = numba.__version__
        except ImportError:
            numba_version = None
        manifest = {
            "command": self.command,
            "scenario": {
                "name": self.scenario.name,
                "path": None if self.scenario.source_path is None
                else str(self.scenario.source_path),
                "sha256": hashlib.sha256(self.scenario.source_bytes).hexdigest(),
            },
            "package_version": __version__,
            "backend": BACKEND,
            "threads": self.threads,
            "versions": {
                "python": sys.version.split()[0],
                "numpy": np.__version__,
                "numba": numba_version,
            },
            "outputs": self.outputs,
            "extras": self.extras,
            "warnings": self.warnings,
            "timings_s": {k: round(v, 6) for k, v in self.timings.items()},
        }
        manifest["timings_s"]["total"] = round(time.perf_counter() - self._t0, 6)
        self.write_bytes(
            f"{self.scenario.name}_{self.command}_manifest.json",
            (json.dumps(manifest, indent=2, sort_keys=True) + "\n").encode("utf-8"),
        )


def _default_scenario() -> Scenario:
    """Built-in defaults: the square-loop / 3x3 um film arrangement."""
    film = FilmSpec(
        material=YIG,
        outline=RectangleOutline(3.0e-6, 3.0e-6),
        thickness=80.0e-9,
        center=(0.0, 1.04e-6, 0.0),
        normal=(0.0, 1.0, 0.0),
        pinning="top_pinned",
        capping=CappingLayer(COFEB, 10.0e-9),
    )
    scn = Scenario(name="defaults")
    scn.film = film
    scn.mode = {"n": 1, "convention": "integer_n",
                "frequency_override": 4.57e9, "decay": 20.0e6}
    scn.applied_field = {
        "direction": np.array([1.0, 0.0, 0.0]),
        "B_tesla": 10.0 * GAUSS,
        "H_A_per_m": 10.0 * GAUSS / MU0,
    }
    scn.source_bytes = b"(built-in defaults)"
    return scn


def _apply_overrides(scn: Scenario, args) -> None:
    if getattr(args, "convention", None):
        scn.mode = {**(scn.mode or {"n": 1, "decay": 0.0, "frequency_override": None}),
                    "convention": args.convention}
    if getattr(args, "mode_freq_override", None) is not None:
        scn.mode = {**scn.mode, "frequency_override": args.mode_freq_override * GHZ}
    if getattr(args, "tol", None) is not None:
        if scn.coupling:
            scn.coupling["quadrature"] = {**scn.coupling.get("quadrature", {}),
                                          "tolerance": args.tol}
        if scn.inductance:
            scn.inductance["tolerance"] = args.tol


def _quadrature_from(scn: Scenario) -> QuadratureSettings:
    quad = scn.coupling.get("quadrature", {})
    kwargs = {}
    if "base_counts" in quad:
        kwargs["base_counts"] = tuple(quad["base_counts"])
    if "tolerance" in quad:
        kwargs["tolerance"] = float(quad["tolerance"])
    if "max_levels" in quad:
        kwargs["max_levels"] = int(quad["max_levels"])
    if "refinement_factor" in quad:
        kwargs["refinement_factor"] = int(quad["refinement_factor"])
    return QuadratureSettings(**kwargs)


def _mode_from(scn: Scenario):
    mode_cfg = scn.mode or {"n": 1, "convention": "integer_n",
                            "frequency_override": None, "decay": 0.0}
    return make_pssw_mode(
        scn.film,
        mode_cfg["n"],
        scn.applied_field.get("H_A_per_m", 0.0) if scn.applied_field else 0.0,
        convention=mode_cfg.get("convention", "integer_n"),
        frequency_override=mode_cfg.get("frequency_override"),
        decay=mode_cfg.get("decay", 0.0),
    )


# ---------------------------------------------------------------------------
# command bodies (shared between direct commands and `reproduce`)
# ---------------------------------------------------------------------------

def _run_pssw(scn: Scenario, ctx: RunContext, n_max: int) -> None:
    film = scn.film
    if film is None:
        raise FluxmagnonError("pssw needs a film (scenario or defaults)")
    mode_cfg = scn.mode or {"n": 1, "convention": "integer_n",
                            "frequency_override": None, "decay": 0.0}
    convention = mode_cfg.get("convention", "integer_n")
    override = mode_cfg.get("frequency_override")
    hext = scn.applied_field.get("H_A_per_m", 0.0) if scn.applied_field else 0.0
    rows = []
    with ctx.timed("pssw"):
        for n in range(n_max + 1):
            k_z = profile_wavevector(n, film)
            lam = 2.0 * math.pi / k_z if k_z > 0.0 else math.inf
            f = pssw_frequency(n, film, hext, convention)
            rows.append((n, k_z, lam, f))
    name = scn.outputs.get("pssw_csv", f"{scn.name}_pssw_modes.csv")
    ctx.write_csv(name, ("n", "k_z_rad_per_m", "lambda_m", "f_Hz"), rows)
    sel = mode_cfg.get("n", 1)
    f_sel = rows[sel][3] if sel <= n_max else pssw_frequency(sel, film, hext, convention)
    ctx.extras["pssw"] = {
        "selected_n": sel,
        "convention": convention,
        "f_GHz": f_sel / GHZ,
        "f_override_GHz": None if override is None else override / GHZ,
        "Hext_gauss": hext * MU0 / GAUSS,
    }
    line = f"n={sel}: f = {f_sel / GHZ:.4f} GHz ({convention})"
    if override is not None:
        line += f"; experimental override = {override / GHZ:.4f} GHz"
    print(line)


def _run_field(scn: Scenario, ctx: RunContext) -> None:
    if not scn.field_map:
        raise FluxmagnonError("scenario has no field_map section")
    cfg = scn.field_map
    loop = scn.loops[cfg["loop"]]
    with ctx.timed("field"):
        grid = field_grid(loop, (cfg["lo"], cfg["hi"]), cfg["resolution"])
    rows = (
        (p[0] / UM, p[1] / UM, p[2] / UM, b[0], b[1], b[2])
        for p, b in zip(grid.points, grid.values)
    )
    name = scn.outputs.get("field_csv", f"{scn.name}_field.csv")
    ctx.write_csv(name, ("x_um", "y_um", "z_um", "Bx_T", "By_T", "Bz_T"), rows)
    ctx.extras["field"] = {"resolution": list(grid.shape), "loop": cfg["loop"]}


def _run_couple(scn: Scenario, ctx: RunContext) -> list:
    if not scn.coupling or scn.film is None:
        raise FluxmagnonError("scenario has no coupling section or film")
    loop = scn.loops[scn.coupling["loop"]]
    mode = _mode_from(scn)
    settings = _quadrature_from(scn)
    m_axis = scn.applied_field["direction"] if scn.applied_field else None
    with ctx.timed("couple"), warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        table = coupling_vs_distance(
            loop, scn.film, mode, scn.coupling["distances"], settings,
            magnetization_axis=m_axis,
        )
    ctx.record_warnings(caught)
    rows = [
        (d / UM, abs(res.g_eff) / MHZ, math.atan2(res.g_eff.imag, res.g_eff.real),
         res.npoints, res.converged)
        for d, res in table
    ]
    name = scn.outputs.get("coupling_csv", f"{scn.name}_coupling_vs_distance.csv")
    ctx.write_csv(name, ("d_um", "g_abs_MHz", "g_phase_rad", "npoints", "converged"), rows)
    extras = {"mode_frequency_GHz": mode.frequency / GHZ}
    fit_min = scn.coupling.get("far_field_fit_min", math.inf)
    far = [(d, abs(res.g_eff)) for d, res in table if d >= fit_min]
    if len(far) >= 3:
        logd = np.log([d for d, _ in far])
        logg = np.log([g for _, g in far])
        extras["far_field_slope"] = float(np.polyfit(logd, logg, 1)[0])
    near = [abs(res.g_eff) for d, res in table if d < fit_min]
    if len(near) >= 2:
        extras["near_monotone_decreasing"] = bool(
            all(a > b for a, b in zip(near, near[1:]))
        )
    extras["all_converged"] = bool(all(res.converged for _, res in table))
    if not extras["all_converged"]:
        ctx.warnings.append("ConvergenceWarning: coupling quadrature did not converge")
    ctx.extras["couple"] = extras
    return table


def _run_spectrum(scn: Scenario, ctx: RunContext) -> None:
    if not scn.spectrum:
        raise FluxmagnonError("scenario has no spectrum section")
    cfg = scn.spectrum
    qubit = QubitParams(Delta=cfg["Delta"], epsilon=0.0, Gamma_fq=cfg["Gamma_fq"],
                        Ip=cfg["Ip"])
    sw = SpinWaveOscillator(omega_sw=cfg["omega_sw"], Gamma_sw=cfg["Gamma_sw"])
    prefix = scn.outputs.get("spectrum_csv_prefix", f"{scn.name}_spectrum")
    results = {}
    for g in cfg["couplings"]:
        label = f"{g / MHZ:g}MHz"
        with ctx.timed(f"spectrum_g{label}"):
            smap = spectrum_map(qubit, cfg["qubit_freqs"], cfg["drives"], sw, g)
            splitting = extract_splitting(smap)
        buf = io.StringIO()
        buf.write("qubit_frequency_Hz," + ",".join(f"{d:.11e}" for d in smap.drive_axis) + "\n")
        body = np.column_stack([smap.bias_axis, smap.magnitude])
        np.savetxt(buf, body, fmt="%.11e", delimiter=",")
        ctx.write_bytes(f"{prefix}_g{label}.csv", buf.getvalue().encode("utf-8"))
        sidecar = {
            "coupling_MHz": g / MHZ,
            "Delta_GHz": cfg["Delta"] / GHZ,
            "Gamma_fq_MHz": cfg["Gamma_fq"] / MHZ,
            "omega_sw_GHz": cfg["omega_sw"] / GHZ,
            "Gamma_sw_MHz": cfg["Gamma_sw"] / MHZ,
            "drive_amplitude": 1.0,
            "splitting_MHz": None if splitting is None else splitting / MHZ,
        }
        ctx.write_json(f"{prefix}_g{label}.json", sidecar)
        results[label] = sidecar["splitting_MHz"]
    ctx.extras["spectrum"] = {"splitting_MHz": results}


def _run_inductance(scn: Scenario, ctx: RunContext) -> dict:
    if not scn.inductance:
        raise FluxmagnonError("scenario has no inductance section")
    names = scn.inductance["loops"]
    tol = scn.inductance["tolerance"]
    n = len(names)
    matrix = [[None] * n for _ in range(n)]
    coupling_mhz = [[None] * n for _ in range(n)]
    with ctx.timed("inductance"), warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        for i in range(n):
            for j in range(i + 1, n):
                la, lb = scn.loops[names[i]], scn.loops[names[j]]
                L = mutual_inductance(la, lb, tol)
                matrix[i][j] = matrix[j][i] = L
                f = inductive_coupling_frequency(L, la.current, lb.current)
                coupling_mhz[i][j] = coupling_mhz[j][i] = f / MHZ
    ctx.record_warnings(caught)
    payload = {
        "loops": list(names),
        "currents_A": {name: scn.loops[name].current for name in names},
        "mutual_inductance_H": matrix,
        "inductive_coupling_MHz": coupling_mhz,
        "tolerance": tol,
    }
    name = scn.outputs.get("inductance_json", f"{scn.name}_inductance.json")
    ctx.write_json(name, payload)
    ctx.extras["inductance"] = {
        "pairs": {
            f"{names[i]}|{names[j]}": matrix[i][j]
            for i in range(n)
            for j in range(i + 1, n)
        }
    }
    return payload


def _run_stray(scn: Scenario, ctx: RunContext) -> None:
    if not scn.stray or scn.film is None:
        raise FluxmagnonError("scenario has no stray section or film")
    loop = scn.loops[scn.stray["loop"]]
    m_dir = scn.applied_field["direction"] if scn.applied_field else scn.film.frame[0]
    b_applied = (scn.applied_field["B_tesla"] if scn.applied_field else 0.0) * m_dir
    k = scn.stray["samples_per_segment"]
    pts = []
    for seg in loop.segments:
        ts = (np.arange(k) + 0.5) / k
        if hasattr(seg, "point"):  # arc
            pts.append(seg.point(seg.start_angle + seg.sweep * ts))
        else:
            pts.append(seg.start[None, :] + (seg.end - seg.start)[None, :] * ts[:, None])
    wire = np.vstack(pts)
    rows = []
    with ctx.timed("stray"):
        for d in scn.stray["distances"]:
            center = scn.film.normal * (d + 0.5 * scn.film.thickness)
            film_d = scn.film.at_center(center)
            B = stray_field(film_d, m_dir, wire) + b_applied[None, :]
            mags = np.linalg.norm(B, axis=1)
            rows.append(
                (d / UM, mags.max() / GAUSS, mags.mean() / GAUSS, mags.min() / GAUSS)
            )
    name = scn.outputs.get("stray_csv", f"{scn.name}_stray_field.csv")
    ctx.write_csv(
        name, ("d_um", "B_total_max_gauss", "B_total_mean_gauss", "B_total_min_gauss"), rows
    )
    ctx.extras["stray"] = {
        "applied_gauss": (scn.applied_field["B_tesla"] / GAUSS) if scn.applied_field else 0.0,
        "wire_max_gauss": {f"{r[0]:g}": r[1] for r in rows},
    }


def _run_switch(scn: Scenario, ctx: RunContext) -> None:
    if not scn.switch:
        raise FluxmagnonError("scenario has no switch section")
    cfg = scn.switch
    g = cfg["g"]
    if g is None:
        mode = _mode_from(scn)
        settings = _quadrature_from(scn) if scn.coupling else QuadratureSettings()
        loop = scn.loops[scn.coupling["loop"]] if scn.coupling else next(iter(scn.loops.values()))
        d = cfg["coupling_distance"]
        m_axis = scn.applied_field["direction"] if scn.applied_field else None
        with ctx.timed("switch_coupling"), warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            center = scn.film.normal * (d + 0.5 * scn.film.thickness)
            res = coupling_strength(loop, scn.film.at_center(center), mode, settings,
                                    magnetization_axis=m_axis)
        ctx.record_warnings(caught)
        g = abs(res.g_eff)
    g_ind = cfg["g_ind"]
    if g_ind is None:
        la, lb = (scn.loops[nm] for nm in cfg["inductance_pair"])
        with ctx.timed("switch_inductance"), warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            L = mutual_inductance(la, lb, scn.inductance.get("tolerance", 1e-6)
                                  if scn.inductance else 1e-6)
        ctx.record_warnings(caught)
        g_ind = abs(inductive_coupling_frequency(L, la.current, lb.current))
    on_detuning = cfg["on_detuning"]
    j_on = magnon_mediated_J(g, g, on_detuning, on_detuning)
    delta_off = off_detuning(g, g, g_ind)
    cfg_on = SwitchConfig(
        g1=g, g2=g, delta1=on_detuning, delta2=on_detuning, g_ind=g_ind,
        gamma_sw=cfg["gamma_sw"], gamma_cap=cfg["gamma_cap"],
        cap_detuning=cfg["cap_detuning"], cap_coupling=cfg["cap_coupling"],
    )
    cfg_off = SwitchConfig(
        g1=g, g2=g, delta1=delta_off, delta2=delta_off, g_ind=g_ind,
        gamma_sw=cfg["gamma_sw"], gamma_cap=cfg["gamma_cap"],
        cap_detuning=cfg["cap_detuning"], cap_coupling=cfg["cap_coupling"],
    )
    budget = broadening_budget(cfg_on)
    report = {
        "g_MHz": g / MHZ,
        "g_ind_MHz": g_ind / MHZ,
        "J_on_MHz": j_on / MHZ,
        "on_detuning_MHz": on_detuning / MHZ,
        "J_off_detuning_MHz": delta_off / MHZ if math.isfinite(delta_off) else None,
        "total_on_MHz": total_coupling(cfg_on) / MHZ,
        "total_off_MHz": total_coupling(cfg_off) / MHZ,
        "broadening_budget_MHz": {k: v / MHZ for k, v in budget.items()},
    }
    name = scn.outputs.get("switch_json", f"{scn.name}_switch.json")
    ctx.write_json(name, report)
    ctx.extras["switch"] = report


# ---------------------------------------------------------------------------
# argument parsing and dispatch
# ---------------------------------------------------------------------------

def _bundled_scenario_path(target: str) -> Path:
    ref = resources.files("fluxmagnon").joinpath("scenarios", f"{target}.json")
    with resources.as_file(ref) as p:
        return Path(p)


def _load_for(args, *, allow_default: bool = False) -> Scenario:
    if getattr(args, "scenario", None):
        scn = load_scenario(args.scenario)
    elif allow_default:
        scn = _default_scenario()
    else:
        raise FluxmagnonError("this command needs --scenario <file>")
    _apply_overrides(scn, args)
    return scn


def build_parser() -> _Parser:
    parser = _Parser(
        prog="fluxmagnon",
        description="Design calculations for persistent-current loops coupled to "
        "standing spin waves in thin magnetic films.",
        epilog="exit codes: 0 ok, 2 validation error, 3 non-convergence, 64 usage",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--scenario", help="scenario JSON file")
        p.add_argument("--out", default="out", help="output directory (default: out)")
        p.add_argument("--threads", type=int, default=1,
                       help="worker cap (evaluation is serial and deterministic)")
        p.add_argument("--tol", type=float, default=None,
                       help="override relative tolerance for quadrature refinement")
        p.add_argument("--convention", choices=("integer_n", "half_integer_k"),
                       default=None, help="thickness mode-index convention")
        p.add_argument("--mode-freq-override", type=float, default=None, metavar="GHZ",
                       help="force the mode frequency (GHz)")

    p = sub.add_parser("pssw", help="standing-mode frequency table")
    common(p)
    p.add_argument("--n", type=int, default=5, help="highest mode index to tabulate")

    for name, help_text in (
        ("field", "sample the loop field on a grid"),
        ("couple", "coupling strength vs loop-film distance"),
        ("spectrum", "driven response maps and splitting extraction"),
        ("inductance", "mutual inductance matrix of named loops"),
        ("switch", "two-qubit switch operating-point report"),
    ):
        p = sub.add_parser(name, help=help_text)
        common(p)

    p = sub.add_parser("reproduce", help="run a bundled scenario end to end")
    common(p)
    p.add_argument("target", choices=REPRODUCE_TARGETS + ("all",))
    return parser


def _dispatch(args) -> int:
    if args.threads < 1:
        raise FluxmagnonError("--threads must be >= 1")
    out_dir = Path(args.out)

    if args.command == "reproduce":
        targets = REPRODUCE_TARGETS if args.target == "all" else (args.target,)
        rc = EXIT_OK
        for target in targets:
            if getattr(args, "scenario", None):
                scn = load_scenario(args.scenario)
            else:
                scn = load_scenario(_bundled_scenario_path(target))
            _apply_overrides(scn, args)
            ctx = RunContext(f"reproduce_{target}", scn, out_dir, args.threads)
            if target == "fig2":
                _run_couple(scn, ctx)
            elif target == "fig3":
                _run_spectrum(scn, ctx)
            else:
                _run_couple(scn, ctx)
                _run_inductance(scn, ctx)
                _run_stray(scn, ctx)
                _run_switch(scn, ctx)
            ctx.finish()
            if ctx.nonconverged:
                rc = EXIT_NONCONVERGENCE
        return rc

    scn = _load_for(args, allow_default=args.command == "pssw")
    ctx = RunContext(args.command, scn, out_dir, args.threads)
    if args.command == "pssw":
        _run_pssw(scn, ctx, args.n)
    elif args.command == "field":
        _run_field(scn, ctx)
    elif args.command == "couple":
        _run_couple(scn, ctx)
    elif args.command == "spectrum":
        _run_spectrum(scn, ctx)
    elif args.command == "inductance":
        _run_inductance(scn, ctx)
    elif args.command == "switch":
        _run_switch(scn, ctx)
    else:  # pragma: no cover - argparse guards this
        raise FluxmagnonError(f"unknown command {args.command!r}")
    ctx.finish()
    return EXIT_NONCONVERGENCE if ctx.nonconverged else EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except FluxmagnonError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
