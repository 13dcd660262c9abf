"""Acceptance suite: every release criterion at its pinned tolerance.

Each test prints one ``[criterion N] PASS/FAIL`` line (visible with
``pytest -s`` or on failure).  Criterion 3 is a known-red check: the
required far-field fit window sits inside the finite-size crossover of
the source loop, so its stated tolerance cannot be met by the physics;
the test states the measured value and the reason.
"""

import json
import math

import numpy as np
import pytest
from scipy.special import ellipe, ellipk

import fluxmagnon as fm
from fluxmagnon import cli
from fluxmagnon.quantities import MU0

MHZ = 1e6
NEAR_DISTANCES = np.array([0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0]) * 1e-6
FAR_DISTANCES = np.geomspace(5e-6, 50e-6, 7)


def report(num, ok, detail):
    line = f"[criterion {num:2d}] {'PASS' if ok else 'FAIL'}: {detail}"
    print(line)
    assert ok, line


@pytest.fixture(scope="module")
def near_sweep(fig1_loop, fig1_film, n1_mode):
    return fm.coupling_vs_distance(fig1_loop, fig1_film, n1_mode, NEAR_DISTANCES,
                                   magnetization_axis=(1, 0, 0))


@pytest.fixture(scope="module")
def far_sweep(fig1_loop, fig1_film, n1_mode):
    return fm.coupling_vs_distance(fig1_loop, fig1_film, n1_mode, FAR_DISTANCES,
                                   magnetization_axis=(1, 0, 0))


@pytest.fixture(scope="module")
def fig4_parts():
    qubit_a = fm.make_arc_loop(10e-6, 13.2e-6, (0, 0, 0), 500e-9,
                               normal=(0, 1, 0), style="pillow")
    qubit_b = fm.make_arc_loop(10e-6, 13.2e-6, (50e-6, 0, 0), 500e-9,
                               normal=(0, 1, 0), style="pillow")
    squid_a = fm.make_squid_loop(10e-6, 13.2e-6, 0.3e-6, (0, 0, 0), 500e-9,
                                 normal=(0, 1, 0))
    film = fm.FilmSpec(
        material=fm.YIG,
        outline=fm.RoundedRectOutline(10 * math.sqrt(2) * 1e-6, 10e-6),
        thickness=80e-9,
        center=(0, 0.54e-6, 0),
        normal=(0, 1, 0),
        pinning="top_pinned",
        capping=fm.CappingLayer(fm.COFEB, 10e-9),
    )
    return qubit_a, qubit_b, squid_a, film


def test_criterion_01_mode_frequency(fig1_film, hext_10g):
    f = fm.pssw_frequency(1, fig1_film, hext_10g)
    report(1, abs(f - 3.39e9) <= 0.05e9,
           f"n=1 mode frequency {f / 1e9:.4f} GHz within 3.39 +/- 0.05 GHz")


def test_criterion_02_near_field_coupling(near_sweep):
    mags = np.array([abs(r.g_eff) for _, r in near_sweep]) / MHZ
    monotone = bool(np.all(np.diff(mags) < 0))
    floor_ok = bool(np.all(mags[NEAR_DISTANCES <= 1.5e-6 + 1e-12] > 15.0))
    at_1um = mags[list(NEAR_DISTANCES).index(1.0e-6)]
    band_ok = 20.0 < at_1um < 80.0
    converged = all(r.converged for _, r in near_sweep)
    report(
        2,
        monotone and floor_ok and band_ok and converged,
        f"near couplings {np.array2string(mags, precision=1)} MHz over d=0.5..2 um: "
        f"monotone={monotone}, >15 MHz at d<=1.5 um={floor_ok}, "
        f"g(1 um)={at_1um:.1f} MHz in (20, 80)",
    )


def test_criterion_03_far_field_slope(far_sweep):
    mags = np.array([abs(r.g_eff) for _, r in far_sweep])
    slope = float(np.polyfit(np.log(FAR_DISTANCES), np.log(mags), 1)[0])
    report(
        3,
        abs(slope + 3.0) <= 0.1,
        f"far-field log-log slope over d in [5, 50] um = {slope:.3f} "
        "(required -3 +/- 0.1; unattainable for a 5 um loop: the window sits in "
        "the finite-size crossover, the local slope only reaches -2.9 beyond "
        "~16 um, and the same sweep over [20, 200] um does give -2.98)",
    )


def test_criterion_04_vacuum_rabi_splitting():
    qubit = fm.QubitParams(Delta=4.52e9, epsilon=0.0, Gamma_fq=2e6)
    sw = fm.SpinWaveOscillator(4.57e9, 20e6)
    bias = np.linspace(4.52e9, 4.70e9, 251)
    drive = np.linspace(4.45e9, 4.70e9, 1001)
    coupled = fm.extract_splitting(fm.spectrum_map(qubit, bias, drive, sw, 30 * MHZ))
    bare = fm.extract_splitting(fm.spectrum_map(qubit, bias, drive, sw, 0.0))
    ok = coupled is not None and abs(coupled - 60 * MHZ) <= 2 * MHZ and bare is None
    report(4, ok,
           f"extracted splitting {coupled / MHZ:.2f} MHz within 60 +/- 2 MHz; "
           f"bare map has no avoided crossing ({bare is None})")


def test_criterion_05_two_qubit_coupling_algebra():
    j_off = fm.magnon_mediated_J(50 * MHZ, 50 * MHZ, -630 * MHZ, -630 * MHZ)
    j_on = fm.magnon_mediated_J(50 * MHZ, 50 * MHZ, 400 * MHZ, 400 * MHZ)
    total_on = fm.total_coupling(fm.SwitchConfig(
        g1=50 * MHZ, g2=50 * MHZ, delta1=400 * MHZ, delta2=400 * MHZ,
        g_ind=3.97 * MHZ))
    delta_off = fm.off_detuning(50 * MHZ, 50 * MHZ, 3.97 * MHZ)
    ok = (
        abs(j_off + 3.97 * MHZ) <= 0.01 * MHZ
        and j_on == pytest.approx(6.25 * MHZ, rel=1e-12)
        and total_on == pytest.approx(10.22 * MHZ, rel=1e-12)
        and abs(delta_off + 630 * MHZ) <= 1 * MHZ
    )
    report(5, ok,
           f"J(-630 MHz)={j_off / MHZ:.4f} MHz, J(+400 MHz)={j_on / MHZ:.3f} MHz, "
           f"total ON={total_on / MHZ:.2f} MHz, OFF detuning={delta_off / MHZ:.1f} MHz")


def test_criterion_06_decay_budget():
    cases = [
        (fm.converted_decay(500 * MHZ, 3250 * MHZ, 300 * MHZ), 7.1 * MHZ),
        (fm.converted_decay(50 * MHZ, 400 * MHZ, 10 * MHZ), 0.156 * MHZ),
        (fm.converted_decay(20 * MHZ, 3300 * MHZ, 300 * MHZ), 0.011 * MHZ),
        (fm.converted_decay(200 * MHZ, 3200 * MHZ, 300 * MHZ), 1.2 * MHZ),
    ]
    rel = [abs(got - want) / want for got, want in cases]
    report(6, all(r <= 0.05 for r in rel),
           "converted decays "
           + ", ".join(f"{got / MHZ:.4f}~{want / MHZ:g} MHz" for got, want in cases)
           + f" (max rel dev {max(rel):.3f} <= 0.05)")


def test_criterion_07_stray_field_budget(fig1_film, fig1_loop):
    b_applied = np.array([1e-3, 0.0, 0.0])
    verts = fm.discretize(fig1_loop).vertices
    t = np.linspace(0, 1, 16, endpoint=False)
    wire = np.vstack([
        a[None, :] + (b - a)[None, :] * t[:, None]
        for a, b in zip(verts, np.roll(verts, -1, axis=0))
    ])
    gauss = []
    for d in (1.0e-6, 1.25e-6, 1.5e-6):
        film = fig1_film.at_center((0.0, d + 40e-9, 0.0))
        B = fm.stray_field(film, (1, 0, 0), wire) + b_applied
        gauss.append(np.linalg.norm(B, axis=1).max() / 1e-4)
    lo, hi = 21.5 * 0.7, 37.0 * 1.3
    ok = all(lo <= g <= hi for g in gauss) and gauss[0] > gauss[1] > gauss[2]
    report(7, ok,
           f"total wire field {['%.1f' % g for g in gauss]} G at d=1.0/1.25/1.5 um "
           f"within [{lo:.1f}, {hi:.1f}] G and decreasing")


def test_criterion_08_oracle_suites(rng):
    checks = []

    # Biot-Savart vs analytic square-centre and on-axis circle
    sq = fm.make_square_loop(5e-6, (0, 0, 0), (0, 0, 1), 500e-9)
    b_sq = np.linalg.norm(fm.field_at(sq, (0, 0, 0)))
    err_sq = abs(b_sq - 2 * math.sqrt(2) * MU0 * 500e-9 / (math.pi * 5e-6)) / b_sq
    circ = fm.CurrentLoop((fm.Arc((0, 0, 0), 10e-6, (0, 0, 1), 0.0, 2 * math.pi),), 1e-6)
    b_c = fm.field_at(circ, (0, 0, 4e-6))[2]
    b_ref = MU0 * 1e-6 * (10e-6) ** 2 / (2 * ((10e-6) ** 2 + (4e-6) ** 2) ** 1.5)
    err_c = abs(b_c - b_ref) / b_ref
    checks.append(("biot-savart", max(err_sq, err_c) < 1e-3))

    # Neumann vs coaxial elliptic integral, symmetry, dipole slope
    R, d = 10e-6, 1e-6
    c1 = fm.CurrentLoop((fm.Arc((0, 0, 0), R, (0, 0, 1), 0.0, 2 * math.pi),), 1.0)
    c2 = fm.CurrentLoop((fm.Arc((0, 0, d), R, (0, 0, 1), 0.0, 2 * math.pi),), 1.0)
    k2 = 4 * R * R / ((2 * R) ** 2 + d**2)
    k = math.sqrt(k2)
    l_ref = MU0 * R * ((2 / k - k) * ellipk(k2) - (2 / k) * ellipe(k2))
    l_ab = fm.mutual_inductance(c1, c2)
    l_ba = fm.mutual_inductance(c2, c1)
    checks.append(("neumann-coaxial", abs(l_ab - l_ref) / l_ref < 1e-3))
    checks.append(("neumann-symmetry", abs(l_ab - l_ba) <= 1e-6 * abs(l_ab)))
    ds = np.geomspace(100e-6, 400e-6, 4)
    ls = [abs(fm.mutual_inductance(sq, fm.make_square_loop(5e-6, (dd, 0, 0), (0, 0, 1), 1.0)))
          for dd in ds]
    slope = np.polyfit(np.log(ds), np.log(ls), 1)[0]
    checks.append(("neumann-dipole-slope", abs(slope + 3.0) <= 0.05))

    # quadrature vs direct lattice sum on a matched 32^3 configuration
    n, a = 32, 1e-7
    B = rng.normal(scale=1e-7, size=(n, n, n, 3))
    kvec = np.array([2 * math.pi / (9 * a), 0.0, 2 * math.pi / (5 * a)])
    g_oracle = abs(fm.lattice_coupling_oracle(B, 2.5, kvec, a, origin=(a / 2,) * 3))
    mat = fm.MaterialParams("lat", Ms=1e5, Aex=1e-12, spin_density=1 / a**3, site_spin=2.5)
    film = fm.FilmSpec(mat, fm.RectangleOutline(n * a, n * a), n * a,
                       (n * a / 2,) * 3, (0, 0, 1), "both_free")

    def lookup(points):
        idx = np.floor(points / a).astype(int)
        return B[idx[:, 0], idx[:, 1], idx[:, 2]]

    g_quad = abs(fm.coupling_integral(
        lookup, film, fm.plane_wave_weight(kvec),
        fm.QuadratureSettings(base_counts=(n, n, n), max_levels=1),
        spin=2.5, magnetization_axis=(1, 0, 0)).g_eff)
    checks.append(("lattice-vs-quadrature", abs(g_quad - g_oracle) / g_oracle < 1e-2))

    # cancellation of an integer-period weight against a uniform field
    mat2 = fm.MaterialParams("c", Ms=1e5, Aex=1e-12, spin_density=2.14e28)
    film_free = fm.FilmSpec(mat2, fm.RectangleOutline(3e-6, 3e-6), 80e-9,
                            (0, 0, 0), (0, 0, 1), "both_free")
    film_mixed = fm.FilmSpec(mat2, fm.RectangleOutline(3e-6, 3e-6), 80e-9,
                             (0, 0, 0), (0, 0, 1), "top_pinned")
    mode2 = fm.make_pssw_mode(film_free, 2, 0.0, frequency_override=1e9)
    mode1 = fm.make_pssw_mode(film_mixed, 1, 0.0, frequency_override=1e9)
    uniform = lambda pts: np.tile([0.0, 2e-7, 0.0], (pts.shape[0], 1))
    qset = fm.QuadratureSettings(base_counts=(4, 4, 16), max_levels=1)
    g_cancel = abs(fm.coupling_integral(
        uniform, film_free,
        lambda p, z: fm.mode_profile(mode2, film_free, np.clip(z, 0, 80e-9)),
        qset, spin=0.5, magnetization_axis=(1, 0, 0)).g_eff)
    g_mixed = abs(fm.coupling_integral(
        uniform, film_mixed,
        lambda p, z: fm.mode_profile(mode1, film_mixed, np.clip(z, 0, 80e-9)),
        qset, spin=0.5, magnetization_axis=(1, 0, 0)).g_eff)
    checks.append(("cancellation", g_cancel * 1e3 <= g_mixed))

    # sqrt(N): doubling the volume under a uniform field scales |g| by sqrt(2)
    g_vols = []
    for width in (3e-6, 6e-6):
        filmv = fm.FilmSpec(mat2, fm.RectangleOutline(width, 3e-6), 80e-9,
                            (0, 0, 0), (0, 0, 1), "both_free")
        g_vols.append(abs(fm.coupling_integral(
            uniform, filmv, lambda p, z: np.ones(p.shape[0]),
            fm.QuadratureSettings(base_counts=(8, 8, 8), max_levels=1),
            spin=0.5, magnetization_axis=(1, 0, 0)).g_eff))
    checks.append(("sqrtN", abs(g_vols[1] / g_vols[0] - math.sqrt(2)) <= 0.01 * math.sqrt(2)))

    # response poles vs the independent eigenvalue oracle
    q = fm.QubitParams(4.52e9, 0.7e9, 2e6)
    sw = fm.SpinWaveOscillator(4.57e9, 20e6)
    gd = fm.dressed_coupling(q, 30 * MHZ)
    eigs = sorted(np.linalg.eigvals(np.array(
        [[fm.qubit_frequency(q) - 1j * 2e6, gd], [gd, 4.57e9 - 1j * 20e6]])),
        key=lambda z: z.real)
    poles = sorted(fm.response_poles(q, sw, 30 * MHZ), key=lambda z: z.real)
    checks.append(("pole-oracle",
                   all(abs(p - e) <= 1e-10 * abs(e) for p, e in zip(poles, eigs))))

    failed = [name for name, ok in checks if not ok]
    report(8, not failed,
           "oracle suites " + ", ".join(name for name, _ in checks)
           + (f"; FAILED: {failed}" if failed else " all green"))


def test_criterion_09_shaped_pair_end_to_end(fig4_parts):
    qubit_a, qubit_b, squid_a, film = fig4_parts
    mode = fm.make_pssw_mode(film, 1, fm.field_unit_convert(10, "gauss", "A/m"),
                             frequency_override=4.57e9, decay=20 * MHZ)
    settings = fm.QuadratureSettings(base_counts=(48, 48, 8), tolerance=5e-3, max_levels=3)
    res = fm.coupling_vs_distance(qubit_a, film, mode, [0.5e-6], settings,
                                  magnetization_axis=(1, 0, 0))[0][1]
    g = abs(res.g_eff)
    l_pair = fm.mutual_inductance(qubit_a, qubit_b)
    g_ind = abs(fm.inductive_coupling_frequency(l_pair, 500e-9, 500e-9))
    l_near = fm.mutual_inductance(qubit_a, squid_a)
    l_far = fm.mutual_inductance(squid_a, qubit_b)
    ratio = abs(l_near / l_far)
    delta_off = fm.off_detuning(g, g, g_ind)
    ok = (
        25 * MHZ <= g <= 100 * MHZ
        and g_ind < 10 * MHZ
        and ratio >= 100
        and 3.8e-12 <= abs(l_near) <= 3.8e-10
        and 5.6e-15 <= abs(l_far) <= 5.6e-13
        and -1200 * MHZ <= delta_off <= -300 * MHZ
    )
    report(9, ok,
           f"|g|(0.5 um)={g / MHZ:.1f} MHz in [25, 100]; pair coupling "
           f"{g_ind / MHZ:.2f} MHz < 10 MHz; readout near/far {l_near:.2e}/{l_far:.2e} H "
           f"(ratio {ratio:.0f} >= 100, order-of-magnitude anchors); "
           f"OFF detuning {delta_off / MHZ:.0f} MHz in [-1200, -300] MHz")


def test_criterion_10_reproduce_determinism(tmp_path):
    pairs = []
    for target in ("fig3", "fig2"):
        outs = []
        for run in (1, 2):
            out = tmp_path / f"{target}_{run}"
            assert cli.main(["reproduce", target, "--out", str(out)]) == 0
            outs.append(out)
        for f in sorted(outs[0].iterdir()):
            if f.suffix in (".csv",) or (f.suffix == ".json" and "manifest" not in f.name):
                other = outs[1] / f.name
                pairs.append((f.name, f.read_bytes() == other.read_bytes()))
    bad = [name for name, same in pairs if not same]
    report(10, not bad,
           f"{len(pairs)} data files byte-identical across repeated runs"
           + (f"; differing: {bad}" if bad else ""))
