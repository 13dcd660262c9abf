import math

import numpy as np
import pytest
from scipy.special import ellipe, ellipk

import fluxmagnon as fm
from fluxmagnon.quantities import MU0, PLANCK


def circle(radius, z=0.0, current=1.0):
    return fm.CurrentLoop((fm.Arc((0, 0, z), radius, (0, 0, 1), 0.0, 2 * math.pi),), current)


def maxwell_coaxial(r1, r2, d):
    """Classical elliptic-integral mutual inductance of coaxial circles."""
    k2 = 4 * r1 * r2 / ((r1 + r2) ** 2 + d**2)
    k = math.sqrt(k2)
    return MU0 * math.sqrt(r1 * r2) * ((2 / k - k) * ellipk(k2) - (2 / k) * ellipe(k2))


@pytest.mark.parametrize("sep_um", [1.0, 3.0, 10.0, 30.0, 100.0])
def test_coaxial_circles_match_maxwell(sep_um):
    R = 10e-6
    d = sep_um * 1e-6
    L = fm.mutual_inductance(circle(R), circle(R, z=d))
    assert L == pytest.approx(maxwell_coaxial(R, R, d), rel=1e-3)


def test_unequal_radii_coaxial():
    L = fm.mutual_inductance(circle(10e-6), circle(6e-6, z=4e-6))
    assert L == pytest.approx(maxwell_coaxial(10e-6, 6e-6, 4e-6), rel=1e-3)


def test_symmetry_in_arguments():
    a = fm.make_square_loop(5e-6, (0, 0, 0), (0, 0, 1), 1e-6)
    b = fm.make_arc_loop(4e-6, 5e-6, (9e-6, 2e-6, 1e-6), 1e-6)
    assert fm.mutual_inductance(a, b) == pytest.approx(fm.mutual_inductance(b, a), rel=1e-6)


def test_orientation_flip_negates():
    a = fm.make_square_loop(5e-6, (0, 0, 0), (0, 0, 1), 1e-6)
    b = fm.make_square_loop(5e-6, (12e-6, 0, 0), (0, 0, 1), 1e-6)
    assert fm.mutual_inductance(a, b.reversed()) == pytest.approx(
        -fm.mutual_inductance(a, b), rel=1e-9
    )


def test_scale_law():
    def pair(scale):
        a = fm.make_square_loop(5e-6 * scale, (0, 0, 0), (0, 0, 1), 1e-6)
        b = fm.make_square_loop(5e-6 * scale, (12e-6 * scale, 0, 0), (0, 0, 1), 1e-6)
        return fm.mutual_inductance(a, b)

    s = 3.7
    assert pair(s) == pytest.approx(s * pair(1.0), rel=1e-9)


def test_far_field_dipole_slope():
    a = fm.make_square_loop(5e-6, (0, 0, 0), (0, 0, 1), 1e-6)
    ds = np.geomspace(100e-6, 400e-6, 5)
    Ls = [abs(fm.mutual_inductance(a, fm.make_square_loop(5e-6, (d, 0, 0), (0, 0, 1), 1e-6)))
          for d in ds]
    slope = np.polyfit(np.log(ds), np.log(Ls), 1)[0]
    assert slope == pytest.approx(-3.0, abs=0.05)


def test_touching_loops_rejected():
    a = fm.make_square_loop(5e-6, (0, 0, 0), (0, 0, 1), 1e-6)
    b = fm.make_square_loop(5e-6, (5e-6 + 5e-9, 0, 0), (0, 0, 1), 1e-6)
    with pytest.raises(fm.GeometryError, match="touching|intersect"):
        fm.mutual_inductance(a, b)


def test_self_inductance_rejected():
    a = fm.make_square_loop(5e-6, (0, 0, 0), (0, 0, 1), 1e-6)
    with pytest.raises(fm.GeometryError):
        fm.mutual_inductance(a, a)
    copy = fm.make_square_loop(5e-6, (0, 0, 0), (0, 0, 1), 1e-6)
    with pytest.raises(fm.GeometryError):
        fm.mutual_inductance(a, copy)


def test_nonconvergence_warns():
    a = fm.make_square_loop(5e-6, (0, 0, 0), (0, 0, 1), 1e-6)
    b = fm.make_square_loop(5e-6, (12e-6, 0, 0), (0, 0, 1), 1e-6)
    with pytest.warns(fm.ConvergenceWarning):
        fm.mutual_inductance(a, b, tol=1e-16, max_rounds=2)


def test_inductive_coupling_frequency_anchor():
    f = fm.inductive_coupling_frequency(1.053e-14, 500e-9, 500e-9)
    assert f == pytest.approx(3.97e6, rel=1e-3)
    assert f == pytest.approx(1.053e-14 * (500e-9) ** 2 / PLANCK, rel=1e-15)


def test_inductive_coupling_bilinear():
    assert fm.inductive_coupling_frequency(1e-13, 0.0, 1e-6) == 0.0
    base = fm.inductive_coupling_frequency(1e-13, 5e-7, 5e-7)
    assert fm.inductive_coupling_frequency(1e-13, 1e-6, 1e-6) == pytest.approx(4 * base, rel=1e-15)
    with pytest.raises(ValueError):
        fm.inductive_coupling_frequency(float("nan"), 1e-6, 1e-6)
