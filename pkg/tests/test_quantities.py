import math

import pytest
from hypothesis import given, strategies as st

import fluxmagnon as fm
from fluxmagnon.quantities import CONSTANTS, MU_B

UNITS = ("gauss", "tesla", "A/m")


def test_constants_pinned_values():
    assert CONSTANTS.mu0 == 1.256e-6
    assert CONSTANTS.gamma_over_2pi == 28.0e9
    assert CONSTANTS.hbar == pytest.approx(CONSTANTS.h / (2 * math.pi), rel=1e-15)


def test_gauss_to_tesla_definitional():
    assert fm.field_unit_convert(10.0, "gauss", "tesla") == pytest.approx(1.0e-3, rel=1e-15)


def test_tesla_to_A_per_m():
    assert fm.field_unit_convert(1.0e-3, "tesla", "A/m") == pytest.approx(795.8, rel=1e-3)


def test_zero_converts_to_zero():
    for a in UNITS:
        for b in UNITS:
            assert fm.field_unit_convert(0.0, a, b) == 0.0


def test_unknown_unit_rejected():
    with pytest.raises(fm.ConfigurationError):
        fm.field_unit_convert(1.0, "oersted", "tesla")
    with pytest.raises(fm.ConfigurationError):
        fm.field_unit_convert(1.0, "tesla", "weber")


def test_negative_or_nonfinite_rejected():
    with pytest.raises(ValueError):
        fm.field_unit_convert(-1.0, "gauss", "tesla")
    with pytest.raises(ValueError):
        fm.field_unit_convert(float("nan"), "gauss", "tesla")


@given(
    value=st.floats(min_value=1e-12, max_value=1e9),
    a=st.sampled_from(UNITS),
    b=st.sampled_from(UNITS),
)
def test_round_trip_identity(value, a, b):
    back = fm.field_unit_convert(fm.field_unit_convert(value, a, b), b, a)
    assert back == pytest.approx(value, rel=1e-12)


def test_moment_per_spin_yig():
    m = fm.moment_per_spin(fm.YIG)
    assert m == pytest.approx(8.97e-24, rel=1e-2)
    assert abs(m - MU_B) / MU_B < 0.05


def test_moment_per_spin_constructed_identity():
    mat = fm.MaterialParams("unit", Ms=MU_B * 1.0e28, Aex=1e-12, spin_density=1.0e28)
    assert fm.moment_per_spin(mat) == pytest.approx(MU_B, rel=1e-15)


def test_moment_per_spin_linear_in_Ms():
    base = fm.MaterialParams("a", Ms=1.0e5, Aex=1e-12, spin_density=2.0e28)
    double = fm.MaterialParams("b", Ms=2.0e5, Aex=1e-12, spin_density=2.0e28)
    assert fm.moment_per_spin(double) == pytest.approx(2 * fm.moment_per_spin(base), rel=1e-15)


def test_material_validation():
    with pytest.raises(fm.ConfigurationError):
        fm.MaterialParams("bad", Ms=-1.0, Aex=1e-12, spin_density=1e28)
    with pytest.raises(fm.ConfigurationError):
        fm.MaterialParams("bad", Ms=1e5, Aex=0.0, spin_density=1e28)
    with pytest.raises(fm.ConfigurationError):
        fm.MaterialParams("bad", Ms=1e5, Aex=1e-12, spin_density=1e28, damping_alpha=-0.1)


def test_bundled_records():
    assert fm.YIG.Ms == 1.92e5
    assert fm.YIG.Aex == 3.1e-12
    assert fm.YIG.spin_density == 2.14e28
    assert fm.COFEB.spin_density == 1.61e29
    assert set(fm.BUNDLED_MATERIALS) == {"YIG", "CoFeB"}
