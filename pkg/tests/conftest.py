import numpy as np
import pytest

import fluxmagnon as fm


@pytest.fixture(scope="session")
def hext_10g():
    return fm.field_unit_convert(10.0, "gauss", "A/m")


@pytest.fixture(scope="session")
def fig1_film():
    """3x3 um, 80 nm film with a 10 nm capping layer on the pinned (far) face."""
    return fm.FilmSpec(
        material=fm.YIG,
        outline=fm.RectangleOutline(3.0e-6, 3.0e-6),
        thickness=80.0e-9,
        center=(0.0, 1.04e-6, 0.0),
        normal=(0.0, 1.0, 0.0),
        pinning="top_pinned",
        capping=fm.CappingLayer(fm.COFEB, 10.0e-9),
    )


@pytest.fixture(scope="session")
def fig1_loop():
    """5x5 um square loop in the y=0 plane carrying 500 nA."""
    return fm.make_square_loop(5.0e-6, (0.0, 0.0, 0.0), (0.0, 1.0, 0.0), 500.0e-9)


@pytest.fixture(scope="session")
def n1_mode(fig1_film, hext_10g):
    return fm.make_pssw_mode(
        fig1_film, 1, hext_10g, frequency_override=4.57e9, decay=20.0e6
    )


@pytest.fixture()
def rng():
    return np.random.default_rng(20260810)
