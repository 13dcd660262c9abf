"""Mutual inductance of filamentary loops via the double contour integral.

    L = mu0/4pi * Integral_a Integral_b (dX_a . dX_b) / |X_a - X_b|

evaluated per chord pair with Gauss-Legendre quadrature after arcs are
chorded.  The Gauss order per pair escalates with proximity (nearly
touching pairs get up to 64 points per axis) and the whole evaluation
is repeated at higher base order until two successive estimates agree.
Self-inductance is out of scope (divergent for zero-thickness wire).
"""

from __future__ import annotations

import math
import warnings

import numpy as np

from . import _kernels
from .errors import ConvergenceWarning, GeometryError
from .geometry import DEFAULT_SAGITTA_TOL, _seg_seg_distance, as_polyline
from .quantities import MU0, PLANCK

#: loops approaching closer than this are treated as touching (m)
MIN_LOOP_CLEARANCE = 1.0e-8

_N_LEVELS = len(_kernels.GAUSS_ORDERS)


def _proximity_bump(a0, a1, b0, b1):
    """Per-pair ladder bump: nearly touching chords need higher order."""
    mid_a = 0.5 * (a0 + a1)
    mid_b = 0.5 * (b0 + b1)
    la = np.linalg.norm(a1 - a0, axis=1)
    lb = np.linalg.norm(b1 - b0, axis=1)
    scale = np.maximum(la[:, None], lb[None, :])
    d = np.linalg.norm(mid_a[:, None, :] - mid_b[None, :, :], axis=2)
    ratio = d / scale
    bump = np.zeros(ratio.shape, dtype=np.int64)
    bump[ratio < 10.0] = 1
    bump[ratio < 3.0] = 2
    bump[ratio < 1.0] = 3
    return bump


def mutual_inductance(
    a,
    b,
    tol: float = 1.0e-6,
    *,
    discretization_tol: float = DEFAULT_SAGITTA_TOL,
    max_rounds: int = 4,
) -> float:
    """Signed mutual inductance (H) between two disjoint closed loops.

    ``tol`` is the relative agreement required between successive
    quadrature refinements; failure to reach it within ``max_rounds``
    emits :class:`ConvergenceWarning` and returns the last estimate.

    Raises GeometryError for identical loops (self-inductance) or loops
    closer than :data:`MIN_LOOP_CLEARANCE` anywhere.
    """
    if a is b:
        raise GeometryError("self-inductance of a filamentary loop is not defined here")
    pa = as_polyline(a, discretization_tol)
    pb = as_polyline(b, discretization_tol)
    a0, a1 = pa.chord_starts, pa.chord_ends
    b0, b1 = pb.chord_starts, pb.chord_ends
    if a0.shape == b0.shape and np.array_equal(a0, b0):
        raise GeometryError("the two loops are identical; self-inductance is out of scope")
    clearance = float(_seg_seg_distance(a0, a1, b0, b1).min())
    if clearance < MIN_LOOP_CLEARANCE:
        raise GeometryError(
            f"loops approach within {clearance:.3e} m (< {MIN_LOOP_CLEARANCE:.1e} m); "
            "touching or intersecting loops have no filamentary mutual inductance"
        )
    bump = _proximity_bump(a0, a1, b0, b1)
    prefactor = MU0 / (4.0 * math.pi)
    previous = None
    estimate = 0.0
    for base in range(max_rounds):
        order_idx = np.minimum(base + bump, _N_LEVELS - 1)
        estimate = prefactor * _kernels.neumann_pair_sum(a0, a1, b0, b1, order_idx)
        if previous is not None:
            scale = max(abs(estimate), abs(previous))
            if scale == 0.0 or abs(estimate - previous) <= tol * scale:
                return estimate
        previous = estimate
    warnings.warn(
        f"mutual inductance did not reach relative tolerance {tol:g} "
        f"within {max_rounds} refinement rounds",
        ConvergenceWarning,
        stacklevel=2,
    )
    return estimate


def inductive_coupling_frequency(L: float, I1: float, I2: float) -> float:
    """Inductive coupling energy L*I1*I2 expressed as frequency (Hz)."""
    for name, val in (("L", L), ("I1", I1), ("I2", I2)):
        if not math.isfinite(val):
            raise ValueError(f"{name} must be finite")
    return L * I1 * I2 / PLANCK
