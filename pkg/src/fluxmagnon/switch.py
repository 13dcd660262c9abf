"""Magnon-mediated two-qubit coupling and the on/off switch algebra.

Two loops dispersively detuned from the same spin-wave mode acquire the
exchange coupling J = g1*g2*(1/d1 + 1/d2)/2 (signed by the detunings).
Adding the direct inductive coupling gives the total; the OFF operating
point is the symmetric detuning where the two cancel exactly.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .errors import DispersiveRegimeError, DispersiveRegimeWarning
from .magnonics import converted_decay


@dataclass(frozen=True)
class SwitchConfig:
    """Operating parameters of the two-qubit switch (all Hz, signed detunings).

    Detunings are qubit frequency minus magnon frequency, so "detuned
    below the mode" is negative.
    """

    g1: float
    g2: float
    delta1: float
    delta2: float
    g_ind: float
    gamma_sw: float = 0.0
    gamma_cap: float = 0.0
    cap_detuning: float = 0.0
    cap_coupling: float = 0.0

    def __post_init__(self):
        for name, g, d in (("1", self.g1, self.delta1), ("2", self.g2, self.delta2)):
            if g < 0.0:
                raise DispersiveRegimeError(f"g{name} must be >= 0")
            if g > 0.0 and abs(d) <= g:
                raise DispersiveRegimeError(
                    f"qubit {name}: |detuning| = {abs(d):.4g} Hz must exceed g = {g:.4g} Hz"
                )
        if self.gamma_sw < 0.0 or self.gamma_cap < 0.0:
            raise DispersiveRegimeError("decay rates must be >= 0")


def magnon_mediated_J(g1: float, g2: float, delta1: float, delta2: float) -> float:
    """Signed two-qubit coupling J = g1*g2*(1/delta1 + 1/delta2)/2 (Hz)."""
    if delta1 == 0.0 or delta2 == 0.0:
        raise DispersiveRegimeError(
            "zero qubit-magnon detuning: the dispersive coupling J = "
            "g1*g2*(1/delta1 + 1/delta2)/2 requires nonzero detunings"
        )
    if delta1 * delta2 < 0.0:
        warnings.warn(
            "qubits detuned to opposite sides of the magnon mode; the dispersive "
            "two-qubit coupling is not validated in this regime",
            DispersiveRegimeWarning,
            stacklevel=2,
        )
    return 0.5 * g1 * g2 * (1.0 / delta1 + 1.0 / delta2)


def total_coupling(cfg: SwitchConfig) -> float:
    """Magnon-mediated J plus the direct inductive coupling (Hz, signed)."""
    if cfg.g1 == 0.0 or cfg.g2 == 0.0:
        return cfg.g_ind
    return magnon_mediated_J(cfg.g1, cfg.g2, cfg.delta1, cfg.delta2) + cfg.g_ind


def off_detuning(g1: float, g2: float, g_ind: float) -> float:
    """Symmetric detuning where J cancels the inductive coupling (Hz).

    Solves J(delta) + g_ind = 0 for delta1 = delta2 = delta, giving
    delta = -g1*g2/g_ind; the root is verified by substitution.  With
    g_ind = 0 there is no finite OFF point (J only vanishes
    asymptotically); returns math.inf.
    """
    if not g1 * g2 > 0.0:
        raise DispersiveRegimeError("off_detuning requires g1*g2 > 0")
    if g_ind == 0.0:
        return math.inf
    delta = -g1 * g2 / g_ind
    residual = magnon_mediated_J(g1, g2, delta, delta) + g_ind
    if abs(residual) > 1.0e-9 * abs(g_ind):
        raise ArithmeticError(
            f"OFF-point verification failed: residual coupling {residual:.3e} Hz"
        )
    return delta


def broadening_budget(cfg: SwitchConfig) -> dict:
    """Per-channel decay leaked onto the qubits (Hz).

    Channels: the magnon mode seen by each qubit and the capping layer;
    plus their total.
    """
    budget = {
        "magnon_qubit1": converted_decay(cfg.g1, cfg.delta1, cfg.gamma_sw) if cfg.g1 else 0.0,
        "magnon_qubit2": converted_decay(cfg.g2, cfg.delta2, cfg.gamma_sw) if cfg.g2 else 0.0,
        "capping": converted_decay(cfg.cap_coupling, cfg.cap_detuning, cfg.gamma_cap)
        if cfg.cap_coupling
        else 0.0,
    }
    budget["total"] = sum(budget.values())
    return budget
