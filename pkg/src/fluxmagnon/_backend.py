"""Kernel backend selection.

The two hot kernels (Biot-Savart segment sums and Neumann segment-pair
quadrature) have a numba-compiled implementation and a pure-numpy one.
Selection order:

1. ``FLUXMAGNON_BACKEND=numpy`` forces the numpy path.
2. ``FLUXMAGNON_BACKEND=numba`` requires numba (error if missing).
3. Unset: numba when importable, numpy otherwise.
"""

from __future__ import annotations

import os

from .errors import ConfigurationError

ENV_VAR = "FLUXMAGNON_BACKEND"

try:
    import numba  # noqa: F401

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False


def _resolve() -> str:
    choice = os.environ.get(ENV_VAR, "").strip().lower()
    if choice not in ("", "numba", "numpy"):
        raise ConfigurationError(
            f"{ENV_VAR}={choice!r} is not valid; use 'numba' or 'numpy'"
        )
    if choice == "numpy":
        return "numpy"
    if choice == "numba" and not HAVE_NUMBA:
        raise ConfigurationError(f"{ENV_VAR}=numba requested but numba is not importable")
    return "numba" if HAVE_NUMBA else "numpy"


BACKEND = _resolve()
