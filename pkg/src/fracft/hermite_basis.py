"""Orthonormal Hermite-Gaussian functions and the transform eigenbasis.

Rows h_m come from the normalized three-term recurrence, which keeps every
intermediate on the unit-norm scale; evaluating raw Hermite polynomials and
dividing by sqrt(2^m m!) overflows near m = 150, the recurrence does not.
The eigenfunction rows f_m carry the exact phase i^(-m) taken from the
four-cycle {1, -i, -1, i}, so no round-off accumulates in repeated powers.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .errors import BasisUnderflowError
from .grid_signal import Family, Grid, SampledSignal, TransformSpec

DEFAULT_MAX_ORDER = 64

# i^(-m) for m = 0, 1, 2, 3; higher orders repeat the cycle
_PHASE_CYCLE = np.array([1.0 + 0.0j, -1.0j, -1.0 + 0.0j, 1.0j])


@dataclass(frozen=True, eq=False)
class HermiteBasis:
    """Stacked samples of h_m (real) and f_m = i^(-m) h_m (complex).

    Row m of `h` holds the orthonormal Hermite-Gaussian of order m on the
    grid; row m of `f` is the same row times the exact i^(-m) phase.
    """

    grid: Grid
    max_order: int
    h: np.ndarray
    f: np.ndarray

    def h_signal(self, m: int) -> SampledSignal:
        return SampledSignal(self.grid, self.h[m])

    def f_signal(self, m: int) -> SampledSignal:
        return SampledSignal(self.grid, self.f[m])


def build_basis(grid: Grid, max_order: int = DEFAULT_MAX_ORDER) -> HermiteBasis:
    """Generate h_0 .. h_max_order on the grid via the normalized recurrence.

    h_0 = pi^(-1/4) exp(-x^2/2), h_1 = sqrt(2) x h_0, and for m >= 2

        h_m = x sqrt(2/m) h_{m-1} - sqrt((m-1)/m) h_{m-2}.

    Raises
    ------
    BasisUnderflowError
        If a row underflows to identical zeros, which happens when the grid
        keeps every point so far out that exp(-x^2/2) is subnormal.
    """
    if max_order < 0:
        raise ValueError(f"max_order must be nonnegative, got {max_order}")
    x = grid.points
    h = np.zeros((max_order + 1, grid.n_points))
    h[0] = np.pi ** -0.25 * np.exp(-0.5 * x * x)
    if max_order >= 1:
        h[1] = np.sqrt(2.0) * x * h[0]
    for m in range(2, max_order + 1):
        h[m] = np.sqrt(2.0 / m) * x * h[m - 1] - np.sqrt((m - 1.0) / m) * h[m - 2]
    for m in range(max_order + 1):
        if not h[m].any():
            raise BasisUnderflowError(
                f"h_{m} underflowed to zero at every grid point; "
                "the grid does not resolve the basis")
    f = _PHASE_CYCLE[np.arange(max_order + 1) % 4][:, None] * h
    h.flags.writeable = False
    f.flags.writeable = False
    return HermiteBasis(grid, int(max_order), h, f)


def eigenvalue_phase(spec: TransformSpec, m: int) -> complex:
    """Eigenvalue exp(-i m alpha) of the order-alpha transform on f_m.

    Only the trigonometric family has an eigenbasis; the hyperbolic family
    is rejected.
    """
    if spec.family is not Family.FRFT:
        raise ValueError(
            "the hyperbolic family has no eigenfunctions; eigenvalue phases "
            "exist for the trigonometric family only")
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    return cmath.exp(-1j * m * spec.alpha)
