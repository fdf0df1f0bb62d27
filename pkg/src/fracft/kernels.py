"""Closed-form transform kernels with an explicit branch and singularity policy.

Both kernels involve a complex square root. The principal branch (argument
in (-pi/2, pi/2]) is used throughout; it reproduces the conventional Fourier
kernel at alpha = pi/2 and makes the group law F_alpha F_beta = F_{alpha+beta}
hold numerically, which pins the convention by its observable consequences.

Parameters where a kernel collapses to a delta are refused here. Those
transforms still have an exact action (identity or sign flip of the
argument); singular_action names it so callers can apply the shortcut.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DilationLimitError, SingularKernelError
from .grid_signal import SINGULARITY_TOL, Family, TransformSpec

_TWO_PI = 2.0 * math.pi


class SingularAction(Enum):
    """Exact action of a transform whose kernel degenerates to a delta."""

    IDENTITY = "identity"
    PARITY = "parity"
    NOT_SINGULAR = "not_singular"


def frft_kernel(alpha: float, p, x):
    """Trigonometric-family kernel K_alpha(p, x).

    Parameters
    ----------
    alpha : float
        Transform order in radians, reduced modulo 2 pi internally; must
        stay at least SINGULARITY_TOL away from multiples of pi as measured
        by |sin alpha|.
    p, x : float or array_like
        Output and input coordinates, broadcast together.

    Returns
    -------
    complex or ndarray
        sqrt((1 - i cot alpha) / (2 pi)) *
        exp[(i/2) ((p^2 + x^2) cot alpha - 2 p x / sin alpha)]
        under the principal square root. The modulus is the constant
        1 / sqrt(2 pi |sin alpha|) regardless of p and x.
    """
    alpha = float(alpha) % _TWO_PI
    sin_a = np.sin(alpha)
    if abs(sin_a) < SINGULARITY_TOL:
        raise SingularKernelError(
            f"alpha={alpha} is within {SINGULARITY_TOL} of a multiple of pi; "
            "the kernel is a delta there, use the singular_action shortcut")
    cot_a = np.cos(alpha) / sin_a
    p = np.asarray(p, dtype=float)
    x = np.asarray(x, dtype=float)
    amplitude = np.sqrt((1.0 - 1j * cot_a) / _TWO_PI)
    phase = 0.5 * ((p * p + x * x) * cot_a - 2.0 * p * x / sin_a)
    out = amplitude * np.exp(1j * phase)
    return complex(out) if out.ndim == 0 else out


def gfrt_kernel(alpha: float, theta: float, p, x):
    """Hyperbolic-family kernel K_{alpha,theta}(p, x).

    Parameters
    ----------
    alpha : float
        Hyperbolic rapidity with |sinh alpha| >= SINGULARITY_TOL.
    theta : float
        Generator tilt, |theta| < pi/2 with cos theta above the tolerance;
        theta -> +-pi/2 is the pure dilation limit and is rejected.
    p, x : float or array_like
        Output and input coordinates, broadcast together.

    Returns
    -------
    complex or ndarray
        exp[(i/2) ((x^2 + p^2)/(tanh alpha cos theta)
                   + (x^2 - p^2) tan theta
                   - 2 x p / (sinh alpha cos theta))]
        / sqrt(2 pi i cos theta sinh alpha)
        under the principal square root.
    """
    alpha = float(alpha)
    theta = float(theta)
    sinh_a = np.sinh(alpha)
    if abs(sinh_a) < SINGULARITY_TOL:
        raise SingularKernelError(
            "alpha=0 collapses the hyperbolic kernel to a delta; "
            "use the singular_action shortcut")
    cos_t = np.cos(theta)
    if abs(theta) >= math.pi / 2 or cos_t <= SINGULARITY_TOL:
        raise DilationLimitError(
            f"theta={theta} is at or beyond pi/2, where the kernel becomes a "
            "pure dilation; see check_dilation_limit for the limit behavior")
    p = np.asarray(p, dtype=float)
    x = np.asarray(x, dtype=float)
    amplitude = 1.0 / np.sqrt(2j * math.pi * cos_t * sinh_a)
    phase = 0.5 * ((x * x + p * p) / (np.tanh(alpha) * cos_t)
                   + (x * x - p * p) * np.tan(theta)
                   - 2.0 * x * p / (sinh_a * cos_t))
    out = amplitude * np.exp(1j * phase)
    return complex(out) if out.ndim == 0 else out


def singular_action(spec: TransformSpec) -> SingularAction:
    """Classify the exact shortcut for delta-degenerate parameters.

    Trigonometric family: alpha at an even multiple of pi acts as the
    identity, at an odd multiple as the parity flip f(x) -> f(-x).
    Hyperbolic family: alpha = 0 is the identity. Everything else is
    NOT_SINGULAR and goes through the kernel.
    """
    if not spec.is_singular:
        return SingularAction.NOT_SINGULAR
    if spec.family is Family.GFRT:
        return SingularAction.IDENTITY
    if math.cos(spec.reduced_alpha) > 0:
        return SingularAction.IDENTITY
    return SingularAction.PARITY


@dataclass(frozen=True)
class KernelValueRequest:
    """A single kernel evaluation K(p, x); the spec must not be singular."""

    spec: TransformSpec
    p: float
    x: float

    def __post_init__(self):
        if self.spec.is_singular:
            raise SingularKernelError(
                "kernel values are undefined at singular parameters; the "
                f"exact action is {singular_action(self.spec).value}")


def kernel_value(request: KernelValueRequest) -> complex:
    """Evaluate the kernel selected by request.spec at (request.p, request.x)."""
    spec = request.spec
    if spec.family is Family.FRFT:
        return frft_kernel(spec.alpha, request.p, request.x)
    return gfrt_kernel(spec.alpha, spec.theta, request.p, request.x)
