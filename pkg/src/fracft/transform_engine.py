"""Kernel matrices, transform application, and composition.

A kernel matrix stores entries[j, k] = K(p_j, x_k) * w_k with the quadrature
weights fused into the columns. Applying a transform is then a plain
matrix-vector product, and composing two transforms is a plain matrix
product: the fused weight column of the inner matrix realizes the
intermediate integral, re-identifying the output axis of one transform with
the input axis of the next. The spectral path expands a signal in the
eigenbasis instead and exists for the trigonometric family only; the two
paths cross-validate each other.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import GridMismatchError, SingularKernelError
from .grid_signal import Family, Grid, SampledSignal, TransformSpec, l2_norm
from .hermite_basis import HermiteBasis, build_basis
from .kernels import SingularAction, frft_kernel, gfrt_kernel, singular_action

DEFAULT_SPECTRAL_ORDER = 40


@dataclass(frozen=True, eq=False)
class KernelMatrix:
    """Quadrature-fused kernel samples: entries[j, k] = K(p_j, x_k) * w_k."""

    spec: TransformSpec
    grid: Grid
    entries: np.ndarray


@dataclass(frozen=True, eq=False)
class SpectralCoefficients:
    """Eigenbasis coefficients c_m = <f_m, f> for m = 0 .. max_order."""

    max_order: int
    c: np.ndarray


def build_kernel_matrix(spec: TransformSpec, grid: Grid) -> KernelMatrix:
    """Sample the kernel of spec over grid x grid and fuse the weights.

    Raises
    ------
    SingularKernelError
        For singular specs; those transforms have an exact shortcut (see
        kernels.singular_action) and no finite kernel.
    """
    action = singular_action(spec)
    if action is not SingularAction.NOT_SINGULAR:
        raise SingularKernelError(
            f"spec is singular (exact action: {action.value}); "
            "apply the shortcut instead of building a kernel matrix")
    p = grid.points[:, None]
    x = grid.points[None, :]
    if spec.family is Family.FRFT:
        kernel = frft_kernel(spec.alpha, p, x)
    else:
        kernel = gfrt_kernel(spec.alpha, spec.theta, p, x)
    entries = kernel * grid.weights[None, :]
    entries.flags.writeable = False
    return KernelMatrix(spec, grid, entries)


def apply_quadrature(km: KernelMatrix, f: SampledSignal) -> SampledSignal:
    """Apply the transform as the matrix-vector product entries @ values."""
    if f.grid != km.grid:
        raise GridMismatchError("signal grid does not match the kernel matrix grid")
    return SampledSignal(km.grid, km.entries @ f.values)


def spectral_coefficients(basis: HermiteBasis, f: SampledSignal,
                          max_order: int = DEFAULT_SPECTRAL_ORDER) -> SpectralCoefficients:
    """Project f onto the eigenbasis rows f_0 .. f_max_order.

    The projection onto an orthonormal family obeys the Bessel bound
    sum |c_m|^2 <= ||f||^2; a violation beyond 1e-8 means the basis is not
    orthonormal on this grid and is reported as an error.
    """
    if not 0 <= max_order <= basis.max_order:
        raise ValueError(
            f"max_order must lie in [0, {basis.max_order}], got {max_order}")
    if f.grid != basis.grid:
        raise GridMismatchError("signal grid does not match the basis grid")
    c = np.conj(basis.f[:max_order + 1]) @ (basis.grid.weights * f.values)
    if float(np.sum(np.abs(c) ** 2)) > l2_norm(f) ** 2 + 1e-8:
        raise ValueError(
            "projection exceeds the Bessel bound; the basis is not "
            "orthonormal on this grid")
    c.flags.writeable = False
    return SpectralCoefficients(int(max_order), c)


def apply_spectral(alpha: float, basis: HermiteBasis, f: SampledSignal,
                   max_order: int = DEFAULT_SPECTRAL_ORDER) -> SampledSignal:
    """Apply the order-alpha trigonometric transform through its eigenbasis.

    Returns sum_m exp(-i m alpha) <f_m, f> f_m sampled on the grid. Only
    the trigonometric family has an eigenbasis, so alpha is an angle in
    radians here; there is no hyperbolic spectral path.
    """
    coeffs = spectral_coefficients(basis, f, max_order)
    phases = np.exp(-1j * float(alpha) * np.arange(max_order + 1))
    values = (phases * coeffs.c) @ basis.f[:max_order + 1]
    return SampledSignal(f.grid, values)


def compose(km1: KernelMatrix, km2: KernelMatrix) -> KernelMatrix:
    """Kernel matrix of the composite transform: km2 applied first, then km1.

    The product km1.entries @ km2.entries already contains the intermediate
    quadrature through km2's fused weight columns, so the result acts on
    signals exactly like the sequential application. Orders add within a
    family; hyperbolic kernels compose only at equal theta.
    """
    if km1.grid != km2.grid:
        raise GridMismatchError("kernel matrices live on different grids")
    if km1.spec.family is not km2.spec.family:
        raise ValueError("cannot compose kernels from different families")
    if km1.spec.family is Family.GFRT and km1.spec.theta != km2.spec.theta:
        raise ValueError("hyperbolic kernels compose only at equal theta")
    spec = TransformSpec(km1.spec.family, km1.spec.alpha + km2.spec.alpha,
                         km1.spec.theta)
    entries = km1.entries @ km2.entries
    entries.flags.writeable = False
    return KernelMatrix(spec, km1.grid, entries)


def transform_signal(spec: TransformSpec, f: SampledSignal, method: str = "quad",
                     basis: HermiteBasis | None = None,
                     max_order: int = DEFAULT_SPECTRAL_ORDER) -> SampledSignal:
    """Apply the transform described by spec, routing singular specs to
    their exact shortcut.

    method "quad" builds the dense kernel matrix and applies it; "spectral"
    expands in the eigenbasis (trigonometric family only, building a basis
    on demand when none is passed). Singular specs bypass both methods: the
    identity returns a copy of f and parity returns f with its values
    reversed, which samples f(-x) exactly on the symmetric grid.
    """
    action = singular_action(spec)
    if action is SingularAction.IDENTITY:
        return SampledSignal(f.grid, f.values)
    if action is SingularAction.PARITY:
        return SampledSignal(f.grid, f.values[::-1])
    if method == "quad":
        return apply_quadrature(build_kernel_matrix(spec, f.grid), f)
    if method == "spectral":
        if spec.family is not Family.FRFT:
            raise ValueError(
                "the hyperbolic family has no eigenbasis; "
                "the spectral method is unavailable")
        if basis is None:
            basis = build_basis(f.grid, max_order)
        return apply_spectral(spec.alpha, basis, f, max_order)
    raise ValueError(f"unknown method {method!r}; use 'quad' or 'spectral'")
