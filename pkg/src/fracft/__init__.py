"""Fractional Fourier and hyperbolic fractional transforms on sampled signals.

The package realizes two one-parameter families of unitary integral
transforms as dense kernel operators on uniformly sampled signals: the
trigonometric (fractional Fourier) family, which interpolates between the
identity and the conventional Fourier transform, and a hyperbolic family
whose theta -> pi/2 limit degenerates into a pure dilation. Alongside the
operators it ships the Hermite-Gaussian eigenbasis of the trigonometric
family and a verification suite that measures the defining properties
(additivity, unitarity, eigen-relations, orthogonality, limit behavior)
with explicit residuals.
"""

from .errors import (BasisUnderflowError, DilationLimitError,
                     GridMismatchError, SignalFormatError, SingularKernelError)
from .grid_signal import (SINGULARITY_TOL, Family, Grid, SampledSignal,
                          TransformSpec, gaussian_signal, inner_product,
                          l2_norm, make_grid, read_signal, write_signal)
from .hermite_basis import (DEFAULT_MAX_ORDER, HermiteBasis, build_basis,
                            eigenvalue_phase)
from .kernels import (KernelValueRequest, SingularAction, frft_kernel,
                      gfrt_kernel, kernel_value, singular_action)
from .transform_engine import (DEFAULT_SPECTRAL_ORDER, KernelMatrix,
                               SpectralCoefficients, apply_quadrature,
                               apply_spectral, build_kernel_matrix, compose,
                               spectral_coefficients, transform_signal)
from .property_verify import (CheckReport, SuiteConfig, check_additivity,
                              check_completeness, check_dilation_limit,
                              check_eigen, check_fourier_reduction,
                              check_inversion, check_orthogonality,
                              check_parseval, check_spectral_agreement,
                              check_theta_zero_reduction, run_suite,
                              suite_passed)

__version__ = "0.1.0"

__all__ = [
    "BasisUnderflowError",
    "CheckReport",
    "DEFAULT_MAX_ORDER",
    "DEFAULT_SPECTRAL_ORDER",
    "DilationLimitError",
    "Family",
    "Grid",
    "GridMismatchError",
    "HermiteBasis",
    "KernelMatrix",
    "KernelValueRequest",
    "SINGULARITY_TOL",
    "SampledSignal",
    "SignalFormatError",
    "SingularAction",
    "SingularKernelError",
    "SpectralCoefficients",
    "SuiteConfig",
    "TransformSpec",
    "apply_quadrature",
    "apply_spectral",
    "build_basis",
    "build_kernel_matrix",
    "check_additivity",
    "check_completeness",
    "check_dilation_limit",
    "check_eigen",
    "check_fourier_reduction",
    "check_inversion",
    "check_orthogonality",
    "check_parseval",
    "check_spectral_agreement",
    "check_theta_zero_reduction",
    "compose",
    "eigenvalue_phase",
    "frft_kernel",
    "gaussian_signal",
    "gfrt_kernel",
    "inner_product",
    "kernel_value",
    "l2_norm",
    "make_grid",
    "read_signal",
    "run_suite",
    "singular_action",
    "spectral_coefficients",
    "suite_passed",
    "transform_signal",
    "write_signal",
]
