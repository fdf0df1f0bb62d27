"""Uniform grids, sampled complex signals, and quadrature inner products.

Signals live on the closed symmetric interval [-L, L] sampled at N uniform
points. The grid carries trapezoid quadrature weights, so inner products and
norms approximate their continuum counterparts, and kernel matrices built
downstream fuse the same weights into their columns.
"""

from __future__ import annotations

import csv
import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DilationLimitError, GridMismatchError, SignalFormatError

# Parameters whose |sin alpha|, |sinh alpha| or |cos theta| fall below this
# are treated as exactly singular: the kernel oscillation there is
# unresolvable on any desk-scale grid.
SINGULARITY_TOL = 1e-9

MIN_POINTS = 8


class Family(enum.Enum):
    """The two implemented transform families."""

    FRFT = "frft"
    GFRT = "gfrt"


@dataclass(frozen=True, eq=False)
class Grid:
    """Uniform closed grid on [-half_width, half_width] with trapezoid weights."""

    half_width: float
    n_points: int
    points: np.ndarray
    weights: np.ndarray

    @property
    def spacing(self) -> float:
        return 2.0 * self.half_width / (self.n_points - 1)

    def __eq__(self, other):
        if not isinstance(other, Grid):
            return NotImplemented
        return (self.half_width == other.half_width
                and self.n_points == other.n_points)

    def __hash__(self):
        return hash((self.half_width, self.n_points))


def make_grid(half_width: float, n_points: int) -> Grid:
    """Build a uniform closed grid with trapezoid quadrature weights.

    Parameters
    ----------
    half_width : float
        Positive half-length L; the grid spans [-L, L] inclusive.
    n_points : int
        Number of samples, at least 8.

    Returns
    -------
    Grid
        Points include both endpoints; the endpoint weights are half the
        interior weight and the weights sum to 2 L.
    """
    if not half_width > 0:
        raise ValueError(f"half_width must be positive, got {half_width}")
    n_points = int(n_points)
    if n_points < MIN_POINTS:
        raise ValueError(f"n_points must be at least {MIN_POINTS}, got {n_points}")
    pts = np.linspace(-half_width, half_width, n_points)
    # antisymmetrize so points[k] == -points[n-1-k] holds bitwise; parity
    # identities downstream rely on exact mirror symmetry
    pts = (pts - pts[::-1]) / 2.0
    dx = 2.0 * half_width / (n_points - 1)
    weights = np.full(n_points, dx)
    weights[0] = weights[-1] = dx / 2.0
    pts.flags.writeable = False
    weights.flags.writeable = False
    return Grid(float(half_width), n_points, pts, weights)


@dataclass(frozen=True, eq=False)
class SampledSignal:
    """Complex samples of a function on a Grid.

    Values are copied on construction and frozen; operations on signals
    always return fresh instances.
    """

    grid: Grid
    values: np.ndarray

    def __post_init__(self):
        vals = np.array(self.values, dtype=np.complex128)
        if vals.shape != (self.grid.n_points,):
            raise ValueError(
                f"expected {self.grid.n_points} values, got shape {vals.shape}")
        if not np.all(np.isfinite(vals.real)) or not np.all(np.isfinite(vals.imag)):
            raise ValueError("signal values must be finite")
        vals.flags.writeable = False
        object.__setattr__(self, "values", vals)


def gaussian_signal(grid: Grid, center: float = 0.0) -> SampledSignal:
    """Unit-normalized Gaussian exp(-(x - center)^2 / 2) / pi^(1/4)."""
    x = grid.points
    return SampledSignal(grid, np.pi ** -0.25 * np.exp(-0.5 * (x - center) ** 2))


def inner_product(f: SampledSignal, g: SampledSignal) -> complex:
    """Quadrature inner product, conjugate-linear in the first argument."""
    if f.grid != g.grid:
        raise GridMismatchError("signals live on different grids")
    return complex(np.sum(f.grid.weights * np.conj(f.values) * g.values))


def l2_norm(f: SampledSignal) -> float:
    """Quadrature L2 norm of a signal."""
    ip = inner_product(f, f)
    if abs(ip.imag) > 1e-12:
        raise ValueError(
            f"inner product of a signal with itself must be real, imag={ip.imag}")
    return math.sqrt(max(ip.real, 0.0))


@dataclass(frozen=True)
class TransformSpec:
    """Identifies one member of a transform family.

    alpha is the rotation angle in radians for the trigonometric family
    (FRFT) and the hyperbolic rapidity for the hyperbolic family (GFRT).
    theta applies to the hyperbolic family only and must stay strictly
    inside (-pi/2, pi/2) with cos(theta) above the singularity tolerance.
    """

    family: Family
    alpha: float
    theta: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "alpha", float(self.alpha))
        if self.family is Family.FRFT:
            if self.theta is not None:
                raise ValueError("theta applies to the hyperbolic family only")
        else:
            if self.theta is None:
                raise ValueError("the hyperbolic family requires theta")
            theta = float(self.theta)
            object.__setattr__(self, "theta", theta)
            if abs(theta) >= math.pi / 2 or math.cos(theta) <= SINGULARITY_TOL:
                raise DilationLimitError(
                    f"theta={theta} is at or beyond the dilation limit pi/2")

    @property
    def reduced_alpha(self) -> float:
        """alpha folded into [0, 2 pi) for the periodic family, else unchanged."""
        if self.family is Family.FRFT:
            return self.alpha % (2.0 * math.pi)
        return self.alpha

    @property
    def is_singular(self) -> bool:
        """True when the kernel degenerates to a delta at these parameters."""
        if self.family is Family.FRFT:
            return abs(math.sin(self.alpha)) < SINGULARITY_TOL
        return abs(math.sinh(self.alpha)) < SINGULARITY_TOL


def write_signal(f: SampledSignal, path) -> None:
    """Write a signal as `x,re,im` CSV with 17 significant digits.

    The serialization round-trips doubles exactly, so read_signal(path)
    reproduces the values bit for bit.
    """
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["x", "re", "im"])
        for x, v in zip(f.grid.points, f.values):
            writer.writerow([f"{x:.17g}", f"{v.real:.17g}", f"{v.imag:.17g}"])


def read_signal(path) -> SampledSignal:
    """Read a signal from `x,re,im` CSV.

    The x column must be strictly increasing, uniformly spaced to 1e-9
    relative tolerance, and symmetric about zero, so that a valid Grid can
    be reconstructed from the endpoints alone.
    """
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise SignalFormatError(f"{path}: empty file") from None
        if [col.strip().lower() for col in header] != ["x", "re", "im"]:
            raise SignalFormatError(
                f"{path}: expected header x,re,im, got {','.join(header)!r}")
        xs: list[float] = []
        vals: list[complex] = []
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != 3:
                raise SignalFormatError(
                    f"{path}:{lineno}: expected 3 columns, got {len(row)}")
            try:
                x, re, im = (float(col) for col in row)
            except ValueError:
                raise SignalFormatError(
                    f"{path}:{lineno}: non-numeric row {row!r}") from None
            xs.append(x)
            vals.append(complex(re, im))

    if len(xs) < MIN_POINTS:
        raise SignalFormatError(
            f"{path}: need at least {MIN_POINTS} rows, got {len(xs)}")
    x = np.array(xs)
    values = np.array(vals, dtype=np.complex128)
    if not np.all(np.isfinite(x)):
        raise SignalFormatError(f"{path}: non-finite x values")
    if not np.all(np.isfinite(values.real)) or not np.all(np.isfinite(values.imag)):
        raise SignalFormatError(f"{path}: non-finite signal values")
    steps = np.diff(x)
    if np.any(steps <= 0):
        raise SignalFormatError(f"{path}: x column must be strictly increasing")
    spacing = (x[-1] - x[0]) / (len(x) - 1)
    if np.max(np.abs(steps - spacing)) > 1e-9 * spacing:
        raise SignalFormatError(f"{path}: x column is not uniformly spaced")
    if abs(x[0] + x[-1]) > 1e-9 * x[-1]:
        raise SignalFormatError(
            f"{path}: x range [{x[0]}, {x[-1]}] is not symmetric about zero")
    grid = make_grid(float(x[-1]), len(x))
    if np.max(np.abs(x - grid.points)) > 1e-9 * spacing:
        raise SignalFormatError(f"{path}: x column does not match a uniform grid")
    return SampledSignal(grid, values)
