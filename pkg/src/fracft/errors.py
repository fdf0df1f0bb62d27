"""Exception types shared across the package.

Everything derives from ValueError so callers who do not care about the
distinction can catch one base class.
"""


class GridMismatchError(ValueError):
    """Signals or operators from different grids were combined."""


class SignalFormatError(ValueError):
    """A signal file violates the CSV contract (header, spacing, finiteness)."""


class SingularKernelError(ValueError):
    """Kernel requested at a parameter where it degenerates to a delta."""


class DilationLimitError(ValueError):
    """theta is at or beyond +-pi/2, where the kernel becomes a pure dilation."""


class BasisUnderflowError(ValueError):
    """A Hermite row underflowed to all zeros on the given grid."""
