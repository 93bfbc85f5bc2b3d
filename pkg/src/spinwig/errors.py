"""Exception hierarchy shared by every spinwig module."""


class SpinwigError(Exception):
    """Base class for all spinwig errors."""


class InvalidSpinError(SpinwigError, ValueError):
    """A spin or magnetic quantum number is malformed (negative, wrong parity, ...)."""


class DimensionMismatchError(SpinwigError, ValueError):
    """Two objects were combined whose Hilbert-space dimensions disagree."""


class InvalidStateError(SpinwigError, ValueError):
    """A matrix or vector is not a valid density matrix / spectrum."""


class OutOfRangeError(SpinwigError, ValueError):
    """A parameter (w_min, s, ...) lies outside its admissible interval."""


class DegenerateKernelError(SpinwigError, ArithmeticError):
    """Kernel eigenvalues coincide, so the polytope hyperplanes collapse."""


class ConvergenceError(SpinwigError, RuntimeError):
    """An iterative numerical routine failed to converge."""


class ConfigError(SpinwigError, ValueError):
    """The configuration file or an override contains an unknown or invalid entry."""


class NonFiniteOutputError(SpinwigError, ArithmeticError):
    """A NaN or infinity was about to be written to the output stream."""
