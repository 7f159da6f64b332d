"""Exception types shared across the package."""


class EngineError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(EngineError, ValueError):
    """Invalid engine, bath, or sweep parameters."""


class DegenerateSpectrum(EngineError):
    """The Hamiltonian is fully degenerate and has no preferred eigenbasis."""


class NonpositiveTemperature(ParameterError):
    """Inverse temperature must be positive and finite."""


class OutOfRange(EngineError, ValueError):
    """A time argument fell outside the ramp interval."""


class NotConverged(EngineError):
    """Step doubling hit its cap before the propagator stabilized."""


class InvalidState(EngineError, ValueError):
    """Input matrix is not an admissible density operator."""


class ZeroHeat(EngineError):
    """Measurement heat is zero, so the cycle efficiency is undefined."""


class InvalidFrequency(EngineError, ValueError):
    """Bose occupation requires a positive transition frequency."""


class StepUnderflow(EngineError):
    """The adaptive step controller demanded a step below the minimum."""


class NotReached(EngineError):
    """Trace distance stayed above threshold for the whole horizon."""


class NonpositiveFrequencyWarning(UserWarning):
    """A Bohr frequency of a dissipation channel is zero or negative."""


class CutoffRegimeWarning(UserWarning):
    """Bath cutoff is not well above the largest transition frequency."""
