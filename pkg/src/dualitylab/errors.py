"""Exception types shared across the lab."""


class DualityLabError(Exception):
    """Base class for all errors raised by this package."""


class PoleError(DualityLabError):
    """Spectral argument hit (or came too close to) a pole of the R-matrix."""


class RankError(DualityLabError):
    """Requested rank is not supported by the family."""


class ParamError(DualityLabError):
    """Family parameters violate the family's defining constraints."""


class UnsupportedFamilyError(DualityLabError):
    """Operation has no defined meaning for this family."""


class SpecError(DualityLabError):
    """Chain specification violates an operation's preconditions."""


class SizeError(DualityLabError):
    """Problem size exceeds the desk-scale cap."""


class DegeneracyError(DualityLabError):
    """Generic combination produced clustered eigenvalues after all retries."""


class SingularityError(DualityLabError):
    """Bethe configuration too close to a singular point (coinciding roots etc.)."""


class ConvergenceError(DualityLabError):
    """Root search failed to converge; carries per-path diagnostics."""

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or []


class CoincidenceError(DualityLabError):
    """Coinciding coordinates where distinctness is required."""


class CollisionError(DualityLabError):
    """Trajectory ran into a near-collision of particles."""


class StepFailure(DualityLabError):
    """ODE integrator failed to reach the requested time."""


class ToleranceFailure(DualityLabError):
    """A verification check exceeded its tolerance; carries worst offenders."""

    def __init__(self, message, offenders=None):
        super().__init__(message)
        self.offenders = offenders or []


class WeightDegeneracyError(DualityLabError):
    """Coinciding weights make the module representation degenerate."""


class SingularTransferError(DualityLabError):
    """Transfer matrix not invertible at the normalization point."""


class StochasticityFailure(DualityLabError):
    """Markov matrix failed the stochasticity validation."""


class ConventionFailure(DualityLabError):
    """No convention in the search set satisfied the defining relations."""
