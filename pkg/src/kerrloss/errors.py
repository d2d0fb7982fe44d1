"""Exception types shared across the package."""


class KerrLossError(Exception):
    """Base class for all package-specific errors."""


class TruncationError(KerrLossError):
    """Fock-space cutoff too small for the requested coherent amplitude."""


class DimensionMismatch(KerrLossError):
    """Operands built for different cutoffs."""


class UncorrelatedOnlyError(KerrLossError):
    """Closed-form solver called with nonzero cross rates."""


class RateDecompositionError(KerrLossError):
    """Jump-operator decomposition produced a negative rate."""


class ZeroCoupling(KerrLossError):
    """Collective mode undefined for g1 = g2 = 0."""


class StepSizeUnderflow(KerrLossError):
    """Adaptive integrator step fell below the hard floor."""


class DephasingUnsupported(KerrLossError):
    """Operation defined only for vanishing dephasing rates."""


class NotFullyCorrelated(KerrLossError):
    """Asymptotic cat formula requires gamma1*gamma2 == gamma12**2."""


class SubspaceViolation(KerrLossError):
    """State has support outside the zero/one-photon subspace."""


class GridCoverageError(KerrLossError):
    """Phase-space grid does not cover the state (Wigner mass missing)."""


class DegenerateDetuning(KerrLossError):
    """Lambda-system rates diverge at Delta1 = +/- delta."""


class ConfigError(KerrLossError):
    """Scenario configuration invalid; carries the full violation list."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))
