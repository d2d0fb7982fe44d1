"""Two-mode cross-Kerr dynamics under correlated and uncorrelated
Markovian loss: exact solutions, a brute-force Lindblad oracle, and
phase-space observables."""

__version__ = "0.1.0"

from .analytic import (KerrLossParams, LambdaRates, ValidityReport,
                       evolve_exact, f_function, lambda_system_rates,
                       long_time_state, purity_exact, short_time_state,
                       single_mode_decay)
from .correlated import (AsymptoticCatReport, CatReference, RotationFrame,
                         beamsplit_decoherence_evolve, beamsplitter_unitary,
                         conditioned_cat, correlated_cat_asymptotic,
                         lossless_cat_reference, negativity_trace,
                         rotate_state, rotation_frame)
from .errors import (ConfigError, DegenerateDetuning, DephasingUnsupported,
                     DimensionMismatch, GridCoverageError, KerrLossError,
                     NotFullyCorrelated, RateDecompositionError,
                     StepSizeUnderflow, SubspaceViolation, TruncationError,
                     UncorrelatedOnlyError, ZeroCoupling)
from .fock import (CoherentAmplitude, Diagnostics, FockCutoff,
                   SingleModeDensity, TwoModeDensity, coherent_density,
                   coherent_vector, destroy_op, expectation, fock_two_mode,
                   mode_op, number_op, partial_trace, purity, tensor_product,
                   validate)
from .lindblad import (JumpTerm, LindbladGenerator, build_collective_generator,
                       build_cross_kerr_generator, collective_mode,
                       generator_action, integrate, kerr_hamiltonian,
                       steady_state_probe)
from .observables import (MinWignerResult, PhaseSpaceGrid, ScalarField,
                          TimeSeries, bs_half_loss_wigner, min_wigner,
                          negativity, project_quadrature, q_function, wigner)

__all__ = [name for name in dir() if not name.startswith("_")]
