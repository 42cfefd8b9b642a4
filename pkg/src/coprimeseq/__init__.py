"""The increasing sequence of all integers coprime to a fixed modulus."""
from .numtheory import EulerSet, FactoredModulus, ModulusError, euler_set, factor
from .sequence import (
    SequenceParams,
    VerificationReport,
    eval_closed,
    eval_recurrence,
    oracle,
    sequence_params,
    shift_between,
    verify_window,
)
from .fourier import (
    FourierExpansion,
    ResidueTable,
    density_limit,
    eval_exact,
    eval_fourier,
    solve_coefficients,
)
from .genfunc import SeriesExpansion, expand_gf, gf_vs_sequence

__version__ = "0.1.0"
