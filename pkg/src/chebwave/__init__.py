"""Chebyshev polynomial wavelet filter banks."""

__version__ = "0.1.0"

from .poly import PolyKind, chebyshev_t, chebyshev_u  # noqa: E402
from .filters import (  # noqa: E402
    FilterKind,
    FilterTaps,
    custom_taps,
    frequency_response,
    make_filter,
    make_type1,
    make_type2,
    make_type2_generalized,
)
from .laurent import LaurentPoly  # noqa: E402
from .filterbank import (  # noqa: E402
    FilterBank,
    alias_residual,
    analyze_bank,
    build_bank,
    distortion_product,
    even_shift_orthogonal,
)
from .cascade import (  # noqa: E402
    EigenSolverError,
    cascade_iterate,
    condition_e_sweep,
    markov_analysis,
    spectrum,
    transition_matrix,
)
from .dwt import BoundaryMode, DecompositionTree, analyze, reconstruction_error, synthesize  # noqa: E402
from .denoise import DenoiseConfig, ThresholdMode, denoise, estimate_sigma, shrink  # noqa: E402

__all__ = [
    "PolyKind", "chebyshev_t", "chebyshev_u",
    "FilterKind", "FilterTaps", "custom_taps", "frequency_response", "make_filter",
    "make_type1", "make_type2", "make_type2_generalized",
    "LaurentPoly",
    "FilterBank", "alias_residual", "analyze_bank", "build_bank", "distortion_product",
    "even_shift_orthogonal",
    "EigenSolverError", "cascade_iterate", "condition_e_sweep", "markov_analysis",
    "spectrum", "transition_matrix",
    "BoundaryMode", "DecompositionTree", "analyze", "reconstruction_error", "synthesize",
    "DenoiseConfig", "ThresholdMode", "denoise", "estimate_sigma", "shrink",
]
