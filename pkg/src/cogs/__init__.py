"""
cogs: cyclic orthonormal generators in R^N.

A vector is a cyclic orthonormal generator (cog) when it and its N - 1
cyclic shifts form an orthonormal basis of R^N.
"""

from .core import (
    Tolerance,
    as_real_vector,
    canonical_angle,
    cycle,
    cyclic_autocorrelation,
    cyclic_trig_sums,
    dft,
    star_index,
)
from .errors import (
    AmbiguousProjectionError,
    CogError,
    CorruptedCogError,
    EnumerationTooLargeError,
    InvalidArgumentError,
    InvalidDimensionError,
    InvalidParamsError,
    InvalidShiftError,
    InvariantBreachError,
    NotACogError,
    PhaseConstraintError,
)
from .extract import ExtractionResult, canonical_form, circle_coords, extract_phases
from .space import SamplerConfig, enumerate_grid, manifold_dim, nearest_cog, sample_cog, sample_cogs
from .synth import Branch, FreePhaseParams, PhaseRepresentation, complete_phases, synthesize, validate_phases
from .verify import (
    CogVector,
    VerificationReport,
    component_sum_sign,
    gram_matrix,
    is_cog_direct,
    is_cog_gram,
    is_cog_spectral,
    methods_agree,
    verify,
)

__version__ = "0.1.0"
