"""Trace-based De Bruijn sequences, strips, tori and N-tori over finite fields."""

from .errors import TorusError
from .gf import FieldCtx, SubfieldPoly, make_field
from .ntorus import NTorus, build_ntorus, verify_sampling_nd
from .patterns import (
    Offset,
    Pattern,
    SamplingCertificate,
    UpdateMatrix,
    certificate,
    decode,
    elements_of,
    find_extension_shift,
    is_basis,
    is_independent,
    kronecker_pattern,
    recursive_build,
    update_matrix,
    verify_sampling,
)
from .sequence import DBSequence, Strip, db_sequence, feedback_vector, lfsr_extend, lift_to_full, shift_of, to_strip
from .torus import (
    ColumnReport,
    Torus,
    build_torus,
    classify_columns,
    extend_array,
    occurrence_counts,
    quadratic_criterion,
)

__version__ = "0.1.0"
