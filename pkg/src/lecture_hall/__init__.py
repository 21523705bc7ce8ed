"""Hilbert bases of s-lecture hall cones.

Closed-form constructions for the 1 mod k, l-sequence and low-dimensional
u-generated Gorenstein families, a brute-force oracle to check them against,
exact Ehrhart counts for the lecture hall polytopes, and Gorenstein points.
"""

from .core import (
    DimensionError,
    Grading,
    HilbertBasis,
    InvalidSequenceError,
    Sequence,
    cone_contains,
    degree,
    l_sequence,
    make_sequence,
    modk_sequence,
    normalize_sequence,
    ray_generators,
    sequence_from_u,
)
from .closed_form import (
    Custom,
    Dim2,
    Dim3,
    Dim4,
    LSeq,
    ModK,
    basis_gorenstein_dim2,
    basis_gorenstein_dim3,
    basis_gorenstein_dim4,
    basis_lseq,
    basis_modk,
    closed_form_for,
)
from .ehrhart import cardinality_formula, count_P, count_R, ehrhart_modk
from .gorenstein import (
    GorensteinCertificate,
    detect_u_generated,
    gorenstein_point,
    gorenstein_recurrence,
)
from .oracle import (
    BudgetExceededError,
    VerificationReport,
    fundamental_box_points,
    generates_up_to,
    hilbert_basis_oracle,
    interior_points_up_to,
    is_reducible,
    verify_gorenstein_shift,
)

__version__ = "0.1.0"
