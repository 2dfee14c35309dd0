"""Exact invariants and classification of maximal families of space curves
lying on smooth surfaces that contain a line."""

__version__ = "0.1.0"

from .picard import (  # noqa: E402
    CohomologyAnswer,
    DivisorClass,
    SurfaceContext,
    chi_surface,
    degree,
    genus,
    h1_ideal,
    h1_surface,
    has_smooth_irreducible_member,
    intersect,
    is_base_point_free,
    is_effective,
    is_nef,
)
from .maxgenus import MaxGenusAnswer, Regime, fixture_AB, max_genus  # noqa: E402
from .classifier import (  # noqa: E402
    Case,
    ComponentStatus,
    CriticalFamily,
    FamilyReport,
    classify,
    dim_a1_minus_a2,
    dim_w,
)
from .cubic import (  # noqa: E402
    Existence,
    RangeVerdict,
    SevenTuple,
    bound_ordering,
    conjecture_range,
    enumerate_tuples,
    existence_48,
    existence_aux,
    existence_witness,
    gap_integers,
    lemma43_flags,
    mainC_check,
    proven_range,
    range_verdict,
    tuple_invariants,
)
from .audit import (  # noqa: E402
    AuditCase,
    audit_case,
    chi_ideal,
    clifford_h0_upper,
    linkage_transform,
    maxrank_h0N,
    ncb_chi,
    prop45_bound,
    serre_moduli_dim,
)
