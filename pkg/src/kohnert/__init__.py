"""Exact combinatorics of Kohnert diagrams, key and lock tableaux, their
generating polynomials and crystals, and the unlock map between them."""

from .core import (
    Cell,
    Composition,
    Diagram,
    TheoremViolation,
    composition,
    flatten,
    key_diagram,
    kohnert_closure,
    kohnert_move,
    lock_diagram,
    padded_weight,
    weight,
)
from .crystal import (
    CrystalGraph,
    VerticalPairing,
    character,
    crystal_graph,
    is_connected,
    lower_diagram,
    lower_kkt,
    lower_lkt,
    raise_diagram,
    raise_kkt,
    raise_lkt,
    vertical_pairing,
)
from .poly import (
    SparsePolynomial,
    SymmetryProfile,
    classify_symmetry,
    is_monomial_positive,
    is_quasisymmetric,
    is_symmetric,
    key_polynomial,
    lock_polynomial,
    render_text,
    schur_polynomial,
    subtract,
)
from .tableaux import (
    LabeledDiagram,
    enumerate_kkt,
    enumerate_lkt,
    label_key,
    label_lock,
    lock_source_tableau,
    truncate_below,
    validate_kkt,
    validate_lkt,
)
from .unlock import (
    HorizontalPairing,
    LabelString,
    Schedule,
    UnlockStep,
    UnlockTrace,
    apply_rectification,
    apply_unlock,
    build_schedule,
    horizontal_pairing,
    left_justified,
    m_max,
    m_statistic,
    rectify,
    rectify_by_pairing,
    rectify_move,
    schedule_groups,
    strings_of,
    unlock_image,
    unlock_map,
    unlock_op,
)
from .verify import (
    ALL_CHECKS,
    DEFAULT_RANGE,
    SPOT_COMPOSITIONS,
    SweepRange,
    VerificationReport,
    check_agreement_and_truncation,
    check_characterizations,
    check_connectivity,
    check_intertwining,
    check_positivity,
    run_checks,
)

__all__ = [name for name in dir() if not name.startswith("_")]
