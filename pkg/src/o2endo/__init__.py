"""Exact-arithmetic classification of the endomorphisms of O_2
induced by permutation unitaries on two-letter words.

Everything runs over the rationals: finite linear combinations of
words s_alpha s_beta* with Fraction coefficients, reduced-echelon
subspaces of the finite matrix levels, and permutation arithmetic on
word indices.  No floating point appears anywhere in a verdict.
"""

__version__ = "0.1.0"

from .errors import (
    BadLevels,
    ConsistencyViolation,
    InconclusiveError,
    IndexOutOfRange,
    LevelTooSmall,
    NoStabilization,
    NonZeroGaugeDegree,
    NotDiagonal,
    NotUnitary,
    O2EndoError,
    RankUnsupported,
    UnknownFormat,
    WordError,
)
from .words import (
    AlgebraElement,
    adjoint,
    all_words,
    canonical_shift,
    canonicalize,
    equal_by_expansion,
    expanded_form,
    gauge_expectation,
    multiply,
    omega,
)
from .words import render as render_element
from .levels import (
    LevelMatrix,
    embed_to_level,
    expect_onto_level,
    matrix_from_flat,
    to_algebra_element,
)
from .linalg import Subspace, nullspace, rank, rref
from .perms import PermSpec, all_perm_specs, parse_perm, table_order_specs
from .endos import (
    NOT_FOUND_WITHIN_BOUND,
    Endomorphism,
    PermEndomorphism,
    ad_endomorphism,
    automorphism_order,
    endo_apply,
    endo_compose,
    make_endomorphism,
    permutation_unitary,
)
from .commutant import (
    CommutantWitness,
    commutant_dims,
    commutant_fixed_points,
    commutant_witness,
    uhf_commutant,
    uhf_commutant_dims,
)
from .xi import (
    Inapplicable,
    XiCertificate,
    condition_a,
    condition_b,
    jones_index_via_xi,
    xi_square_check,
    xi_subspace,
)
from .diagonal import (
    INCONCLUSIVE,
    CylinderSet,
    capture_depths,
    diagonal_image,
    is_diagonal_automorphism,
)
from .equivalence import (
    EquivalenceWitness,
    equivalence_classes,
    inner_equivalence_witness,
)
from .classify import (
    Classification,
    RelationCheck,
    RelationReport,
    classify,
    verify_paper_relations,
)
from .table import ReportDoc, TableRow, build_table, from_json, render
from .sweep import SweepRow, render_sweep, sweep

__all__ = [
    "__version__",
    "O2EndoError", "WordError", "NonZeroGaugeDegree", "LevelTooSmall",
    "BadLevels", "NotUnitary", "NotDiagonal", "RankUnsupported",
    "NoStabilization", "IndexOutOfRange", "ConsistencyViolation",
    "InconclusiveError", "UnknownFormat",
    "AlgebraElement", "adjoint", "all_words", "canonical_shift",
    "canonicalize", "equal_by_expansion", "expanded_form",
    "gauge_expectation", "multiply", "omega", "render_element",
    "LevelMatrix", "embed_to_level", "expect_onto_level",
    "matrix_from_flat", "to_algebra_element",
    "Subspace", "nullspace", "rank", "rref",
    "PermSpec", "all_perm_specs", "parse_perm", "table_order_specs",
    "NOT_FOUND_WITHIN_BOUND", "Endomorphism", "PermEndomorphism",
    "ad_endomorphism", "automorphism_order", "endo_apply", "endo_compose",
    "make_endomorphism", "permutation_unitary",
    "CommutantWitness", "commutant_dims", "commutant_fixed_points",
    "commutant_witness", "uhf_commutant", "uhf_commutant_dims",
    "Inapplicable", "XiCertificate", "condition_a", "condition_b",
    "jones_index_via_xi", "xi_square_check", "xi_subspace",
    "INCONCLUSIVE", "CylinderSet", "capture_depths", "diagonal_image",
    "is_diagonal_automorphism",
    "EquivalenceWitness", "equivalence_classes", "inner_equivalence_witness",
    "Classification", "RelationCheck", "RelationReport", "classify",
    "verify_paper_relations",
    "ReportDoc", "TableRow", "build_table", "from_json", "render",
    "SweepRow", "render_sweep", "sweep",
]
