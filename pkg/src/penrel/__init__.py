"""Finite relational models of the noncommutative theory of Penrose tilings."""

from .relalg import (
    DimensionError,
    Relation,
    connected_components,
    equivalence_closure,
    join,
)
from .seqspace import TruncSeq, cylinder, enumerate_seqs, is_admissible, tail_equal
from .theory import (
    Generator,
    ParseError,
    Sequent,
    Term,
    instantiate_pens,
    instantiate_pent,
    parse_sequent,
    parse_term,
    print_term,
    rename_pent_to_pens,
)
from .reptheory import (
    ClassificationReport,
    EquivalenceResult,
    NotAModelError,
    NotSaturatedError,
    RelRep,
    SigmaSpec,
    TruncationError,
    UnsupportedError,
    are_equivalent,
    cantor_rep,
    check_sequent,
    check_theory,
    classify,
    decompose,
    eval_term,
    induced_from_sigma,
    is_equivalence_bijection,
    rep_from_json,
    rep_to_json,
    seq_module_hom_check,
    seq_of_state,
    sum_reps,
)
from .tiling import (
    BoundaryError,
    OutOfFragmentError,
    SvgOptions,
    TileTree,
    geometric_rep,
    inflate,
    leaf_address,
    leaf_to_seq,
    matching_check,
    point_to_sequence,
    render_svg,
)

__version__ = "0.1.0"
