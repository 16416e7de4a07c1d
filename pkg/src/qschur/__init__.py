"""Composition tableaux, quasisymmetric Schur functions, and their
noncommutative duals, with exact arithmetic throughout."""

from .compositions import (
    ChainStep,
    Composition,
    canonical_key,
    comp_of_set,
    compositions_of,
    covers,
    down_covers,
    interval_chains,
    is_composition,
    is_contained,
    is_cover,
    is_partition,
    is_rev_contained,
    is_weak_composition,
    leq,
    partitions_of,
    refines,
    reverse,
    set_of,
    strong,
    underlying_partition,
    weak_compositions,
)
from .tableaux import (
    COMPOSITION,
    PARTITION,
    SkewShape,
    Tableau,
    canonical_sct,
    canonical_srt,
    chain_to_tableau,
    colseq,
    column_word,
    content,
    descent_composition,
    descents,
    destandardize,
    enumerate_semistandard,
    enumerate_standard,
    from_rows,
    join_split,
    make_tableau,
    row_constant_srt,
    split_tableau,
    standardize,
    straight,
    strip_kind,
    tableau_from_json,
    tableau_to_chain,
    to_json_dict,
    validate,
)
from .transforms import (
    c_class,
    c_equivalent,
    c_shape,
    insert_ssct,
    insert_ssrt,
    insertion_tableau,
    is_rigid_row_pair,
    p_move,
    p_shape,
    pack_columns,
    pack_columns_skew,
    q_move,
    rect,
    restricted_move_components,
    rsk,
    unpack_columns,
    unpack_columns_skew,
)
from .qsym import (
    GradedElement,
    TruncatedPolynomial,
    basis_element,
    convert,
    coproduct,
    element_from_json,
    element_to_json,
    from_polynomial,
    is_symmetric,
    let_variables_commute,
    multiply,
    qs_schur,
    schur_expansion,
    skew_qs_schur,
    sym_to_qsym,
    to_polynomial,
)
from .nsym import (
    StripReport,
    classical_lr,
    forget,
    lr_coeff,
    multiply_nc,
    pieri,
    product_nc_schur,
    strip_report,
)
from .applications import (
    LabeledCover,
    SetComposition,
    chi_nc,
    descent_pieri_K,
    knuth_class,
    kostka,
    labeled_chains,
    lift,
    m_pi_nc,
    m_pi_sym,
    ncqsym_to_polynomial,
    nsym_image,
    nsym_image_sum,
    pr_product,
    pr_product_words,
    project,
    qs_rs,
    s_rs,
    set_compositions,
    shape_of_blocks,
)

__version__ = "0.1.0"
