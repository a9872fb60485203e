"""Exact h-expansions and equivalence classes of m-regular thickened ribbons."""

from .shapes import (
    Composition,
    CoarsePair,
    OneDotRibbon,
    Partition,
    SkewShape,
    ThickRibbon,
    antipodal,
    as_thick,
    coarsenings,
    composition_from_cuts,
    conjugate,
    cut_set,
    parse_one_dot,
    parse_ribbon,
    partitions_of,
    reverse,
    sorted_partition,
    to_skew_shape,
    transpose,
)
from .expand import (
    HExpansion,
    equivalent,
    expand,
    expand_determinant,
    expand_poset,
    expand_recursive,
)
from .tableaux import (
    KostkaVector,
    count_standard_tableaux,
    equivalent_by_kostka,
    kostka_vector,
)
from .structure import (
    IntegerClasses,
    SignTable,
    Taxonomy,
    classify,
    classify_equal,
    classify_unequal,
    element_type,
    integer_classes,
    is_canonical,
    period,
    recovered_components,
    sign_table,
    sign_table_from_coarsenings,
)
from .factor import (
    Factorization,
    Orbit,
    RibbonType,
    compose,
    equivalence_orbit,
    factorize,
    ribbon_type,
)
from .verify import (
    VerificationReport,
    all_diagrams,
    check_lambda_invariance,
    check_theorem,
    check_transpose_duality,
    equivalence_classes,
    undetermined_elements,
)
