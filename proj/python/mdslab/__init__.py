"""MDS and near-MDS codes over small finite fields: constructions, deep holes,
extensions and monomial equivalence."""

from ._mdslab import (  # noqa: F401
    Field,
    LinearCode,
    MdslabError,
    class1_is_deep_hole,
    class2_is_deep_hole,
    classify,
    covering_radius,
    deep_holes,
    dual,
    egrs,
    equivalent_to_some_grs,
    error_distance,
    esgrs,
    extend_by_deep_hole,
    forbidden_set,
    grs,
    is_zero_sum_free,
    min_distance,
    mkz_check,
    mkz_cost_bound,
    monomial_equivalent,
    puncture,
    reproduce,
    reproduce_ids,
    roth_lempel,
    schur_square,
    second_kind_extend,
    shorten,
    square_code_distinguisher,
    weight_distribution,
)

__version__ = "0.1.0"
