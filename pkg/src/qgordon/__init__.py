"""Exact-arithmetic toolkit for the Rogers-Ramanujan-Gordon circle of identities.

Four computation routes to the same graded dimensions, kept deliberately
independent so they can verify one another coefficient-by-coefficient:

* ``selberg.solve`` constructs the unique solution of the Rogers-Selberg
  q-difference system at a truncation window;
* ``qcombinat.andrews_gordon_multisum`` evaluates the closed multisum form;
* ``qcombinat.count_gordon_partitions`` / ``count_congruence_partitions``
  enumerate the partitions both sides of Gordon's identities count;
* ``ideal_quotient.hilbert_table`` recomputes the dimensions from the
  generators of a polynomial ideal by exact linear algebra.

Everything is integer-exact: comparisons are equalities, never tolerances.
"""

from .series import (
    BiSeries,
    from_terms,
    invert_one_minus_q_power,
    monomial,
    one,
    specialize_x,
    zero,
)
from .qcombinat import (
    GordonCondition,
    Partition,
    andrews_gordon_multisum,
    count_congruence_partitions,
    count_gordon_partitions,
    count_gordon_partitions_refined,
    gordon_product,
    inverse_pochhammer,
    iter_gordon_partitions,
    min_gordon_weight,
    pochhammer,
)
from .selberg import (
    RecursionFamily,
    WeightData,
    check_k2_example,
    check_recursions,
    check_rr_recursion,
    solve,
    unnormalize,
    weight_data,
)
from .ideal_quotient import (
    DimensionTable,
    GeneratorSet,
    YMonomial,
    count_partitions_exact,
    generator_set,
    hilbert_table,
    ideal_span_dimension,
    integer_matrix_rank,
    partitions_exact,
    quotient_dimension,
    r_polynomial,
)

__version__ = "0.1.0"

__all__ = [
    "BiSeries",
    "DimensionTable",
    "GeneratorSet",
    "GordonCondition",
    "Partition",
    "RecursionFamily",
    "WeightData",
    "YMonomial",
    "andrews_gordon_multisum",
    "check_k2_example",
    "check_recursions",
    "check_rr_recursion",
    "count_congruence_partitions",
    "count_gordon_partitions",
    "count_gordon_partitions_refined",
    "count_partitions_exact",
    "from_terms",
    "generator_set",
    "gordon_product",
    "hilbert_table",
    "ideal_span_dimension",
    "integer_matrix_rank",
    "inverse_pochhammer",
    "invert_one_minus_q_power",
    "iter_gordon_partitions",
    "min_gordon_weight",
    "monomial",
    "one",
    "partitions_exact",
    "pochhammer",
    "quotient_dimension",
    "r_polynomial",
    "solve",
    "specialize_x",
    "unnormalize",
    "weight_data",
    "zero",
]
