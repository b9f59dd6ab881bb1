"""Exact invariants of numerical semigroups and the identities relating them.

The library computes gap sets, Hilbert numerators, alternating syzygy power
sums, and the universal symmetric polynomials that tie them together, all in
exact rational arithmetic, and verifies the connecting identities as literal
equalities.
"""

from .exact import (
    BadConstantTerm,
    IntPolynomial,
    NonExactDivision,
    NonInvertibleConstantTerm,
    Rational,
    RationalSeries,
    exp_series,
)
from .hilbert import (
    HilbertData,
    SyzygyValues,
    alternating_syzygy_sum,
    alternating_syzygy_sums,
    gap_polynomial,
    hilbert_numerator,
    k_invariant,
    product_polynomial,
    syzygy_values,
)
from .semigroup import (
    BoundExceeded,
    EmptyGenerators,
    GapData,
    GcdNotOne,
    GeneratorStats,
    NonPositiveGenerator,
    SemigroupSpec,
    apery_set,
    compute_gaps,
    gap_power_sum,
    gap_power_sums,
    generator_stats,
    make_semigroup,
)
from .universal import (
    SigmaPolynomial,
    ZeroVariable,
    bernoulli,
    delta_egf,
    lambda_table,
    sigma_egf,
    subset_power_sum,
    t_delta,
    t_symbolic,
    t_value,
    umbral_power,
    umbral_series,
    zigzag,
)
from .verify import (
    CheckRecord,
    VerificationReport,
    random_semigroup,
    verify_companions,
    verify_fel_main,
    verify_low_order,
    verify_m2_closed_form,
    verify_semigroup,
    verify_series_lemmas,
    verify_thm_kp,
)

__version__ = "0.1.0"

__all__ = [
    "BadConstantTerm",
    "BoundExceeded",
    "CheckRecord",
    "EmptyGenerators",
    "GapData",
    "GcdNotOne",
    "GeneratorStats",
    "HilbertData",
    "IntPolynomial",
    "NonExactDivision",
    "NonInvertibleConstantTerm",
    "NonPositiveGenerator",
    "Rational",
    "RationalSeries",
    "SemigroupSpec",
    "SigmaPolynomial",
    "SyzygyValues",
    "VerificationReport",
    "ZeroVariable",
    "alternating_syzygy_sum",
    "alternating_syzygy_sums",
    "apery_set",
    "bernoulli",
    "compute_gaps",
    "delta_egf",
    "exp_series",
    "gap_polynomial",
    "gap_power_sum",
    "gap_power_sums",
    "generator_stats",
    "hilbert_numerator",
    "k_invariant",
    "lambda_table",
    "make_semigroup",
    "product_polynomial",
    "random_semigroup",
    "sigma_egf",
    "subset_power_sum",
    "syzygy_values",
    "t_delta",
    "t_symbolic",
    "t_value",
    "umbral_power",
    "umbral_series",
    "verify_companions",
    "verify_fel_main",
    "verify_low_order",
    "verify_m2_closed_form",
    "verify_semigroup",
    "verify_series_lemmas",
    "verify_thm_kp",
    "zigzag",
]
