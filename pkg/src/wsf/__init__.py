"""Exact analysis toolkit for weighted-sum Boolean functions.

Evaluates the simplified (mod-m) and original (prime-modulus) weighted-sum
functions, their weight, sensitivity and Walsh spectra, subset-sum counts
over Z_m with character-sum deviation bounds, and the distinct-coordinate
permutation sieve.  Everything countable is computed exactly.
"""
from .core import (
    DEFAULT_M_CAP,
    FunctionSpec,
    ResourceLimitError,
    TruthTable,
    Variant,
    decode,
    encode,
    eval_f,
    eval_g,
    evaluate,
    smallest_prime_geq,
    truth_table,
    truth_table_gray,
    weighted_index_s,
    weighted_index_u,
)
from .measures import (
    SensitivityReport,
    TrendPoint,
    WeightIdentityReport,
    avg_sensitivity_trend,
    pointwise_sensitivity,
    sensitivity_report,
    weight,
    weight_identity_check,
)
from .spectrum import (
    Spectrum,
    SpectrumSummary,
    Table1Row,
    compute_gamma_report,
    compute_rho,
    fourier_coefficient_naive,
    log_cos_integral,
    round_half_away,
    summarize,
    table1,
    walsh_transform,
)
from .cyclic import (
    BoundReport,
    CharacterIndex,
    CountTable,
    ResidueSet,
    ZeroSumScanReport,
    character_sum,
    characters,
    count_all_sizes,
    count_subset_sums,
    count_subset_sums_bruteforce,
    phi_of_D,
    theorem31_report,
    zero_sum_check,
    zero_sum_scan,
    zero_sum_threshold,
)
from .sieve import (
    Lemma23Report,
    PermutationType,
    TupleSet,
    distinct_tuple_sum,
    enumerate_types,
    falling_factorial,
    generalized_binomial,
    generating_function_Ck,
    lemma23_check,
    sieve_distinct_sum,
    symmetric_sieve,
)

__version__ = "0.1.0"
