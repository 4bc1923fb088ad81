"""Fibonacci word combinatorics with exact golden-ratio arithmetic.

Finite words and morphisms, the mechanical (Beatty) construction of the
Fibonacci word, derived word families over {a,b}, formal sums in Z<a,b>,
and a verifier that adjudicates quantitative claims about all of these
with exact witnesses.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .claimresult import REFUTED, VERIFIED, ClaimResult
from .claims import ALL_CLAIM_IDS, Budgets, run_all_claims
from .derived import (
    DensityRow,
    density_table,
    df_density,
    fib_word_ab,
    letter_counts_closed_form,
    letter_densities,
    q_word,
    y_word,
)
from .freealg import (
    AlgebraElement,
    alg_add,
    alg_mul,
    alg_scalar,
    alpha_identity_check,
    check_pow_invariance,
    pow_fib,
)
from .goldenexact import (
    INV_PHI,
    INV_PHI_SQUARED,
    PHI,
    PHI_BAR,
    PHI_SQUARED,
    SQRT5,
    Surd,
    ZeckendorfRep,
    base_b_digits,
    beatty_phi,
    beatty_phi2,
    fib,
    fib_code_valid,
    fib_m_step,
    fraction_decimal,
    isqrt,
    lucas,
    surd_decimal,
    surd_sign,
    zeckendorf_decode,
    zeckendorf_encode,
)
from .mechanical import (
    DensityReport,
    count_ones_upto,
    count_zeros_upto,
    density_report,
    max_discrepancy,
    mechanical_prefix,
    morphic_mechanical_agree,
    verify_beatty_partition,
)
from .morphism import (
    FixedPointStream,
    Morphism,
    apply,
    fibonacci_morphism,
    fixed_point_prefix,
    is_non_erasing,
    is_prolongable,
    mortal_letters,
)
from .words import (
    AB,
    BINARY,
    Alphabet,
    Word,
    ab_word,
    binary_word,
    concat,
    contains_factor,
    count_symbol,
    factor_set,
    is_partition_word,
    isolated_one_runs,
    location_set,
    ultrametric_distance,
    ultrametric_value,
)

__all__ = [name for name in dir() if not name.startswith("_")]
