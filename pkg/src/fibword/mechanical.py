"""The infinite Fibonacci word through Beatty sequences.

Positions k (1-based) carry 0 when k = floor(m*phi) and 1 when
k = floor(m*phi^2); Beatty's theorem makes that a total, unambiguous
labelling.  Counts, densities and discrepancies are all exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .claimresult import ClaimResult, refuted, verified
from .goldenexact import (
    INV_PHI,
    INV_PHI_SQUARED,
    Surd,
    beatty_phi,
    beatty_phi2,
    fraction_decimal,
    int_surd_sign,
    isqrt,
    surd_decimal,
)
from .morphism import fibonacci_morphism, fixed_point_prefix
from .words import BINARY, Word


def mechanical_prefix(n: int) -> Word:
    """Length-n prefix of the Fibonacci word, by merging the two Beatty streams."""
    if n < 1:
        raise ValueError("prefix length must be >= 1")
    cells: list[str] = [""] * n
    m = 1
    while True:
        p = beatty_phi(m)
        if p > n:
            break
        cells[p - 1] = "0"
        m += 1
    m = 1
    while True:
        p = beatty_phi2(m)
        if p > n:
            break
        cells[p - 1] = "1"
        m += 1
    return Word(BINARY, "".join(cells))


def count_ones_upto(n: int) -> int:
    """Ones in the length-n prefix: floor((n+1)/phi^2), via integer isqrt.

    (n+1)/phi^2 = (n+1)(3 - sqrt5)/2, and sqrt(5(n+1)^2) is irrational,
    so floor(3N - sqrt(5 N^2)) = 3N - isqrt(5 N^2) - 1 with N = n + 1.
    """
    if n < 1:
        raise ValueError("prefix length must be >= 1")
    big_n = n + 1
    return (3 * big_n - isqrt(5 * big_n * big_n) - 1) // 2


def count_zeros_upto(n: int) -> int:
    return n - count_ones_upto(n)


def ones_target(n: int) -> Surd:
    """n / phi^2 as an exact surd."""
    return INV_PHI_SQUARED * n


def ones_deviation(n: int) -> Surd:
    """count_ones_upto(n) - n/phi^2, exactly."""
    return Surd.from_rational(count_ones_upto(n)) - ones_target(n)


@dataclass(frozen=True)
class DensityReport:
    """Exact symbol statistics for a length-n prefix."""

    n: int
    count0: int
    count1: int
    density0: Fraction
    density1: Fraction
    target1: Surd
    deviation1: Surd
    deviation0: Surd

    def decimals(self, places: int = 6) -> dict[str, str]:
        """Decimal renderings by exact digit extraction (round-half-even)."""
        return {
            "density0": fraction_decimal(self.density0, places),
            "density1": fraction_decimal(self.density1, places),
            "target1": surd_decimal(self.target1, places),
            "deviation1": surd_decimal(self.deviation1, places),
        }


def density_report(n: int) -> DensityReport:
    if n < 1:
        raise ValueError("prefix length must be >= 1")
    ones = count_ones_upto(n)
    zeros = n - ones
    target1 = ones_target(n)
    deviation1 = Surd.from_rational(ones) - target1
    deviation0 = Surd.from_rational(zeros) - INV_PHI * n
    return DensityReport(
        n=n,
        count0=zeros,
        count1=ones,
        density0=Fraction(zeros, n),
        density1=Fraction(ones, n),
        target1=target1,
        deviation1=deviation1,
        deviation0=deviation0,
    )


def max_discrepancy(limit: int) -> tuple[Surd, int]:
    """sup over 1 <= n <= limit of |count1(n) - n/phi^2|, with the first argmax.

    The sweep stays in integers: twice the deviation at n is p + q*sqrt5
    with p = 2*count1 - 3n and q = n, and magnitudes are compared through
    their squares (p^2 + 5q^2) + 2pq*sqrt5, again integer pairs.
    """
    if limit < 1:
        raise ValueError("sweep bound must be >= 1")
    count1 = 0
    m = 1
    upcoming = beatty_phi2(1)
    best_sq = (0, 0)
    best_pq = (0, 0)
    best_n = 0
    for n in range(1, limit + 1):
        if n == upcoming:
            count1 += 1
            m += 1
            upcoming = beatty_phi2(m)
        p = 2 * count1 - 3 * n
        q = n
        sq = (p * p + 5 * q * q, 2 * p * q)
        if best_n == 0 or int_surd_sign(sq[0] - best_sq[0], sq[1] - best_sq[1]) > 0:
            best_sq = sq
            best_pq = (p, q)
            best_n = n
    value = abs(Surd(Fraction(best_pq[0], 2), Fraction(best_pq[1], 2)))
    return value, best_n


def verify_beatty_partition(limit: int) -> ClaimResult:
    """Each k <= limit must be hit exactly once across the two Beatty sequences."""
    claim_id = "beatty-partition"
    location = "complementary Beatty sequences for phi and phi^2 partition the positive integers"
    if limit < 1:
        raise ValueError("sweep bound must be >= 1")
    hits = bytearray(limit + 1)
    for floor_fn in (beatty_phi, beatty_phi2):
        m = 1
        while True:
            p = floor_fn(m)
            if p > limit:
                break
            hits[p] += 1
            m += 1
    for k in range(1, limit + 1):
        if hits[k] != 1:
            return refuted(
                claim_id,
                location,
                f"k={k} is hit {hits[k]} times",
                first_bad_k=k,
                hit_count=hits[k],
                n_checked=limit,
            )
    return verified(
        claim_id,
        location,
        f"every k <= {limit} is hit exactly once",
        n_checked=limit,
    )


def morphic_mechanical_agree(n: int) -> ClaimResult:
    """Fixed point of 0->01, 1->0 versus the Beatty labelling, symbol by symbol."""
    claim_id = "morphic-mechanical-agreement"
    location = "the morphic fixed point equals the mechanical (Beatty) word"
    if n < 1:
        raise ValueError("prefix length must be >= 1")
    morphic = fixed_point_prefix(fibonacci_morphism(), "0", n).text
    mechanical = mechanical_prefix(n).text
    if morphic == mechanical:
        return verified(
            claim_id,
            location,
            f"prefixes of length {n} are identical",
            n_checked=n,
        )
    k = next(i for i, (x, y) in enumerate(zip(morphic, mechanical)) if x != y)
    return refuted(
        claim_id,
        location,
        f"first mismatch at index {k}: morphic {morphic[k]} vs mechanical {mechanical[k]}",
        first_mismatch_index=k,
        n_checked=n,
    )
