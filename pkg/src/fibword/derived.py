"""Fibonacci-type word families over {a,b} and their letter statistics.

Three families share one recurrence (each word is the previous one followed
by the one before it):

  * y-words:   y_0 = a, y_1 = ab
  * framed:    q_m = a y_m b
  * fib-words: fw_1 = a, fw_2 = ab (so fw_k = y_{k-1})

Letter counts follow Fibonacci closed forms in classical indexing
(F_0 = 0, F_1 = 1) and are cross-checked against direct scans in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .goldenexact import fib, fraction_decimal
from .words import AB, Word

FAMILY_Y = "y"
FAMILY_Q = "q"
FAMILY_FIBAB = "fibab"
FAMILIES = (FAMILY_Y, FAMILY_Q, FAMILY_FIBAB)


def y_word(n: int) -> Word:
    """y_0 = a, y_1 = ab, y_n = y_{n-1} y_{n-2}; |y_n| = F(n+2)."""
    if n < 0:
        raise ValueError("y-word index must be >= 0")
    prev, cur = "a", "ab"
    if n == 0:
        return Word(AB, prev)
    for _ in range(n - 1):
        prev, cur = cur, cur + prev
    return Word(AB, cur)


def q_word(m: int) -> Word:
    """The framed word a y_m b, of length F(m+2) + 2."""
    if m < 1:
        raise ValueError("framed-word index must be >= 1")
    return Word(AB, "a" + y_word(m).text + "b")


def fib_word_ab(k: int) -> Word:
    """Finite Fibonacci words over {a,b}: a, ab, aba, abaab, abaababa, ..."""
    if k < 1:
        raise ValueError("Fibonacci word index must be >= 1")
    return y_word(k - 1)


def letter_counts_closed_form(family: str, index: int) -> tuple[int, int]:
    """(a-count, b-count) from the Fibonacci closed forms, classical indexing."""
    if family == FAMILY_Y:
        if index < 0:
            raise ValueError("y-word index must be >= 0")
        return fib(index + 1), fib(index)
    if family == FAMILY_Q:
        if index < 1:
            raise ValueError("framed-word index must be >= 1")
        return fib(index + 1) + 1, fib(index) + 1
    if family == FAMILY_FIBAB:
        if index < 1:
            raise ValueError("Fibonacci word index must be >= 1")
        return fib(index), fib(index - 1)
    raise ValueError(f"unknown family {family!r}")


def letter_densities(family: str, index: int) -> tuple[Fraction, Fraction]:
    """Exact (a-density, b-density) of one family member."""
    a_count, b_count = letter_counts_closed_form(family, index)
    length = a_count + b_count
    return Fraction(a_count, length), Fraction(b_count, length)


def df_density(k: int) -> Fraction:
    """a-density of the k-th Fibonacci word: F(k)/F(k+1)."""
    if k < 1:
        raise ValueError("Fibonacci word index must be >= 1")
    return Fraction(fib(k), fib(k + 1))


@dataclass(frozen=True)
class DensityRow:
    """One row of the density table, exact rationals per family."""

    m: int
    dens_a_q: Fraction
    dens_b_q: Fraction
    dens_a_y: Fraction
    dens_b_y: Fraction

    def rendered(self, places: int = 6) -> tuple[str, str, str, str]:
        return (
            fraction_decimal(self.dens_a_q, places),
            fraction_decimal(self.dens_b_q, places),
            fraction_decimal(self.dens_a_y, places),
            fraction_decimal(self.dens_b_y, places),
        )


def density_table(m_max: int) -> list[DensityRow]:
    """Rows m = 3 .. m_max of exact letter densities for the q and y families."""
    if m_max < 3:
        raise ValueError("table needs m_max >= 3")
    rows = []
    for m in range(3, m_max + 1):
        qa, qb = letter_densities(FAMILY_Q, m)
        ya, yb = letter_densities(FAMILY_Y, m)
        rows.append(DensityRow(m=m, dens_a_q=qa, dens_b_q=qb, dens_a_y=ya, dens_b_y=yb))
    return rows
