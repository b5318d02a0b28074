"""Geometric progressions of palindromes and divisibility counts.

A rational non-integer ratio makes terms non-integral after finitely many
steps; an integer ratio ``r`` with more digits than the first term ``a``
forces the density of palindromes divisible by ``a * r**k`` below one. This
module computes each quantity in that argument exactly.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .ap_analysis import ScanReport
from .digits import digit_count, is_palindrome
from .errors import CapExceeded, PreconditionFailed
from .palindrome_seq import count_with_digits, palindromes_with_digits

DEFAULT_GP_CAP = 10**4
DEFAULT_MAX_ENUM_L = 13
# a and r are assumed coprime to each of these
EXCLUDED_PRIMES = (2, 3, 5, 11)


@dataclass(frozen=True)
class GPSpec:
    first: int
    ratio: int

    def __post_init__(self):
        if self.first < 1:
            raise PreconditionFailed(f"first term must be >= 1, got {self.first}")
        if self.ratio < 2:
            raise PreconditionFailed(f"ratio must be >= 2, got {self.ratio}")

    @property
    def first_digits(self) -> int:
        return digit_count(self.first)

    @property
    def ratio_digits(self) -> int:
        return digit_count(self.ratio)

    def term(self, k: int) -> int:
        return self.first * self.ratio**k


@dataclass(frozen=True)
class DigitIndex:
    exact: int
    approximate: Optional[int]


@dataclass(frozen=True)
class AlphaComparison:
    """``alpha < 1`` decided as ``ratio**2 > 10**(L+R-2)``."""

    below_one: bool
    ratio_squared: int
    power_of_ten: int


@dataclass(frozen=True)
class DivisibilityCount:
    digit_length: int
    modulus: int
    exact_count: int
    main_term: Fraction

    @property
    def relative_deviation(self) -> Fraction:
        return abs(self.exact_count - self.main_term) / self.main_term


def integrality_failure_index(a: int, ratio: Fraction) -> int:
    """First ``s >= 1`` for which ``a * ratio**s`` is not an integer.

    With ``ratio = p/q`` in lowest terms, ``q**s`` divides ``a * p**s`` exactly
    when it divides ``a``, so this is the smallest ``s`` with ``q**s`` not
    dividing ``a``.
    """
    ratio = Fraction(ratio)
    if a < 1:
        raise PreconditionFailed(f"a must be >= 1, got {a}")
    if ratio <= 0:
        raise PreconditionFailed(f"ratio must be positive, got {ratio}")
    if ratio.denominator == 1:
        raise PreconditionFailed(f"ratio {ratio} is an integer; every term is integral")
    q = ratio.denominator
    s = 1
    power = q
    while a % power == 0:
        s += 1
        power *= q
    return s


def approximate_index_bound(gp: GPSpec, lam: int) -> int:
    """``ceil(lam * L / (L + R - 2))``, the rough index where terms reach ``lam * L`` digits."""
    L, R = gp.first_digits, gp.ratio_digits
    if L + R <= 2:
        raise PreconditionFailed("L + R - 2 is zero for a one-digit first term and ratio")
    return -(-lam * L // (L + R - 2))


def min_index_for_digits(gp: GPSpec, lam: int) -> DigitIndex:
    """Smallest ``k`` with ``first * ratio**k`` having at least ``lam * L`` digits.

    Also carries the rough closed-form bound, or ``None`` when ``L + R <= 2``.
    """
    if lam < 1:
        raise PreconditionFailed(f"lambda must be >= 1, got {lam}")
    threshold = 10 ** (lam * gp.first_digits - 1)
    k = 0
    term = gp.first
    while term < threshold:
        term *= gp.ratio
        k += 1
    approximate = None
    if gp.first_digits + gp.ratio_digits > 2:
        approximate = approximate_index_bound(gp, lam)
    return DigitIndex(k, approximate)


def _max_enum_length() -> int:
    value = os.environ.get("PALINSEQ_MAX_ENUM_L")
    return int(value) if value else DEFAULT_MAX_ENUM_L


def _place_weights(length: int) -> list[int]:
    # place value contributed by each free (leading-half) digit
    h = (length + 1) // 2
    weights = []
    for j in range(h):
        hi, lo = length - 1 - j, j
        weights.append(10**hi + (10**lo if lo != hi else 0))
    return weights


def _block_residues(weights: list[int], q: int, leading: bool) -> np.ndarray:
    residues = np.zeros(1, dtype=np.int64)
    for j, w in enumerate(weights):
        digits = np.arange(1 if leading and j == 0 else 0, 10, dtype=np.int64)
        residues = ((residues[:, None] + digits[None, :] * (w % q)) % q).ravel()
    return residues


def count_palindromes_divisible(length: int, q: int, max_length: Optional[int] = None) -> DivisibilityCount:
    """Exact number of ``length``-digit palindromes divisible by ``q``.

    Every palindrome is visited once through its free leading half, which is
    split into a high block and a low block of digits; the residue of each
    palindrome is the sum of one residue from each block. Blocks are paired
    in chunks, so the work is ``9 * 10**(ceil(length/2) - 1)`` residue tests.
    """
    if length < 1:
        raise PreconditionFailed(f"digit length must be >= 1, got {length}")
    if q < 2:
        raise PreconditionFailed(f"modulus must be >= 2, got {q}")
    limit = _max_enum_length() if max_length is None else max_length
    if length > limit:
        raise PreconditionFailed(f"digit length {length} exceeds the enumeration bound {limit}")

    total = count_with_digits(length)
    if q >= 2**31:
        exact = sum(1 for p in palindromes_with_digits(length) if p % q == 0)
    else:
        weights = _place_weights(length)
        split = (len(weights) + 1) // 2
        high = _block_residues(weights[:split], q, leading=True)
        low = _block_residues(weights[split:], q, leading=False)
        rows = max(1, 2_000_000 // low.size)
        exact = 0
        for start in range(0, high.size, rows):
            block = high[start : start + rows]
            exact += int(np.count_nonzero((block[:, None] + low[None, :]) % q == 0))
    return DivisibilityCount(length, q, exact, Fraction(total, q))


def alpha_ratio(gp: GPSpec) -> AlphaComparison:
    """Decide ``10**(L/2) / ratio**(L/(L+R-2)) < 1`` with integers only.

    Raising both sides to the power ``2(L+R-2)/L`` gives the equivalent
    ``10**(L+R-2) < ratio**2``.
    """
    L, R = gp.first_digits, gp.ratio_digits
    if L + R <= 2:
        raise PreconditionFailed("alpha is undefined when L + R - 2 = 0")
    lhs = gp.ratio**2
    rhs = 10 ** (L + R - 2)
    return AlphaComparison(lhs > rhs, lhs, rhs)


def subsequence_exponent(gp: GPSpec) -> int:
    """Smallest ``B >= 1`` such that ``ratio**B`` has more digits than ``first``."""
    threshold = 10**gp.first_digits
    b = 1
    power = gp.ratio
    while power < threshold:
        power *= gp.ratio
        b += 1
    return b


def satisfies_gcd_condition(n: int) -> bool:
    return all(n % p for p in EXCLUDED_PRIMES)


def gp_scan(gp: GPSpec, check_gcd: bool = False, cap: int = DEFAULT_GP_CAP) -> ScanReport:
    """Smallest ``i`` with ``first * ratio**i`` not a palindrome.

    No index bound is known for geometric progressions, so the scan stops
    after ``cap`` terms with CapExceeded.
    """
    if check_gcd:
        for name, value in (("first", gp.first), ("ratio", gp.ratio)):
            if not satisfies_gcd_condition(value):
                raise PreconditionFailed(
                    f"{name}={value} shares a factor with 2*3*5*11 (gcd {math.gcd(value, 330)})"
                )
    if cap < 1:
        raise PreconditionFailed(f"cap must be >= 1, got {cap}")
    term = gp.first
    for i in range(cap):
        if not is_palindrome(term):
            return ScanReport(i, term, i + 1, cap)
        term *= gp.ratio
    raise CapExceeded(f"first {cap} terms are all palindromes", terms_checked=cap, cap_used=cap)
