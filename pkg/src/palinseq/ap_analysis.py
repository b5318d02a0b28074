"""Arithmetic progressions of palindromes.

Any AP with a positive difference eventually has a term that is not a
palindrome. Take ``m`` with ``10**m > d`` and ``10**(2m) >= first``. The
consecutive palindromes ``10**(2m) + 1`` and ``10**(2m) + 10**m + 1`` are more
than ``d`` apart, and the AP starts at or below the first of them, so the
first term past it lands strictly inside the gap. :func:`termination_cap`
turns that into an explicit index bound; :func:`ap_scan` finds the first
failure and checks it against the bound.

Not every gap between (2m+1)-digit palindromes is that large: when the pivot
and its neighbours are all 9 the carry runs outward and the gap can be as
small as 11 (19991 -> 20002). One wide gap is all the argument needs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from sympy import divisors

from .digits import is_palindrome
from .errors import CapExceeded, PreconditionFailed, TheoryViolation
from .palindrome_seq import next_palindrome


@dataclass(frozen=True)
class APSpec:
    first: int
    difference: int

    def __post_init__(self):
        if self.first < 1:
            raise PreconditionFailed(f"first term must be >= 1, got {self.first}")
        if self.difference < 1:
            raise PreconditionFailed(f"difference must be >= 1, got {self.difference}")

    def term(self, i: int) -> int:
        return self.first + i * self.difference


@dataclass(frozen=True)
class ScanReport:
    """First non-palindromic term of a progression.

    ``failing_index`` is 0-based; ``terms_checked`` counts the failing term too.
    """

    failing_index: int
    failing_term: int
    terms_checked: int
    cap_used: int


@dataclass(frozen=True)
class APWitness:
    first: int
    difference: int
    length: int

    @property
    def last(self) -> int:
        return self.first + (self.length - 1) * self.difference

    def terms(self) -> list[int]:
        return [self.first + i * self.difference for i in range(self.length)]

    def verify(self) -> bool:
        return self.length >= 2 and all(is_palindrome(t) for t in self.terms())


def termination_cap(ap: APSpec) -> int:
    """Index ``N`` such that some term with index ``< N`` is not a palindrome.

    ``m`` is the smallest integer with ``10**m > d`` and ``10**(2m) >= first``;
    all terms up to ``10**(2m+1)`` are covered by
    ``ceil((10**(2m+1) - first) / d) + 1``.
    """
    m = 0
    while 10**m <= ap.difference or 10 ** (2 * m) < ap.first:
        m += 1
    span = 10 ** (2 * m + 1) - ap.first
    return -(-span // ap.difference) + 1


def ap_scan(ap: APSpec, cap: Optional[int] = None) -> ScanReport:
    """Smallest index whose term is not a palindrome.

    Without ``cap`` the scan runs up to :func:`termination_cap` and raises
    TheoryViolation if it gets there, which would mean a bug. With a smaller
    ``cap`` the scan may stop early with CapExceeded.
    """
    proven = termination_cap(ap)
    limit = proven if cap is None else min(cap, proven)
    term = ap.first
    for i in range(limit):
        if not is_palindrome(term):
            return ScanReport(i, term, i + 1, proven)
        term += ap.difference
    if limit < proven:
        raise CapExceeded(
            f"no non-palindrome among the first {limit} terms", terms_checked=limit, cap_used=limit
        )
    raise TheoryViolation(f"{ap} stayed palindromic up to its proven cap {proven}")


def _all_palindromic(first: int, difference: int, count: int) -> bool:
    term = first
    for _ in range(count):
        if not is_palindrome(term):
            return False
        term += difference
    return True


def longest_palindromic_ap(first: int, last: int) -> APWitness:
    """Longest AP of palindromes starting at ``first`` and ending at ``last``.

    ``last`` can only be a term when the difference divides ``last - first``,
    so the search runs over those divisors in increasing order; the first one
    that keeps every term palindromic gives the most terms. ``d = last - first``
    always works, so the result has length at least 2.
    """
    if first >= last:
        raise PreconditionFailed(f"need first < last, got {first} >= {last}")
    for name, value in (("first", first), ("last", last)):
        if value < 1 or not is_palindrome(value):
            raise PreconditionFailed(f"{name}={value} is not a positive palindrome")
    span = last - first
    for d in divisors(span):
        count = span // d + 1
        if _all_palindromic(first, d, count):
            return APWitness(first, d, count)
    raise TheoryViolation("the two-term AP failed verification")


def exhaustive_ap_search(max_value: int, min_length: int, seed: Optional[int] = None) -> list[APWitness]:
    """All maximal all-palindrome APs with every term ``<= max_value``.

    Maximal means neither ``first - d`` (if positive) nor ``last + d`` (if
    within bound) is a palindrome. Candidates come from pairs of palindromes
    ``a < b`` as the first two terms. ``seed`` only shuffles the order in which
    first terms are tried; the result is always sorted by (first, difference).
    """
    if max_value < 1:
        raise PreconditionFailed(f"max_value must be >= 1, got {max_value}")
    if min_length < 3:
        raise PreconditionFailed(f"min_length must be >= 3, got {min_length}")
    pals = []
    p = 1
    while p <= max_value:
        pals.append(p)
        p = next_palindrome(p)
    pal_set = set(pals)

    order = list(range(len(pals)))
    if seed is not None:
        random.Random(seed).shuffle(order)

    found = []
    for ia in order:
        a = pals[ia]
        for b in pals[ia + 1 :]:
            d = b - a
            if a + (min_length - 1) * d > max_value:
                break
            if a - d in pal_set:
                continue
            length = 2
            term = b + d
            while term <= max_value and term in pal_set:
                length += 1
                term += d
            if length >= min_length:
                found.append(APWitness(a, d, length))
    found.sort(key=lambda w: (w.first, w.difference))
    return found
